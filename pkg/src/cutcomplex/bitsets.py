"""Small bitmask helpers shared by the graph and complex code.

Vertex subsets of {0, ..., n-1} are stored as Python integers with bit v
set for vertex v; subset/intersection tests are then single word operations
for n <= 64 and stay cheap well beyond that.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def make_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_tuple(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))
