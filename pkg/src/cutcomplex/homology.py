"""Exact reduced simplicial homology over prime fields and the rationals.

Betti numbers come from ranks of boundary matrices in the augmented chain
complex (the empty face is a (-1)-chain, so the degree-0 boundary map is the
all-ones augmentation row).  Ranks are computed exactly: bit-packed
elimination over GF(2), vectorised modular elimination over GF(p), and
integer-preserving fraction-free elimination over the rationals.  No
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

from .simplicial import SimplicialComplex, link


@dataclass(frozen=True)
class Field:
    """Coefficient field: GF(p) for a prime characteristic, rationals for 0."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c == 0:
            return
        if c < 2 or any(c % d == 0 for d in range(2, isqrt(c) + 1)):
            raise ValueError(f"characteristic {c} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def name(self) -> str:
        return "rational" if self.is_rational else f"gf{self.characteristic}"


GF2 = Field(2)
GF3 = Field(3)
GF5 = Field(5)
RATIONALS = Field(0)

_FIELD_NAMES = {"gf2": GF2, "gf3": GF3, "gf5": GF5, "rational": RATIONALS}


def parse_field(name: str) -> Field:
    try:
        return _FIELD_NAMES[name]
    except KeyError:
        raise ValueError(f"unknown field {name!r}; expected one of {sorted(_FIELD_NAMES)}") from None


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers (beta_-1, beta_0, ..., beta_dim) over ``field``."""

    field: Field
    values: tuple[int, ...]

    def get(self, i: int) -> int:
        """beta_i, with 0 outside the stored range."""
        j = i + 1
        return self.values[j] if 0 <= j < len(self.values) else 0

    @property
    def top(self) -> int:
        return self.values[-1] if self.values else 0

    def to_record(self) -> dict:
        return {"field": self.field.name, "start_dim": -1, "values": list(self.values)}


def boundary_matrix(cx: SimplicialComplex, d: int) -> np.ndarray:
    """Boundary map from d-faces to (d-1)-faces as a dense integer matrix.

    Rows and columns are indexed by the lexicographically sorted face lists;
    the entry for dropping the vertex at position i of an ascending vertex
    tuple is (-1)**i.  For d == 0 this is the all-ones augmentation row.
    Out-of-range d gives the appropriately shaped empty matrix.
    """
    rows = cx.faces(d - 1)
    cols = cx.faces(d)
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if not rows or not cols:
        return mat
    row_index = {face: i for i, face in enumerate(rows)}
    for j, face in enumerate(cols):
        for i in range(len(face)):
            sub = face[:i] + face[i + 1 :]
            mat[row_index[sub], j] = -1 if i % 2 else 1
    return mat


def rank_gf2(mat: np.ndarray) -> int:
    """GF(2) rank via bit-packed column reduction (columns become Python ints)."""
    if mat.size == 0:
        return 0
    odd = (mat & 1) != 0
    cols = [0] * mat.shape[1]
    for i, j in zip(*np.nonzero(odd)):
        cols[j] |= 1 << int(i)
    pivots: dict[int, int] = {}
    rank = 0
    for v in cols:
        while v:
            b = v.bit_length() - 1
            other = pivots.get(b)
            if other is None:
                pivots[b] = v
                rank += 1
                break
            v ^= other
    return rank


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank over GF(p) by row-echelon elimination with vectorised row updates."""
    if mat.size == 0:
        return 0
    a = np.array(mat, dtype=np.int64) % p
    m, n = a.shape
    r = 0
    for c in range(n):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        if inv != 1:
            a[r, c:] = a[r, c:] * inv % p
        below = r + 1 + np.nonzero(a[r + 1 :, c])[0]
        if below.size:
            a[below, c:] = (a[below, c:] - a[below, c : c + 1] * a[r, c:]) % p
        r += 1
        if r == m:
            break
    return r


class _WordOverflow(Exception):
    pass


_I64_LIMIT = 1 << 62


def rank_exact(mat) -> int:
    """Rank over the rationals by exact integer elimination.

    Pivots of absolute value 1 give plain integer row reductions; otherwise
    the update is the fraction-free cross-multiplication
    ``row * pivot - entry * pivot_row`` followed by a gcd renormalisation of
    the row.  Every operation is integral.  A vectorised int64 path carries
    the load; it checks a worst-case bound before each update and restarts
    with unbounded Python integers if a word overflow could occur.
    """
    a = np.asarray(mat, dtype=object)
    if a.size == 0:
        return 0
    rows = [[int(x) for x in row] for row in a]
    peak = max(abs(x) for row in rows for x in row)
    if peak >= _I64_LIMIT:  # keeps np.abs well-defined inside the fast path
        return _rank_exact_bigint(rows)
    try:
        return _rank_exact_i64(np.array(rows, dtype=np.int64))
    except _WordOverflow:
        return _rank_exact_bigint(rows)


def _rank_exact_i64(a: np.ndarray) -> int:
    m, n = a.shape
    r = 0
    while r < m:
        sub = np.abs(a[r:, :])
        units = np.argwhere(sub == 1)
        if units.size:
            i, c = int(units[0][0]), int(units[0][1])
        else:
            if not sub.any():
                break
            masked = np.where(sub == 0, np.iinfo(np.int64).max, sub)
            i, c = np.unravel_index(int(np.argmin(masked)), masked.shape)
            i, c = int(i), int(c)
        i += r
        if i != r:
            a[[r, i]] = a[[i, r]]
        piv = int(a[r, c])
        below = a[r + 1 :, :]
        nz = np.nonzero(below[:, c])[0]
        if nz.size:
            prow = a[r]
            pmax = int(np.abs(prow).max())
            blk = below[nz]
            bmax = int(np.abs(blk).max())
            fmax = int(np.abs(below[nz, c]).max())
            if abs(piv) == 1:
                if bmax + fmax * pmax >= _I64_LIMIT:
                    raise _WordOverflow
                factors = below[nz, c] * piv  # piv**2 == 1
                below[nz] = blk - factors[:, None] * prow[None, :]
            else:
                if abs(piv) * bmax + fmax * pmax >= _I64_LIMIT:
                    raise _WordOverflow
                upd = blk * piv - below[nz, c][:, None] * prow[None, :]
                g = np.gcd.reduce(np.abs(upd), axis=1)
                g[g == 0] = 1
                below[nz] = upd // g[:, None]
        r += 1
    return r


def _rank_exact_bigint(rows: list[list[int]]) -> int:
    """Unbounded-integer mirror of the elimination; used past the int64 range."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    while r < m:
        best = None
        for i in range(r, m):
            for c in range(n):
                v = abs(rows[i][c])
                if v and (best is None or v < best[0]):
                    best = (v, i, c)
                    if v == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, c = best
        rows[r], rows[i] = rows[i], rows[r]
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, m):
            f = rows[i][c]
            if f == 0:
                continue
            if abs(piv) == 1:
                fp = f * piv
                row = [x - fp * y for x, y in zip(rows[i], prow)]
            else:
                row = [x * piv - f * y for x, y in zip(rows[i], prow)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                    if g == 1:
                        break
                if g > 1:
                    row = [x // g for x in row]
            rows[i] = row
        r += 1
    return r


def rank_over(mat: np.ndarray, field: Field) -> int:
    if field.is_rational:
        return rank_exact(mat)
    if field.characteristic == 2:
        return rank_gf2(mat)
    return rank_mod_p(mat, field.characteristic)


@lru_cache(maxsize=None)
def betti(cx: SimplicialComplex, field: Field = GF2) -> BettiVector:
    """Reduced Betti numbers of a non-void complex over the given field.

    beta_d = #(d-faces) - rank(boundary_d) - rank(boundary_{d+1}); the
    reduced Euler identity ties the result back to the face counts and is
    asserted on every computed vector.
    """
    if cx.is_void:
        raise ValueError("the void complex has no reduced chain complex")
    dim = cx.dim
    counts = {d: len(cx.faces(d)) for d in range(-1, dim + 1)}
    ranks = {d: rank_over(boundary_matrix(cx, d), field) for d in range(0, dim + 1)}
    ranks[dim + 1] = 0
    values = tuple(counts[d] - ranks.get(d, 0) - ranks[d + 1] for d in range(-1, dim + 1))
    assert all(v >= 0 for v in values)
    euler_faces = sum((-1) ** d * counts[d] for d in range(0, dim + 1))
    euler_betti = sum((-1) ** d * values[d + 1] for d in range(-1, dim + 1))
    assert euler_faces == 1 + euler_betti
    return BettiVector(field, values)


def is_p_acyclic(cx: SimplicialComplex, p: int, field: Field = GF2) -> bool:
    """True iff every reduced Betti number in degrees <= p vanishes."""
    bv = betti(cx, field)
    return all(bv.get(i) == 0 for i in range(-1, p + 1))


def is_cohen_macaulay(cx: SimplicialComplex, field: Field = GF2) -> bool:
    """Every face's link is acyclic up to one below its own dimension.

    Requires a pure, non-void complex; the empty face counts (its link is
    the whole complex).
    """
    if cx.is_void:
        raise ValueError("Cohen-Macaulay test needs a non-void complex")
    if not cx.is_pure:
        raise ValueError("Cohen-Macaulay test needs a pure complex")
    for d in range(-1, cx.dim + 1):
        for face in cx.faces(d):
            lk = link(cx, face)
            if not is_p_acyclic(lk, (lk.dim if lk.dim is not None else -1) - 1, field):
                return False
    return True
