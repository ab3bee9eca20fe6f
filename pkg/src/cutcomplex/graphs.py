"""Finite simple graphs on vertex set {0, ..., n-1}.

Adjacency is stored as one neighbour bitmask per vertex, so induced
subgraphs, connectivity queries and clique tests reduce to word operations.
Graphs are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitsets import iter_bits


class EdgeListError(ValueError):
    """Malformed edge-list text; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"edge list, line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class Graph:
    """Simple graph; ``adjacency[v]`` is the neighbour bitmask of vertex v.

    ``labels``, when present, maps the vertices of an induced subgraph back
    to the vertex names of the parent graph, so callers can report findings
    in the original coordinates.
    """

    n: int
    adjacency: tuple[int, ...]
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency table length does not match vertex count")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adjacency):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if (mask >> v) & 1:
                raise ValueError(f"vertex {v} has a self-loop")
        for v, mask in enumerate(self.adjacency):
            for u in iter_bits(mask):
                if not (self.adjacency[u] >> v) & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label table length does not match vertex count")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adjacency[v]))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as pairs (u, v) with u < v, sorted."""
        out = []
        for u in range(self.n):
            higher = self.adjacency[u] >> (u + 1)
            for d in iter_bits(higher):
                out.append((u, u + 1 + d))
        return out


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an iterable of (u, v) pairs."""
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def circulant(n: int, connection: set[int] | frozenset[int]) -> Graph:
    """Circulant graph: x ~ y iff (x - y) mod n lies in the connection set or its negation."""
    if n < 2:
        raise ValueError("circulant graphs need at least 2 vertices")
    diffs = set()
    for a in connection:
        if not (1 <= a <= n - 1):
            raise ValueError(f"connection value {a} outside [1, {n - 1}]")
        diffs.add(a)
        diffs.add(n - a)
    adj = []
    for x in range(n):
        mask = 0
        for d in diffs:
            mask |= 1 << ((x + d) % n)
        adj.append(mask)
    return Graph(n, tuple(adj))


def squared_cycle(n: int) -> Graph:
    """Cycle on n vertices plus all distance-2 chords: the circulant with connection {1, 2}."""
    if n < 3:
        raise ValueError("squared cycles need at least 3 vertices")
    return circulant(n, {1, 2})


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on ``vertices``, relabelled to 0..|U|-1.

    The returned graph carries ``labels`` mapping each new vertex back to
    its name in ``g``.
    """
    kept = sorted(set(vertices))
    for v in kept:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(kept)}
    adj = [0] * len(kept)
    for v in kept:
        for u in iter_bits(g.adjacency[v]):
            if u in index:
                adj[index[v]] |= 1 << index[u]
    return Graph(len(kept), tuple(adj), labels=tuple(kept))


def connected_within(g: Graph, mask: int) -> bool:
    """Is the induced subgraph on the vertex bitmask ``mask`` connected?

    The empty and one-vertex subgraphs count as connected.  Used as the
    inner loop of cut-complex construction, so it avoids building Graph
    objects: a flood fill over neighbour masks restricted to ``mask``.
    """
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.adjacency[v]
        frontier = grown & mask & ~seen
        seen |= frontier
    return seen == mask


def is_connected(g: Graph) -> bool:
    """True iff g has at most one connected component (0 and 1 vertices count as connected)."""
    return connected_within(g, (1 << g.n) - 1)


def is_chordal(g: Graph) -> bool:
    """True iff g admits a perfect elimination ordering.

    Repeatedly deletes a simplicial vertex (one whose remaining neighbours
    form a clique); the graph is chordal exactly when this empties it.
    """
    alive = (1 << g.n) - 1
    adj = g.adjacency
    while alive:
        for v in iter_bits(alive):
            nb = adj[v] & alive
            if _is_clique(adj, nb):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def _is_clique(adj: tuple[int, ...], mask: int) -> bool:
    for u in iter_bits(mask):
        if mask & ~(adj[u] | (1 << u)):
            return False
    return True


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n``, then lines ``u v`` with u < v.

    Blank lines and lines starting with ``#`` are ignored.  Raises
    :class:`EdgeListError` with the offending line number otherwise.
    """
    n = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise EdgeListError(line_no, "expected a single vertex count")
            try:
                n = int(parts[0])
            except ValueError:
                raise EdgeListError(line_no, f"vertex count {parts[0]!r} is not an integer") from None
            if n < 0:
                raise EdgeListError(line_no, "vertex count must be non-negative")
            continue
        if len(parts) != 2:
            raise EdgeListError(line_no, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(line_no, f"non-integer endpoint in {line!r}") from None
        if not (0 <= u < v < n):
            raise EdgeListError(line_no, f"edge ({u}, {v}) violates 0 <= u < v < {n}")
        edges.append((u, v))
    if n is None:
        raise EdgeListError(1, "missing vertex count line")
    return from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def full_mask(n: int) -> int:
    return (1 << n) - 1
