"""Simplicial complexes stored as sets of facet bitmasks.

A complex is determined by its inclusion-maximal faces.  Two degenerate
complexes are kept distinct: the *void* complex (no faces at all, not even
the empty face) and the *empty* complex (exactly the empty face).  The void
complex has dimension ``None``; the empty complex has dimension -1.

All facet-level machinery (shelling verification, shelling search, cut
complexes) works on bitmasks, so the pairwise checks that dominate runtime
are word operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .bitsets import bits_tuple, iter_bits, make_mask
from .graphs import Graph, connected_within, full_mask


class FacetFileError(ValueError):
    """Malformed facet-file text; ``line`` is the 1-based offending line."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"facet file, line {line}: {reason}")
        self.line = line
        self.reason = reason


@dataclass(frozen=True)
class SimplicialComplex:
    """Ground set {0, ..., n-1} plus the tuple of facet bitmasks.

    ``facet_masks`` must be strictly increasing and inclusion-maximal;
    use :func:`from_facets` to build a complex from arbitrary face lists.
    ``()`` is the void complex and ``(0,)`` the empty complex.
    """

    n: int
    facet_masks: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ground set size must be non-negative")
        top = full_mask(self.n)
        prev = -1
        for mask in self.facet_masks:
            if mask & ~top:
                raise ValueError("facet vertex out of range")
            if mask <= prev:
                raise ValueError("facet masks must be strictly increasing")
            prev = mask

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def is_empty(self) -> bool:
        """True for the empty complex, whose only face is the empty set."""
        return self.facet_masks == (0,)

    @property
    def dim(self) -> int | None:
        """Maximal face dimension; -1 for the empty complex, None for the void complex."""
        if self.is_void:
            return None
        return max(m.bit_count() for m in self.facet_masks) - 1

    @property
    def is_pure(self) -> bool:
        sizes = {m.bit_count() for m in self.facet_masks}
        return len(sizes) <= 1

    @property
    def facets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(iter_bits(m)) for m in self.facet_masks)

    @property
    def support_mask(self) -> int:
        mask = 0
        for m in self.facet_masks:
            mask |= m
        return mask

    def contains(self, face) -> bool:
        """Is ``face`` (an iterable of vertices) a face of this complex?"""
        mask = make_mask(face)
        return self.contains_mask(mask)

    def contains_mask(self, mask: int) -> bool:
        return any(fm & mask == mask for fm in self.facet_masks)

    def faces(self, d: int) -> list[tuple[int, ...]]:
        """All d-dimensional faces as sorted vertex tuples, each exactly once."""
        if self.is_void or d < -1:
            return []
        if d == -1:
            return [()]
        out: set[tuple[int, ...]] = set()
        for fm in self.facet_masks:
            vs = bits_tuple(fm)
            if len(vs) >= d + 1:
                out.update(combinations(vs, d + 1))
        return sorted(out)

    def f_vector(self) -> tuple[int, ...]:
        """Face counts (f_0, ..., f_dim); empty for the void and empty complexes."""
        if self.is_void or self.is_empty:
            return ()
        return tuple(len(self.faces(d)) for d in range(self.dim + 1))


def _prune_to_maximal(masks) -> tuple[int, ...]:
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept))


def _from_masks(n: int, masks, prune: bool = True) -> SimplicialComplex:
    if prune:
        return SimplicialComplex(n, _prune_to_maximal(masks))
    return SimplicialComplex(n, tuple(sorted(set(masks))))


def from_facets(n: int, candidate_faces) -> SimplicialComplex:
    """Complex generated by ``candidate_faces``: keeps only the inclusion-maximal ones.

    An empty list yields the void complex; ``[set()]`` yields the empty complex.
    """
    masks = []
    for face in candidate_faces:
        face = list(face)
        for v in face:
            if not (0 <= v < n):
                raise ValueError(f"vertex {v} out of range for n={n}")
        masks.append(make_mask(face))
    return _from_masks(n, masks)


def link(cx: SimplicialComplex, tau) -> SimplicialComplex:
    """Link of the face ``tau``: all faces disjoint from tau whose union with tau is a face."""
    tmask = make_mask(tau)
    if not cx.contains_mask(tmask):
        raise ValueError("link of a non-face")
    facets = [fm & ~tmask for fm in cx.facet_masks if fm & tmask == tmask]
    # facets of the link are incomparable because the originals were
    return _from_masks(cx.n, facets, prune=False)


def deletion(cx: SimplicialComplex, tau) -> SimplicialComplex:
    """All faces of which ``tau`` is not a subset.

    ``deletion(cx, [])`` is the void complex: the empty set is a subset of
    every face.
    """
    tmask = make_mask(tau)
    masks = []
    for fm in cx.facet_masks:
        if fm & tmask != tmask:
            masks.append(fm)
        else:
            masks.extend(fm & ~(1 << v) for v in iter_bits(tmask))
    return _from_masks(cx.n, masks)


def minimal_nonfaces(cx: SimplicialComplex) -> list[frozenset[int]]:
    """All inclusion-minimal non-faces, in sorted order.

    A k-set is a minimal non-face iff it is not a face while all of its
    (k-1)-subsets are; the scan below visits subsets by increasing size,
    which makes that test complete.
    """
    if cx.is_void:
        return [frozenset()]
    out = []
    for k in range(1, cx.n + 1):
        for combo in combinations(range(cx.n), k):
            mask = make_mask(combo)
            if cx.contains_mask(mask):
                continue
            if all(cx.contains_mask(mask & ~(1 << v)) for v in combo):
                out.append(frozenset(combo))
    return out


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex of all subsets whose complements are non-faces of ``cx``.

    Its facets are exactly the complements of the minimal non-faces, so the
    dual of a full simplex is the void complex and the dual of the void
    complex is the full simplex.
    """
    top = full_mask(cx.n)
    facets = [top ^ make_mask(nf) for nf in minimal_nonfaces(cx)]
    return _from_masks(cx.n, facets, prune=False)


def clique_complex(g: Graph) -> SimplicialComplex:
    """Complex whose faces are the cliques of g (facets: the maximal cliques)."""
    return _from_masks(g.n, _maximal_cliques(g), prune=False)


def _maximal_cliques(g: Graph) -> list[int]:
    # Bron-Kerbosch with pivoting, on bitmasks.
    out: list[int] = []
    adj = g.adjacency

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot = max(iter_bits(p | x), key=lambda u: (p & adj[u]).bit_count())
        for v in iter_bits(p & ~adj[pivot]):
            expand(r | (1 << v), p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, full_mask(g.n), 0)
    return out


def cut_complex(g: Graph, k: int) -> SimplicialComplex:
    """k-cut complex: facets are the (n-k)-subsets whose removal disconnects g.

    Equivalently, the complements are the k-subsets inducing a disconnected
    subgraph.  Void when no such subset exists; otherwise pure of dimension
    n - k - 1.
    """
    _check_cut_k(g, k)
    top = full_mask(g.n)
    facets = [
        top ^ make_mask(combo)
        for combo in combinations(range(g.n), k)
        if not connected_within(g, make_mask(combo))
    ]
    cx = _from_masks(g.n, facets, prune=False)
    assert cx.is_pure
    return cx


def total_cut_complex(g: Graph, k: int) -> SimplicialComplex:
    """Facets are the (n-k)-subsets whose complements are independent sets."""
    _check_cut_k(g, k)
    top = full_mask(g.n)
    facets = []
    for combo in combinations(range(g.n), k):
        mask = make_mask(combo)
        if all(g.adjacency[v] & mask == 0 for v in combo):
            facets.append(top ^ mask)
    cx = _from_masks(g.n, facets, prune=False)
    assert cx.is_pure
    return cx


def _check_cut_k(g: Graph, k: int) -> None:
    if not (1 <= k <= g.n):
        raise ValueError(f"k={k} outside [1, {g.n}]")


# ---------------------------------------------------------------------------
# Shelling: verification, spanning facets, search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShellingReport:
    """Outcome of checking one facet order.

    ``removable[j]`` is the set L of vertices x of the facet at position j
    such that some earlier facet meets it exactly in facet-minus-x.  The
    order is a shelling iff no earlier facet contains L (position indices in
    ``witness`` are 1-based, like the usual F_1, ..., F_t notation).
    ``spanning_flags[j]`` marks positions where L equals the whole facet;
    the first position never counts as spanning.
    """

    order: tuple[frozenset[int], ...]
    removable: tuple[frozenset[int], ...]
    valid: bool
    witness: tuple[int, int] | None
    spanning_flags: tuple[bool, ...]


def verify_shelling(cx: SimplicialComplex, order) -> ShellingReport:
    """Check whether ``order`` (a permutation of the facets of ``cx``) is a shelling.

    For each position j the set L_j of removable vertices is precomputed
    from the codimension-1 intersections with earlier facets; the order is
    valid iff no earlier facet contains L_j.  On failure the witness is the
    pair (i, j) with smallest j, then smallest i, in 1-based positions.
    """
    if not cx.is_pure:
        raise ValueError("shelling verification requires a pure complex")
    masks = [make_mask(f) for f in order]
    if sorted(masks) != list(cx.facet_masks):
        raise ValueError("order is not a permutation of the facets")
    t = len(masks)
    removable = [0] * t
    for j in range(t):
        fj = masks[j]
        want = fj.bit_count() - 1
        lj = 0
        for r in range(j):
            inter = masks[r] & fj
            if inter.bit_count() == want:
                lj |= fj & ~inter
        removable[j] = lj
    valid = True
    witness = None
    for j in range(1, t):
        lj = removable[j]
        for i in range(j):
            if lj & ~masks[i] == 0:
                valid = False
                witness = (i + 1, j + 1)
                break
        if witness is not None:
            break
    spanning = [j > 0 and removable[j] == masks[j] for j in range(t)]
    return ShellingReport(
        order=tuple(frozenset(iter_bits(m)) for m in masks),
        removable=tuple(frozenset(iter_bits(m)) for m in removable),
        valid=valid,
        witness=witness,
        spanning_flags=tuple(spanning),
    )


def spanning_facets(report: ShellingReport) -> set[frozenset[int]]:
    """Facets whose removable set is the whole facet (the first facet never qualifies)."""
    if not report.valid:
        raise ValueError("spanning facets are defined only for a valid shelling")
    return {f for f, flag in zip(report.order, report.spanning_flags) if flag}


FOUND = "found"
NON_SHELLABLE = "non_shellable"
BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class ShellingSearch:
    """Result of a backtracking search for a shelling order.

    ``status`` is ``"found"`` (with ``order`` set), ``"non_shellable"``
    (search space exhausted: no shelling exists), or ``"budget_exceeded"``
    (unknown: the node budget ran out first).
    """

    status: str
    order: tuple[frozenset[int], ...] | None

    @property
    def found(self) -> bool:
        return self.status == FOUND


class _Budget(Exception):
    pass


def find_shelling(cx: SimplicialComplex, budget: int = 1_000_000) -> ShellingSearch:
    """Backtracking search for a shelling order of a pure complex.

    Candidates with the largest current removable set are tried first.
    Whether a partial order can be completed depends only on the *set* of
    placed facets, so exhausted prefixes are memoised as dead states.  A
    disconnected facet-ridge graph (facets adjacent when they meet in
    codimension 1) rules out a shelling immediately.
    """
    if not cx.is_pure:
        raise ValueError("shelling search requires a pure complex")
    facets = list(cx.facet_masks)
    t = len(facets)
    if t <= 1:
        return ShellingSearch(FOUND, tuple(frozenset(iter_bits(m)) for m in facets))
    want = facets[0].bit_count() - 1
    if not _ridge_connected(facets, want):
        return ShellingSearch(NON_SHELLABLE, None)

    dead: set[frozenset[int]] = set()
    chosen: list[int] = []
    nodes = 0

    def admissible(f: int, placed: list[int]) -> int | None:
        # removable set of f against the placed prefix; None if not placeable
        lf = 0
        for p in placed:
            inter = p & f
            if inter.bit_count() == want:
                lf |= f & ~inter
        for p in placed:
            if lf & ~p == 0:
                return None
        return lf

    def extend(placed_key: frozenset[int], remaining: set[int]) -> bool:
        nonlocal nodes
        if not remaining:
            return True
        if placed_key in dead:
            return False
        ranked = []
        for f in remaining:
            lf = admissible(f, chosen)
            if lf is not None:
                ranked.append((-lf.bit_count(), f))
        ranked.sort()
        for _, f in ranked:
            nodes += 1
            if nodes > budget:
                raise _Budget
            chosen.append(f)
            remaining.discard(f)
            if extend(placed_key | {f}, remaining):
                return True
            chosen.pop()
            remaining.add(f)
        dead.add(placed_key)
        return False

    try:
        ok = extend(frozenset(), set(facets))
    except _Budget:
        return ShellingSearch(BUDGET_EXCEEDED, None)
    if not ok:
        return ShellingSearch(NON_SHELLABLE, None)
    return ShellingSearch(FOUND, tuple(frozenset(iter_bits(m)) for m in chosen))


def _ridge_connected(facets: list[int], want: int) -> bool:
    t = len(facets)
    seen = [False] * t
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        i = stack.pop()
        for j in range(t):
            if not seen[j] and (facets[i] & facets[j]).bit_count() == want:
                seen[j] = True
                count += 1
                stack.append(j)
    return count == t


# ---------------------------------------------------------------------------
# Vertex decomposability
# ---------------------------------------------------------------------------

_vd_cache: dict[tuple[int, ...], bool] = {}


def is_vertex_decomposable(cx: SimplicialComplex) -> bool:
    """Pure complex that is void, empty, a single simplex, or has a vertex
    whose link and deletion are both vertex decomposable.

    Non-pure complexes return False.  Results are memoised on the facet
    masks, which is what the recursion branches on.
    """
    key = cx.facet_masks
    hit = _vd_cache.get(key)
    if hit is not None:
        return hit
    result = _vd(cx)
    _vd_cache[key] = result
    return result


def _vd(cx: SimplicialComplex) -> bool:
    if not cx.is_pure:
        return False
    if len(cx.facet_masks) <= 1:
        return True
    for v in iter_bits(cx.support_mask):
        if is_vertex_decomposable(link(cx, (v,))) and is_vertex_decomposable(
            deletion(cx, (v,))
        ):
            return True
    return False


# ---------------------------------------------------------------------------
# Facet-file text format
# ---------------------------------------------------------------------------


def parse_facet_file(text: str) -> tuple[int, list[frozenset[int]]]:
    """Parse the facet-file format, preserving facet order.

    First significant line is ``n t``; then exactly t lines each holding an
    ascending space-separated vertex list.  Blank lines and ``#`` comments
    are ignored.  The facet list is returned as written (duplicates and
    non-maximal entries included); pass it to :func:`from_facets` to build
    the complex, or use it directly as a facet order.
    """
    n = None
    t = None
    facets: list[frozenset[int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise FacetFileError(line_no, "expected header 'n t'")
            try:
                n, t = int(parts[0]), int(parts[1])
            except ValueError:
                raise FacetFileError(line_no, f"non-integer header {line!r}") from None
            if n < 0 or t < 0:
                raise FacetFileError(line_no, "header values must be non-negative")
            continue
        if t is not None and len(facets) >= t:
            raise FacetFileError(line_no, f"more than {t} facet lines")
        try:
            vs = [int(p) for p in parts]
        except ValueError:
            raise FacetFileError(line_no, f"non-integer vertex in {line!r}") from None
        for a, b in zip(vs, vs[1:]):
            if a >= b:
                raise FacetFileError(line_no, "vertices must be strictly ascending")
        for v in vs:
            if not (0 <= v < n):
                raise FacetFileError(line_no, f"vertex {v} out of range for n={n}")
        facets.append(frozenset(vs))
    if n is None:
        raise FacetFileError(1, "missing 'n t' header")
    if len(facets) != t:
        raise FacetFileError(1, f"header promised {t} facets, found {len(facets)}")
    return n, facets


def format_facet_file(n: int, facets) -> str:
    """Render facets (in the given order) in the facet-file format.

    The empty facet has no line representation in this format, so the empty
    complex cannot be exported; raise instead of writing an unreadable file.
    """
    rows = [sorted(f) for f in facets]
    for row in rows:
        if not row:
            raise ValueError("the empty facet is not representable in the facet-file format")
    lines = [f"{n} {len(rows)}"]
    lines.extend(" ".join(map(str, row)) for row in rows)
    return "\n".join(lines) + "\n"


def export_complex(cx: SimplicialComplex) -> str:
    """Canonical facet-file text for a complex (facets in sorted vertex order)."""
    return format_facet_file(cx.n, sorted(cx.facets, key=sorted))
