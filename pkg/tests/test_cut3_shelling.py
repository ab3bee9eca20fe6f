import random

import numpy as np
import pytest

import oracles
from cutcomplex import (
    GF2,
    compare_facets,
    compare_vertices,
    cut_complex,
    displaced_tag,
    facet_signature,
    shelling_order,
    spanning_count_formula,
    spanning_facets,
    spanning_tag,
    squared_cycle,
    verify_conjecture,
    verify_shelling,
    vertex_order,
)

EXPECTED_SPANNING = {9: 1, 10: 6, 11: 12, 12: 19, 13: 27}


def complement(n, facet):
    return sorted(set(range(n)) - set(facet))


def facet_of(n, comp):
    return frozenset(range(n)) - set(comp)


def test_vertex_order_small_cases():
    o9 = vertex_order(9)
    assert (o9.m, o9.sequence) == (5, (5, 4, 6, 3, 7, 2, 8, 1, 0))
    o10 = vertex_order(10)
    assert (o10.m, o10.sequence) == (5, (5, 4, 6, 3, 7, 2, 8, 1, 9, 0))
    assert vertex_order(13).m == 7
    with pytest.raises(ValueError):
        vertex_order(8)


def test_vertex_order_rank_is_inverse_permutation():
    for n in range(9, 31):
        o = vertex_order(n)
        assert sorted(o.sequence) == list(range(n))
        for pos, v in enumerate(o.sequence, start=1):
            assert o.rank[v] == pos


def test_center_out_interval_characterisation():
    # before/after in the order has a closed arithmetic description in
    # terms of the midpoint; check it exhaustively over all vertex pairs
    for n in range(9, 31):
        o = vertex_order(n)
        m = o.m
        for x in range(n):
            for y in range(n):
                if x == y:
                    continue
                lt = o.rank[x] < o.rank[y]
                if x < m:
                    assert lt == (y < x or y >= 2 * m - x)
                if x >= m:
                    assert lt == (y < 2 * m - x or y > x)
                if y < m:
                    assert lt == (y < x < 2 * m - y)
                if y > m:
                    assert lt == (2 * m - y <= x < y)


def test_compare_vertices():
    o = vertex_order(9)
    assert compare_vertices(o, 5, 4) == -1
    assert all(compare_vertices(o, 0, y) == 1 for y in range(1, 9))
    assert compare_vertices(o, 3, 7) == -1
    assert compare_vertices(o, 2, 2) == 0


def test_facet_signature_examples():
    o = vertex_order(9)
    sig = facet_signature(o, (3, 7, 8))
    assert (sig.s, sig.alpha, sig.s1, sig.s2) == (4, 3, 7, 8)
    sig = facet_signature(o, (0, 4, 8))
    assert (sig.s, sig.alpha, sig.s1, sig.s2) == (2, 4, 0, 8)
    sig = facet_signature(o, (5, 0, 1))
    assert (sig.s, sig.alpha, sig.s1, sig.s2) == (1, 5, 0, 1)
    with pytest.raises(ValueError):
        facet_signature(o, (1, 2))


def test_signature_least_element_and_range_over_facets():
    for n in range(9, 17):
        o = vertex_order(n)
        cx = cut_complex(squared_cycle(n), 3)
        for facet in cx.facets:
            sig = facet_signature(o, complement(n, facet))
            assert o.rank[sig.alpha] < min(o.rank[sig.s1], o.rank[sig.s2])
            assert sig.s1 < sig.s2
            assert 2 <= sig.alpha <= n - 2


def test_displaced_tag_examples():
    o9 = vertex_order(9)
    assert displaced_tag(o9, (3, 6, 7)) == "D1"
    assert displaced_tag(o9, (0, 4, 8)) is None
    o10 = vertex_order(10)
    assert displaced_tag(o10, (4, 7, 8)) == "D4"


def test_displaced_window_is_empty_for_n9():
    # the last displaced rule needs alpha in {m-1, ..., n-6}, empty at n=9
    o = vertex_order(9)
    cx = cut_complex(squared_cycle(9), 3)
    tags = {displaced_tag(o, complement(9, f)) for f in cx.facets}
    assert "D4" not in tags
    assert "D1" in tags


def test_compare_facets_examples():
    o = vertex_order(9)
    f_a = facet_of(9, (0, 1, 5))  # block 1, not displaced
    f_b = facet_of(9, (0, 4, 8))  # block 2, not displaced
    assert compare_facets(o, f_a, f_b) == -1
    assert compare_facets(o, f_b, f_a) == 1
    f_d = facet_of(9, (3, 6, 7))  # displaced, block 3
    f_p = facet_of(9, (3, 7, 8))  # plain, block 4
    assert compare_facets(o, f_d, f_p) == -1
    assert compare_facets(o, f_a, f_a) == 0
    with pytest.raises(ValueError):
        compare_facets(o, facet_of(9, (0, 1, 2)), f_a)  # complement is a triangle


def test_displaced_goes_after_plain_within_a_block():
    o = vertex_order(9)
    cx = cut_complex(squared_cycle(9), 3)
    by_block = {}
    for f in cx.facets:
        sig = facet_signature(o, complement(9, f))
        by_block.setdefault(sig.s, []).append(f)
    checked = 0
    for block in by_block.values():
        plain = [f for f in block if displaced_tag(o, complement(9, f)) is None]
        displaced = [f for f in block if displaced_tag(o, complement(9, f))]
        for p in plain:
            for d in displaced:
                assert compare_facets(o, p, d) == -1
                checked += 1
    assert checked


def test_order_is_strict_and_total(verified_orders):
    for n in range(9, 13):
        o = vertex_order(n)
        facets = list(verified_orders[n][0].facets)
        t = len(facets)
        cmp = np.zeros((t, t), dtype=np.int8)
        for i in range(t):
            for j in range(t):
                cmp[i, j] = compare_facets(o, facets[i], facets[j])
        assert (np.diag(cmp) == 0).all()
        off = ~np.eye(t, dtype=bool)
        assert (cmp[off] != 0).all()  # totality
        assert (cmp + cmp.T == 0).all()  # antisymmetry
        before = cmp < 0
        # transitivity over every triple: no i->j->k path without i->k
        two_step = (before.astype(np.int32) @ before.astype(np.int32)) > 0
        assert not (two_step & ~before).any()


def test_order_transitivity_on_random_triples_up_to_16():
    rng = random.Random(53)
    for n in (13, 14, 15, 16):
        o = vertex_order(n)
        facets = list(cut_complex(squared_cycle(n), 3).facets)
        for _ in range(800):
            triple = rng.sample(facets, 3)
            lt = {
                (i, j): compare_facets(o, triple[i], triple[j]) == -1
                for i in range(3)
                for j in range(3)
                if i != j
            }
            for (i, j), flag in lt.items():
                assert flag != lt[(j, i)]  # antisymmetry + totality
            for i in range(3):
                for j in range(3):
                    for k in range(3):
                        if len({i, j, k}) == 3 and lt[(i, j)] and lt[(j, k)]:
                            assert lt[(i, k)]


def test_shelling_order_matches_bruteforce_facets():
    g = squared_cycle(9)
    order = shelling_order(9)
    expected = oracles.cut_facets_bruteforce(9, g.edges(), 3)
    assert len(order) == len(expected)
    assert set(order) == expected
    assert 5 in complement(9, order[0])  # the midpoint heads every complement block


def test_order_is_a_shelling(verified_orders):
    for n in range(9, 14):
        _, _, report = verified_orders[n]
        assert report.valid and report.witness is None


def test_spanning_tag_examples():
    o9 = vertex_order(9)
    assert spanning_tag(o9, (3, 7, 8)) == "S1"
    assert spanning_tag(o9, (3, 6, 7)) is None  # pair does not end at n-1
    o10 = vertex_order(10)
    cx10 = cut_complex(squared_cycle(10), 3)
    s1_count = sum(
        1 for f in cx10.facets if spanning_tag(o10, complement(10, f)) == "S1"
    )
    assert s1_count == 2


def test_spanning_count_formula_values():
    assert spanning_count_formula(9).breakdown == {"s1": 1, "s2": 0, "s3": 0}
    assert spanning_count_formula(9).total == 1
    assert spanning_count_formula(10).breakdown == {"s1": 2, "s2": 0, "s3": 4}
    assert spanning_count_formula(10).total == 6
    assert spanning_count_formula(13).total == 27
    with pytest.raises(ValueError):
        spanning_count_formula(8)


def test_three_way_census_agreement(verified_orders):
    for n in range(9, 14):
        cx, _, report = verified_orders[n]
        o = vertex_order(n)
        from_order = sum(report.spanning_flags)
        tagged = {
            f: spanning_tag(o, complement(n, f))
            for f in cx.facets
        }
        from_classes = sum(1 for tag in tagged.values() if tag)
        formula = spanning_count_formula(n)
        assert from_order == from_classes == formula.total == EXPECTED_SPANNING[n]
        assert spanning_facets(report) == {f for f, tag in tagged.items() if tag}


def test_displaced_facets_are_never_spanning(verified_orders):
    for n in range(9, 14):
        cx, _, report = verified_orders[n]
        o = vertex_order(n)
        spanning = spanning_facets(report)
        for f in cx.facets:
            if displaced_tag(o, complement(n, f)) is not None:
                assert f not in spanning


def test_spanning_complements_avoid_tight_patterns(verified_orders):
    for n in range(9, 14):
        _, _, report = verified_orders[n]
        o = vertex_order(n)
        forbidden = set()
        for x in range(n):
            forbidden.add(frozenset({x, (x + 1) % n, (x + 4) % n}))
            forbidden.add(frozenset({x, (x + 3) % n, (x + 4) % n}))
        for f in spanning_facets(report):
            comp = complement(n, f)
            assert frozenset(comp) not in forbidden
            sig = facet_signature(o, comp)
            assert sig.s2 == n - 1
            assert sig.alpha not in {0, 1, 2, n - 2, n - 1}


def test_spanning_facet_for_n9(verified_orders):
    _, _, report = verified_orders[9]
    assert spanning_facets(report) == {frozenset({0, 1, 2, 4, 5, 6})}


def test_verify_conjecture_report():
    r = verify_conjecture(9, GF2, with_homology=True)
    assert r.all_pass and r.shelling_valid
    assert (r.spanning_from_order, r.spanning_from_s, r.spanning_from_formula) == (1, 1, 1)
    assert r.betti is not None and r.betti.get(5) == 1 and r.betti_matches
    assert r.facet_count == 48 and r.dimension == 5 and r.pure
    record = r.to_record()
    assert record["spanning_from_S"] == 1 and record["all_pass"] is True

    r12 = verify_conjecture(12)
    assert r12.spanning_from_order == 19 and r12.betti is None and r12.all_pass


def test_verify_conjecture_homology_cap():
    r = verify_conjecture(9, GF2, with_homology=True, homology_cap=8)
    assert r.betti is None and r.betti_matches is None and r.all_pass


def test_corrupted_order_is_rejected():
    cx = cut_complex(squared_cycle(9), 3)
    order = shelling_order(9)
    order[0], order[7] = order[7], order[0]
    report = verify_shelling(cx, order)
    assert not report.valid
    assert report.witness == (1, 2)
    reversed_report = verify_shelling(cx, list(reversed(shelling_order(9))))
    assert not reversed_report.valid
    assert reversed_report.witness == (14, 21)
