from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lozenge import polyedges as pe
from lozenge.counting import count_dp
from lozenge.geometry import LatticeEdge, matchstick_number, tri_number
from oracles import pattern_census, violating_scan


@pytest.mark.parametrize("k, count", [(1, 1), (2, 3), (3, 12), (4, 60), (5, 375)])
def test_free_census(k, count):
    assert len(pe.enumerate_free_polyedges(k)) == count


@pytest.mark.parametrize("k, count", [(2, 1), (3, 3), (4, 12), (5, 39), (6, 209)])
def test_forbidden_census(k, count):
    assert len(pe.enumerate_forbidden_free(k)) == count


def test_guards():
    with pytest.raises(pe.GuardError):
        pe.enumerate_free_polyedges(7)
    with pytest.raises(pe.GuardError):
        pe.enumerate_forbidden_free(0)


def test_forbidden_small_shapes():
    assert pe.enumerate_forbidden_free(1) == []
    (v,) = pe.enumerate_forbidden_free(2)
    assert v.orbit_size == 6
    # zigzag, triangle, fork
    assert sorted(s.orbit_size for s in pe.enumerate_forbidden_free(3)) == [2, 6, 6]


@pytest.mark.parametrize("k", range(1, 6))
def test_orbit_arithmetic(k):
    free = pe.enumerate_free_polyedges(k)
    assert all(12 % s.orbit_size == 0 for s in free)
    assert sum(s.orbit_size for s in free) == len(pe.expand_to_fixed(free))


@pytest.mark.parametrize("k, count", [(2, 6), (3, 14), (4, 36)])
def test_fixed_blocks(k, count):
    assert len(pe.forbidden_fixed(k)) == count


def test_cut_decomposable_shapes_are_touching_pairs():
    shapes = pe.enumerate_forbidden_free(4)
    cut = [s for s in shapes if s.cut_decomposable]
    assert len(cut) == 8
    # every split shape is two V's sharing only a vertex
    for s in cut:
        assert s.canonical.correlation_components() == 2
    assert len(pe.expand_to_fixed(shapes)) == 96
    assert not any(s.cut_decomposable for k in (2, 3) for s in pe.enumerate_forbidden_free(k))


def _random_shape(draw_edges):
    edges = [LatticeEdge(0, 0, "H")]
    for step in draw_edges:
        candidates = sorted(set().union(*map(pe._touching_edges, edges)) - set(edges))
        edges.append(candidates[step % len(candidates)])
    return pe.FixedPolyedge.of(edges)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=200), min_size=0, max_size=5),
       st.integers(-5, 5), st.integers(-5, 5), st.integers(0, 11))
def test_canonical_form_is_invariant(steps, da, db, g):
    shape = _random_shape(steps)
    assert shape.is_connected()
    moved = pe.FixedPolyedge.of(e.shifted(da, db) for e in shape.edges)
    assert moved == shape
    image = shape.images()[g]
    assert pe.FreePolyedge.of(image).canonical == pe.FreePolyedge.of(shape).canonical


def test_v_placements():
    vs = pe.fixed_v_shapes()
    by_offset = Counter(pe.triangular_offset(v) for v in vs)
    assert by_offset == {1: 3, 2: 3}
    corner = next(v for v in vs if pe.triangular_offset(v) == 2)
    edge = next(v for v in vs if pe.triangular_offset(v) == 1)
    assert pe.placement_count(corner, 3).count == 1
    assert pe.placement_count(edge, 3).count == 3
    assert all(pe.count_placements(v, 1) == 0 for v in vs)
    assert sum(pe.count_placements(v, 4) for v in vs) == 27


@pytest.mark.parametrize("n", range(1, 13))
def test_v_total(n):
    assert sum(pe.count_placements(v, n) for v in pe.fixed_v_shapes()) == 3 * (n - 1) ** 2


@pytest.mark.parametrize("k, offsets", [
    (2, {1: 3, 2: 3}),
    (3, {1: 1, 2: 12, 3: 1}),
    (4, {2: 21, 3: 15}),
])
def test_triangular_law(k, offsets):
    shapes = pe.forbidden_fixed(k)
    found = Counter()
    for s in shapes:
        c = pe.triangular_offset(s)
        assert c is not None
        assert all(pe.count_placements(s, n) == tri_number(n - c) for n in range(1, 13))
        found[c] += 1
    assert found == offsets


def test_placement_count_record():
    (tri_up,) = [s for s in pe.forbidden_fixed(3) if pe.triangular_offset(s) == 3]
    rec = pe.placement_count(tri_up, 5)
    assert (rec.n, rec.count, rec.offset) == (5, tri_number(2), 3)


def test_text_round_trip():
    shapes = pe.forbidden_fixed(3)
    text = pe.export_shapes(shapes, "k=3")
    assert text.startswith("# k=3\n")
    assert pe.parse_shapes(text) == shapes
    assert "(0,0,F) (0,0,H)" in pe.export_shapes(pe.enumerate_forbidden_free(2))
    with pytest.raises(ValueError):
        pe.parse_shapes("(0,0,X)")


def test_pattern_counts_by_rank():
    assert Counter(p.rank for p in pe.patterns(2)) == {1: 6}
    assert Counter(p.rank for p in pe.patterns(3)) == {1: 6, 2: 14}
    assert Counter(p.rank for p in pe.patterns(4)) == {1: 6, 2: 35, 3: 36}


def test_containment_is_unitriangular():
    matrix = pe.containment_matrix(4)
    assert all(q.rank > p.rank for p, q in matrix)
    # each V lies in two of the fourteen 3-edge blocks or in all three sides
    # of a triangle: 6*2 + 6*2 + 2*3 = 30 covers for three edges
    covers3 = sum(c for (p, q), c in pe.containment_matrix(3).items())
    assert covers3 == 30


@pytest.mark.parametrize("n, l, expected", [(3, 2, 12), (4, 3, 382), (2, 2, 3)])
def test_count_violating_examples(n, l, expected):
    assert pe.count_violating_subsets(n, l) == expected


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("l", (2, 3, 4))
def test_violating_matches_scan(n, l):
    assert pe.count_violating_subsets(n, l) == violating_scan(n, l)


@pytest.mark.parametrize("n", (3, 4, 5))
@pytest.mark.parametrize("l", (2, 3, 4))
def test_exact_pattern_counts(n, l):
    census = pattern_census(n, l)
    for p, v in pe.exact_counts(n, l).items():
        assert census.get((p.blocks, p.free), 0) == v, p


def test_rejects_unsupported_l():
    with pytest.raises(ValueError):
        pe.count_violating_subsets(5, 5)


@pytest.mark.parametrize("n, l, expected", [(3, 2, 24), (4, 4, 762), (5, 3, 2814)])
def test_reconstruct_examples(n, l, expected):
    assert pe.reconstruct_L(n, l) == expected


@pytest.mark.parametrize("n", range(2, 13))
def test_reconstruct_matches_dp(n):
    v = count_dp(n)
    for l in (2, 3, 4):
        assert pe.reconstruct_L(n, l) == v[l]
        assert pe.count_violating_subsets(n, l) == comb(matchstick_number(n - 1), l) - v[l]


def test_rank_sum_report():
    assert pe.rank_sum_report(3, 4)[3] == 21
    assert pe.rank_sum_report(4, 4)[2] == 681
    # n = 2: the three internal edges form one triangle, a single rank-2 set
    assert pe.rank_sum_report(2, 3) == {1: 0, 2: 1}
    assert pe.rank_sum_report(2, 4) == {1: 0, 2: 0, 3: 0}
