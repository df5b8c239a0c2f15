import pytest
from hypothesis import given
from hypothesis import strategies as st

from lozenge.geometry import (
    EdgeOrientation,
    FaceOrientation,
    LatticeEdge,
    build_grid,
    count_edges_by_orientation,
    matchstick_number,
    tri_number,
)


@pytest.mark.parametrize("k, expected", [(5, 15), (-1, 0), (0, 0), (1, 1), (-7, 0)])
def test_tri_number(k, expected):
    assert tri_number(k) == expected


@given(st.integers(min_value=1, max_value=10**6))
def test_tri_number_steps(k):
    assert tri_number(k) - tri_number(k - 1) == k


@pytest.mark.parametrize("n, vertices, edges, faces, internal", [
    (1, 3, 3, 1, 0),
    (3, 10, 18, 9, 9),
    (4, 15, 30, 16, 18),
])
def test_grid_sizes(n, vertices, edges, faces, internal):
    grid = build_grid(n)
    assert len(grid.vertices) == vertices
    assert len(grid.edges) == edges
    assert len(grid.faces) == faces
    assert len(grid.internal_edges()) == internal


@pytest.mark.parametrize("n", range(1, 21))
def test_grid_invariants(n):
    grid = build_grid(n)
    V, E, F = len(grid.vertices), len(grid.edges), len(grid.faces)
    assert V == tri_number(n + 1) == (n + 1) * (n + 2) // 2
    assert E == matchstick_number(n)
    assert F == n * n
    assert F + V == E + 1
    assert len(grid.internal_edges()) == matchstick_number(n) - 3 * n == matchstick_number(n - 1)

    on_side = {v for v in grid.vertices if 0 in v or sum(v) == n}
    assert V - len(on_side) == tri_number(n - 2)

    ups = sum(f.orientation is FaceOrientation.UP for f in grid.faces)
    assert ups == tri_number(n)
    assert F - ups == tri_number(n - 1)

    for e in grid.edges:
        if e.boundary:
            assert len(e.faces) == 1
        else:
            f, g = (grid.faces[i] for i in e.faces)
            assert f.orientation is not g.orientation

    pairs = sum(len(a) for a in grid.face_adjacency) // 2
    assert pairs == matchstick_number(n - 1)


def test_grid_rejects_nonpositive():
    with pytest.raises(ValueError):
        build_grid(0)


def test_grid_is_deterministic():
    assert build_grid(6) == build_grid(6)


def test_face_indexing_and_edges():
    grid = build_grid(3)
    for i, face in enumerate(grid.faces):
        assert grid.face_index(face.row, face.slot) == i
        assert (face.orientation is FaceOrientation.UP) == (face.slot % 2 == 0)
        for e in face.edges:
            assert i in grid.edges[e].faces
    # apex face touches the two upper sides and one internal edge
    apex = grid.faces[0]
    assert sum(grid.edges[e].boundary for e in apex.edges) == 2


@pytest.mark.parametrize("n, each", [(1, 0), (3, 3), (5, 10)])
def test_internal_orientation_split(n, each):
    counts = count_edges_by_orientation(build_grid(n), internal_only=True)
    assert counts == {o: each for o in EdgeOrientation}
    assert sum(counts.values()) == matchstick_number(n - 1)


@pytest.mark.parametrize("n", range(1, 12))
def test_all_edges_split_evenly(n):
    counts = count_edges_by_orientation(build_grid(n))
    assert set(counts.values()) == {tri_number(n)}


def test_lattice_edge_between_and_adjacency():
    assert LatticeEdge.between((1, 2), (0, 2)) == LatticeEdge(0, 2, "H")
    assert LatticeEdge.between((2, 0), (1, 1)) == LatticeEdge(1, 1, "F")
    with pytest.raises(ValueError):
        LatticeEdge.between((0, 0), (2, 0))
    h = LatticeEdge(0, 0, "H")
    # the two other sides of the up triangle on h are 60 degrees from it
    assert h.is_60_adjacent(LatticeEdge(0, 0, "R"))
    assert h.is_60_adjacent(LatticeEdge(0, 1, "F"))
    # collinear neighbour and the 120 degree neighbour are not
    assert not h.is_60_adjacent(LatticeEdge(1, 0, "H"))
    assert not h.is_60_adjacent(LatticeEdge(1, 0, "R"))
    assert not h.is_60_adjacent(h)
