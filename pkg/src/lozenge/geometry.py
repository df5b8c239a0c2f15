"""The side-n equilateral triangle subdivided into n**2 unit triangles.

Coordinates
-----------
Lattice vertices are integer pairs ``(a, b)`` standing for the point
``a*e1 + b*e2`` with ``e1 = (1, 0)`` and ``e2 = (1/2, sqrt(3)/2)``.  The big
triangle has corners ``(0, 0)``, ``(n, 0)`` and the apex ``(0, n)``, so the
apex points up and the bottom side is horizontal.

A unit edge is stored as ``(a, b, o)``: an anchor vertex plus one of three
orientation letters::

    H  (a, b) -- (a+1, b)      horizontal
    R  (a, b) -- (a, b+1)      rising left-to-right
    F  (a, b) -- (a+1, b-1)    falling left-to-right

Faces are addressed by ``(row, slot)`` with rows counted from the apex
downward, ``0 <= slot <= 2*row``; even slots point up, odd slots point down.
The face index is ``row**2 + slot``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple


def tri_number(k: int) -> int:
    """Triangular number k(k+1)/2, zero for negative k."""
    return k * (k + 1) // 2 if k >= 0 else 0


def matchstick_number(k: int) -> int:
    """Edge count 3*T_k of the side-k subdivided triangle."""
    return 3 * tri_number(k)


class EdgeOrientation(enum.Enum):
    HORIZONTAL = "H"
    RISING = "R"
    FALLING = "F"

    @property
    def step(self) -> tuple[int, int]:
        return _STEPS[self.value]


class FaceOrientation(enum.Enum):
    UP = "up"
    DOWN = "down"


_STEPS = {"H": (1, 0), "R": (0, 1), "F": (1, -1)}


class LatticeEdge(NamedTuple):
    """A unit edge of the infinite triangular lattice."""

    a: int
    b: int
    o: str

    @classmethod
    def between(cls, p: tuple[int, int], q: tuple[int, int]) -> "LatticeEdge":
        dx, dy = q[0] - p[0], q[1] - p[1]
        for o, step in _STEPS.items():
            if (dx, dy) == step:
                return cls(p[0], p[1], o)
            if (-dx, -dy) == step:
                return cls(q[0], q[1], o)
        raise ValueError(f"{p} and {q} are not lattice neighbours")

    @property
    def orientation(self) -> EdgeOrientation:
        return EdgeOrientation(self.o)

    def endpoints(self) -> tuple[tuple[int, int], tuple[int, int]]:
        dx, dy = _STEPS[self.o]
        return (self.a, self.b), (self.a + dx, self.b + dy)

    def shifted(self, da: int, db: int) -> "LatticeEdge":
        return LatticeEdge(self.a + da, self.b + db, self.o)

    def triangles(self) -> tuple[tuple[str, int, int], tuple[str, int, int]]:
        """The up and the down unit triangle containing this edge.

        Up triangle ``("u", a, b)`` has corners (a,b), (a+1,b), (a,b+1);
        down triangle ``("d", a, b)`` has corners (a+1,b), (a,b+1), (a+1,b+1).
        """
        a, b, o = self
        if o == "H":
            return ("u", a, b), ("d", a, b - 1)
        if o == "R":
            return ("u", a, b), ("d", a - 1, b)
        return ("u", a, b - 1), ("d", a, b - 1)

    def is_60_adjacent(self, other: "LatticeEdge") -> bool:
        """True iff both edges lie on a common unit triangle."""
        if self == other:
            return False
        mine = self.triangles()
        return other.triangles()[0] in mine or other.triangles()[1] in mine


def in_triangle(p: tuple[int, int], n: int) -> bool:
    a, b = p
    return a >= 0 and b >= 0 and a + b <= n


def is_boundary(edge: LatticeEdge, n: int) -> bool:
    """Whether a grid edge lies on the perimeter of the side-n triangle."""
    a, b, o = edge
    if o == "H":
        return b == 0
    if o == "R":
        return a == 0
    return a + b == n


def is_internal(edge: LatticeEdge, n: int) -> bool:
    p, q = edge.endpoints()
    return in_triangle(p, n) and in_triangle(q, n) and not is_boundary(edge, n)


@dataclass(frozen=True)
class Edge:
    lattice: LatticeEdge
    vertices: tuple[int, int]
    boundary: bool
    faces: tuple[int, ...]

    @property
    def orientation(self) -> EdgeOrientation:
        return self.lattice.orientation


@dataclass(frozen=True)
class Face:
    row: int
    slot: int
    orientation: FaceOrientation
    edges: tuple[int, int, int]


@dataclass(frozen=True)
class TriGrid:
    n: int
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...]
    face_adjacency: tuple[tuple[int, ...], ...]

    def face_index(self, row: int, slot: int) -> int:
        return row * row + slot

    def internal_edges(self) -> list[int]:
        return [i for i, e in enumerate(self.edges) if not e.boundary]

    def adjacent_face_pairs(self) -> list[tuple[int, int]]:
        return [e.faces for e in self.edges if len(e.faces) == 2]


def face_corners(n: int, row: int, slot: int) -> tuple[tuple[int, int], ...]:
    k, up = divmod(slot, 2)
    b0 = n - row - 1
    if up == 0:
        return (k, b0), (k + 1, b0), (k, b0 + 1)
    return (k + 1, b0), (k, b0 + 1), (k + 1, b0 + 1)


def face_lattice_edges(n: int, row: int, slot: int) -> tuple[LatticeEdge, ...]:
    """Edges of a face, ordered (horizontal, rising, falling)."""
    k, up = divmod(slot, 2)
    b0 = n - row - 1
    if up == 0:
        return (LatticeEdge(k, b0, "H"), LatticeEdge(k, b0, "R"),
                LatticeEdge(k, b0 + 1, "F"))
    return (LatticeEdge(k, b0 + 1, "H"), LatticeEdge(k + 1, b0, "R"),
            LatticeEdge(k, b0 + 1, "F"))


def build_grid(n: int) -> TriGrid:
    if n < 1:
        raise ValueError(f"side length must be >= 1, got {n}")

    vertices = tuple((a, b) for b in range(n, -1, -1) for a in range(n - b + 1))
    vindex = {v: i for i, v in enumerate(vertices)}

    edge_ids: dict[LatticeEdge, int] = {}
    edge_faces: list[list[int]] = []
    faces = []
    for row in range(n):
        for slot in range(2 * row + 1):
            fi = len(faces)
            ids = []
            for le in face_lattice_edges(n, row, slot):
                if le not in edge_ids:
                    edge_ids[le] = len(edge_ids)
                    edge_faces.append([])
                edge_faces[edge_ids[le]].append(fi)
                ids.append(edge_ids[le])
            orient = FaceOrientation.UP if slot % 2 == 0 else FaceOrientation.DOWN
            faces.append(Face(row, slot, orient, tuple(ids)))

    edges = []
    for le, i in edge_ids.items():
        p, q = le.endpoints()
        edges.append(Edge(le, (vindex[p], vindex[q]), is_boundary(le, n),
                          tuple(edge_faces[i])))

    adjacency: list[list[int]] = [[] for _ in faces]
    for e in edges:
        if len(e.faces) == 2:
            f, g = e.faces
            adjacency[f].append(g)
            adjacency[g].append(f)

    return TriGrid(n, vertices, tuple(edges), tuple(faces),
                   tuple(tuple(sorted(a)) for a in adjacency))


def count_edges_by_orientation(grid: TriGrid, internal_only: bool = False) -> dict[EdgeOrientation, int]:
    counts = {o: 0 for o in EdgeOrientation}
    for e in grid.edges:
        if internal_only and e.boundary:
            continue
        counts[e.orientation] += 1
    return counts
