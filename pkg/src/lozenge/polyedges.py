"""Polyedges of the triangular lattice and inclusion-exclusion over them.

A polyedge is a finite set of unit lattice edges.  It is *connected* when
its edges form a connected graph (edges touching at a vertex), and
*forbidden* when every edge shares a unit triangle (a 60 degree corner)
with another edge of the set; deleting such a set of internal edges never
yields a lozenge tiling.

The correlation graph of an edge set joins two edges when they share a unit
triangle.  A forbidden polyedge whose correlation graph falls apart is
*cut-decomposable*: it is two smaller forbidden polyedges that merely touch
at a vertex.  Only correlation-connected shapes appear as blocks in the
inclusion-exclusion below.

Counting l-subsets of internal edges that contain a forbidden pair
------------------------------------------------------------------
Each violating l-subset S has a *pattern*: the multiset of its correlation
components with two or more edges (as fixed shapes) plus the number of
uncorrelated singletons.  The rank of a pattern is l minus the number of
components.  For each pattern P:

* the closure Vbar(P) counts families of pairwise edge-disjoint placements
  of P's blocks inside the triangle, completed by any choice of the
  remaining edges.  It is a product of placement counts minus coincidences,
  where coincidences are themselves placement counts of overlapped unions.
* Vbar(P) = sum over patterns Q of N(P, Q) * V(Q), where V(Q) is the exact
  number of l-subsets with pattern Q and N(P, Q) counts the ways a set with
  pattern Q contains P's blocks.  N is unitriangular by rank, so V follows
  top rank first.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .geometry import LatticeEdge, is_internal, matchstick_number, tri_number

MAX_EDGES = 6
LOZENGE_RANGE = (2, 3, 4)


class GuardError(ValueError):
    pass


def _rotate(p):
    a, b = p
    return -b, a + b


def _reflect(p):
    a, b = p
    return a + b, -b


# lattice step -> (orientation, whether the far endpoint is the anchor)
_BY_STEP = {(1, 0): ("H", False), (0, 1): ("R", False), (1, -1): ("F", False),
            (-1, 0): ("H", True), (0, -1): ("R", True), (-1, 1): ("F", True)}


def _map_edge(edge: LatticeEdge, g) -> LatticeEdge:
    p, q = edge.endpoints()
    p, q = g(p), g(q)
    o, flip = _BY_STEP[q[0] - p[0], q[1] - p[1]]
    a, b = q if flip else p
    return LatticeEdge(a, b, o)


def normalize(edges) -> tuple[LatticeEdge, ...]:
    """Sort the edges and translate so the first one is anchored at the origin."""
    ordered = sorted(edges)
    a, b, _ = ordered[0]
    return tuple(e.shifted(-a, -b) for e in ordered)


@dataclass(frozen=True, order=True)
class FixedPolyedge:
    """A polyedge up to translation."""

    edges: tuple[LatticeEdge, ...]

    @classmethod
    def of(cls, edges) -> "FixedPolyedge":
        edges = [LatticeEdge(*e) for e in edges]
        if not edges:
            raise ValueError("a polyedge needs at least one edge")
        if len(set(edges)) != len(edges):
            raise ValueError("repeated edge")
        return cls(normalize(edges))

    def __len__(self) -> int:
        return len(self.edges)

    def images(self) -> list["FixedPolyedge"]:
        """The 12 images under rotations by 60 degrees and reflections."""
        out = []
        current = list(self.edges)
        for _ in range(6):
            out.append(FixedPolyedge(normalize(current)))
            out.append(FixedPolyedge(normalize(_map_edge(e, _reflect) for e in current)))
            current = [_map_edge(e, _rotate) for e in current]
        return out

    def vertices(self) -> set[tuple[int, int]]:
        return {p for e in self.edges for p in e.endpoints()}

    def is_connected(self) -> bool:
        return _components(self.edges, _share_vertex) == 1

    def is_forbidden(self) -> bool:
        return all(any(e.is_60_adjacent(f) for f in self.edges) for e in self.edges)

    def correlation_components(self) -> int:
        return _components(self.edges, LatticeEdge.is_60_adjacent)

    def is_cut_decomposable(self) -> bool:
        return self.is_forbidden() and self.correlation_components() > 1

    def to_text(self) -> str:
        return " ".join(f"({a},{b},{o})" for a, b, o in self.edges)


def _share_vertex(e: LatticeEdge, f: LatticeEdge) -> bool:
    return bool(set(e.endpoints()) & set(f.endpoints()))


def _components(edges, linked) -> int:
    remaining = set(edges)
    count = 0
    while remaining:
        count += 1
        stack = [remaining.pop()]
        while stack:
            e = stack.pop()
            joined = [f for f in remaining if linked(e, f)]
            for f in joined:
                remaining.discard(f)
            stack.extend(joined)
    return count


@dataclass(frozen=True, order=True)
class FreePolyedge:
    """Canonical representative of an orbit under translations and the
    order-12 dihedral group."""

    canonical: FixedPolyedge
    orbit_size: int = field(compare=False)

    @classmethod
    def of(cls, shape: FixedPolyedge) -> "FreePolyedge":
        images = set(shape.images())
        return cls(min(images), len(images))

    def __len__(self) -> int:
        return len(self.canonical)

    @property
    def cut_decomposable(self) -> bool:
        return self.canonical.is_cut_decomposable()

    def fixed(self) -> list[FixedPolyedge]:
        return sorted(set(self.canonical.images()))


def _touching_edges(edge: LatticeEdge) -> set[LatticeEdge]:
    out = set()
    for a, b in edge.endpoints():
        for o in "HRF":
            out.add(LatticeEdge(a, b, o))
            out.add(LatticeEdge(a, b, o).shifted(*(-s for s in _STEP[o])))
    out.discard(edge)
    return out


_STEP = {"H": (1, 0), "R": (0, 1), "F": (1, -1)}


def _check_guard(k: int, low: int = 1) -> None:
    if k < low:
        raise GuardError(f"edge count must be >= {low}, got {k}")
    if k > MAX_EDGES:
        raise GuardError(f"enumeration is limited to k <= {MAX_EDGES} edges, got {k}")


@lru_cache(maxsize=None)
def _free_canonicals(k: int) -> frozenset[FixedPolyedge]:
    if k == 1:
        return frozenset({FixedPolyedge.of([LatticeEdge(0, 0, "H")])})
    found = set()
    for shape in _free_canonicals(k - 1):
        present = set(shape.edges)
        grown = set().union(*map(_touching_edges, shape.edges)) - present
        for f in grown:
            found.add(min(FixedPolyedge.of(present | {f}).images()))
    return frozenset(found)


def enumerate_free_polyedges(k: int) -> list[FreePolyedge]:
    """All connected free polyedges with k edges, sorted canonically."""
    _check_guard(k)
    return sorted(FreePolyedge.of(s) for s in _free_canonicals(k))


def enumerate_forbidden_free(k: int) -> list[FreePolyedge]:
    _check_guard(k)
    return [s for s in enumerate_free_polyedges(k) if s.canonical.is_forbidden()]


def expand_to_fixed(shapes) -> list[FixedPolyedge]:
    """Union of the dihedral orbits of free shapes, duplicate-free."""
    out = set()
    for s in shapes:
        out.update(s.fixed())
    return sorted(out)


def forbidden_fixed(k: int) -> list[FixedPolyedge]:
    """Fixed forbidden k-edge shapes that are not cut-decomposable.

    These are the blocks whose exact placements make up the top rank of the
    inclusion-exclusion for k deleted edges.
    """
    return expand_to_fixed(s for s in enumerate_forbidden_free(k) if not s.cut_decomposable)


def fixed_v_shapes() -> list[FixedPolyedge]:
    return forbidden_fixed(2)


# --- placements ---------------------------------------------------------

@lru_cache(maxsize=None)
def _placements(edges: tuple[LatticeEdge, ...], n: int) -> int:
    pts = [p for e in edges for p in e.endpoints()]
    amin = min(a for a, _ in pts)
    amax = max(a for a, _ in pts)
    bmin = min(b for _, b in pts)
    bmax = max(b for _, b in pts)
    total = 0
    for da in range(-amin, n - amax + 1):
        for db in range(-bmin, n - bmax + 1):
            if all(is_internal(e.shifted(da, db), n) for e in edges):
                total += 1
    return total


def count_placements(shape: FixedPolyedge, n: int) -> int:
    """Translates of the shape lying entirely on internal edges of the grid."""
    if n < 1:
        raise ValueError(f"side length must be >= 1, got {n}")
    return _placements(shape.edges, n)


@dataclass(frozen=True)
class PlacementCount:
    shape: FixedPolyedge
    n: int
    count: int
    offset: int | None  # c with count(m) = T_{m-c}, None if the law fails


def triangular_offset(shape: FixedPolyedge, window: int = 5) -> int | None:
    """The constant c with placements(m) = T_{m-c}, checked for m = 1..c+window."""
    m = 1
    while count_placements(shape, m) == 0:
        m += 1
        if m > 2 * MAX_EDGES + 4:
            return None
    c = m - 1
    ok = all(count_placements(shape, m) == tri_number(m - c) for m in range(1, c + window + 1))
    return c if ok else None


def placement_count(shape: FixedPolyedge, n: int) -> PlacementCount:
    return PlacementCount(shape, n, count_placements(shape, n), triangular_offset(shape))


# --- text format ----------------------------------------------------------

def export_shapes(shapes, header: str | None = None) -> str:
    """One shape per line, edges as (x,y,orientation) triples."""
    shapes = list(shapes)
    lines = [f"# {header}"] if header else []
    lines.extend((s.canonical if isinstance(s, FreePolyedge) else s).to_text() for s in shapes)
    return "\n".join(lines) + "\n"


def parse_shapes(text: str) -> list[FixedPolyedge]:
    shapes = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        edges = []
        for token in line.split():
            a, b, o = token.strip("()").split(",")
            if o not in _STEP:
                raise ValueError(f"unknown orientation {o!r} in {token}")
            edges.append(LatticeEdge(int(a), int(b), o))
        shapes.append(FixedPolyedge.of(edges))
    return shapes


# --- inclusion-exclusion --------------------------------------------------

@dataclass(frozen=True, order=True)
class Pattern:
    """Blocks (correlation-connected forbidden shapes) plus free edges."""

    blocks: tuple[FixedPolyedge, ...]
    free: int

    @property
    def size(self) -> int:
        return sum(len(b) for b in self.blocks) + self.free

    @property
    def rank(self) -> int:
        return sum(len(b) - 1 for b in self.blocks)


def _check_lozenges(l: int) -> None:
    if l not in LOZENGE_RANGE:
        raise ValueError(f"inclusion-exclusion is implemented for l in {LOZENGE_RANGE}, got {l}")


@lru_cache(maxsize=None)
def patterns(l: int) -> tuple[Pattern, ...]:
    """Every pattern of l edges with at least one block, by descending rank."""
    blocks_by_size = {k: forbidden_fixed(k) for k in range(2, l + 1)}
    pool = [b for k in sorted(blocks_by_size) for b in blocks_by_size[k]]
    out = []
    for count in range(1, l // 2 + 1):
        for combo in itertools.combinations_with_replacement(pool, count):
            used = sum(len(b) for b in combo)
            if used <= l:
                out.append(Pattern(tuple(sorted(combo)), l - used))
    return tuple(sorted(out, key=lambda p: (-p.rank, p)))


def _embed(blocks) -> list[LatticeEdge]:
    """Blocks placed far apart so that none touch."""
    edges = []
    for i, b in enumerate(blocks):
        edges.extend(e.shifted(40 * i, 0) for e in b.edges)
    return edges


def _occurrences(shape: FixedPolyedge, edges) -> list[frozenset]:
    return [frozenset(sub) for sub in itertools.combinations(edges, len(shape))
            if normalize(sub) == shape.edges]


def _disjoint_families(wanted: Counter, occurrences: dict, used=frozenset()) -> int:
    if not wanted:
        return 1
    shape = min(wanted)
    rest = wanted.copy()
    rest[shape] -= 1
    if not rest[shape]:
        del rest[shape]
    total = 0
    for occ in occurrences[shape]:
        if not occ & used:
            total += _disjoint_families(rest, occurrences, used | occ)
    return total


def containment(p: Pattern, q: Pattern) -> int:
    """Ways a set with pattern q contains disjoint copies of p's blocks."""
    if p.size != q.size:
        raise ValueError("patterns of different sizes")
    edges = _embed(q.blocks)
    wanted = Counter(p.blocks)
    occurrences = {s: _occurrences(s, edges) for s in wanted}
    ordered = _disjoint_families(wanted, occurrences)
    # each unordered family was counted once per ordering of identical blocks
    for mult in wanted.values():
        for i in range(2, mult + 1):
            ordered //= i
    return ordered


@lru_cache(maxsize=None)
def containment_matrix(l: int) -> dict[tuple[Pattern, Pattern], int]:
    """Nonzero N(P, Q) with rank(Q) > rank(P); N is checked unitriangular."""
    _check_lozenges(l)
    pats = patterns(l)
    out = {}
    for p in pats:
        for q in pats:
            c = containment(p, q)
            if q.rank == p.rank:
                expected = 1 if q == p else 0
                if c != expected:
                    raise AssertionError(f"containment({p}, {q}) = {c}, expected {expected}")
            elif c:
                if q.rank < p.rank:
                    raise AssertionError(f"lower-rank pattern {q} contains {p}")
                out[p, q] = c
    return out


def overlapping_pairs(a: FixedPolyedge, b: FixedPolyedge, n: int) -> int:
    """Ordered pairs (placement of a, placement of b) sharing an edge,
    excluding a placement paired with itself."""
    offsets = {(e.a - f.a, e.b - f.b) for e in a.edges for f in b.edges if e.o == f.o}
    if a == b:
        offsets.discard((0, 0))
    total = 0
    for da, db in offsets:
        union = set(a.edges) | {f.shifted(da, db) for f in b.edges}
        total += count_placements(FixedPolyedge.of(union), n)
    return total


def closure(p: Pattern, n: int) -> int:
    """Vbar: disjoint placements of the blocks times any choice of free edges."""
    m = matchstick_number(n - 1)
    used = p.size - p.free
    rest = comb(m - used, p.free) if m >= used else 0
    if len(p.blocks) == 1:
        (a,) = p.blocks
        return count_placements(a, n) * rest
    if len(p.blocks) == 2:
        a, b = p.blocks
        pa, pb = count_placements(a, n), count_placements(b, n)
        if a == b:
            families = (pa * pa - pa - overlapping_pairs(a, a, n)) // 2
        else:
            families = pa * pb - overlapping_pairs(a, b, n)
        return families * rest
    raise NotImplementedError("closures with more than two blocks need l >= 6")


def exact_counts(n: int, l: int) -> dict[Pattern, int]:
    """V(P): l-subsets of internal edges whose pattern is exactly P."""
    _check_lozenges(l)
    if n < 1:
        raise ValueError(f"side length must be >= 1, got {n}")
    matrix = containment_matrix(l)
    exact: dict[Pattern, int] = {}
    for p in patterns(l):  # highest rank first
        value = closure(p, n)
        for q, v in exact.items():
            value -= matrix.get((p, q), 0) * v
        exact[p] = value
    return exact


def count_violating_subsets(n: int, l: int) -> int:
    """l-subsets of internal edges containing a pair on a common triangle."""
    return sum(exact_counts(n, l).values())


def reconstruct_L(n: int, l: int) -> int:
    return comb(matchstick_number(n - 1), l) - count_violating_subsets(n, l)


def rank_sum_report(n: int, l: int) -> dict[int, int]:
    """Total exact count per rank, ranks 1..l-1."""
    totals = {r: 0 for r in range(1, l)}
    for p, v in exact_counts(n, l).items():
        totals[p.rank] += v
    return totals
