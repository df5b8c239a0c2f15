"""Exact counts L_{n,l} of l non-overlapping lozenges in the side-n triangle.

Two independent counters:

* :func:`count_brute_force` picks internal edges to delete, pruning any edge
  that shares a unit triangle with one already picked.
* :func:`count_dp` sweeps the unit triangles row by row and counts matchings
  of the face-adjacency graph, carrying a bitmask profile of which faces in
  the next row are already covered.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import build_grid, matchstick_number

DEFAULT_BRUTE_GUARD = 5


class GuardError(ValueError):
    """Raised when an exhaustive count is requested beyond its size guard."""


@dataclass(frozen=True)
class CountVector:
    """L_{n,0..capacity}, zero padded up to floor(n**2 / 2)."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        capacity = self.n * self.n // 2
        if len(self.counts) > capacity + 1:
            raise ValueError(f"{len(self.counts)} entries exceed capacity {capacity} + 1")
        if len(self.counts) < capacity + 1:
            padded = tuple(self.counts) + (0,) * (capacity + 1 - len(self.counts))
            object.__setattr__(self, "counts", padded)
        else:
            object.__setattr__(self, "counts", tuple(self.counts))

    @property
    def capacity(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, l: int) -> int:
        return self.counts[l] if 0 <= l < len(self.counts) else 0

    def __len__(self) -> int:
        return len(self.counts)

    def trimmed(self) -> tuple[int, ...]:
        """Counts up to and including the last nonzero entry."""
        return self.counts[: max_lozenge_count(self) + 1]


def _internal_edge_conflicts(n: int) -> list[int]:
    grid = build_grid(n)
    internal = grid.internal_edges()
    position = {e: i for i, e in enumerate(internal)}
    by_face: dict[int, list[int]] = {}
    for e in internal:
        for f in grid.edges[e].faces:
            by_face.setdefault(f, []).append(position[e])
    conflicts = [0] * len(internal)
    for members in by_face.values():
        for i in members:
            for j in members:
                if i != j:
                    conflicts[i] |= 1 << j
    return conflicts


def count_brute_force(n: int, max_n_guard: int = DEFAULT_BRUTE_GUARD) -> CountVector:
    """Count edge subsets with no two edges on a common unit triangle.

    Equivalent to scanning all 2**M_{n-1} subsets of internal edges, but
    conflicting edges are skipped as soon as they arise.
    """
    if n < 1:
        raise ValueError(f"side length must be >= 1, got {n}")
    if n > max_n_guard:
        m = matchstick_number(n - 1)
        raise GuardError(
            f"brute force for n={n} scans 2^{m} edge subsets; guard is n <= {max_n_guard}")

    conflicts = _internal_edge_conflicts(n)
    m = len(conflicts)
    counts = [0] * (n * n // 2 + 1)

    def extend(start: int, blocked: int, size: int) -> None:
        counts[size] += 1
        for j in range(start, m):
            if not blocked >> j & 1:
                extend(j + 1, blocked | conflicts[j], size + 1)

    extend(0, 0, 0)
    return CountVector(n, tuple(counts))


def count_dp(n: int) -> CountVector:
    """Matching polynomial of the face-adjacency graph by a row sweep.

    Faces of row r are visited in slot order: up_0, down_0, up_1, ..., up_r.
    The profile mask has one bit per down face: bits below the cursor refer
    to row r+1 (covered by a vertical pair from an up face of row r), bits at
    or above it to row r (covered from row r-1).  ``carry`` says the face
    under the cursor was already paired with its left neighbour.

    Each state holds a polynomial in x (x marks one lozenge) packed into a
    single int, coefficient l occupying bits [l*width, (l+1)*width).  No
    coefficient can exceed 2**M_{n-1}, so width = M_{n-1} + 1 never carries.
    """
    if n < 1:
        raise ValueError(f"side length must be >= 1, got {n}")
    width = matchstick_number(n - 1) + 1

    profile = {0: 1}
    for row in range(n):
        last_row = row == n - 1
        states = {(mask, 0): poly for mask, poly in profile.items()}
        for k in range(row + 1):
            # up face k: pair below (sets bit k for row+1) or right with down_k
            nxt: dict[tuple[int, int], int] = {}
            for (mask, carry), poly in states.items():
                down_covered = mask >> k & 1
                rest = mask & ~(1 << k)
                key = (rest, down_covered)
                nxt[key] = nxt.get(key, 0) + poly
                if carry:
                    continue
                shifted = poly << width
                if not last_row:
                    key = (rest | 1 << k, down_covered)
                    nxt[key] = nxt.get(key, 0) + shifted
                if k < row and not down_covered:
                    key = (rest, 1)
                    nxt[key] = nxt.get(key, 0) + shifted
            states = nxt
            if k == row:
                break
            # down face k: only its right neighbour up_{k+1} is still open
            nxt = {}
            for (mask, carry), poly in states.items():
                key = (mask, 0)
                nxt[key] = nxt.get(key, 0) + poly
                if not carry:
                    key = (mask, 1)
                    nxt[key] = nxt.get(key, 0) + (poly << width)
            states = nxt

        profile = {}
        for (mask, carry), poly in states.items():
            assert carry == 0
            profile[mask] = profile.get(mask, 0) + poly

    packed = sum(profile.values())
    low = (1 << width) - 1
    counts = []
    while packed:
        counts.append(packed & low)
        packed >>= width
    return CountVector(n, tuple(counts))


def row_sum(v: CountVector) -> int:
    return sum(v.counts)


def max_lozenge_count(v: CountVector) -> int:
    """Largest l with a nonzero count."""
    return max(l for l, c in enumerate(v.counts) if c)
