from math import comb

import pytest

from lozenge.counting import (
    CountVector,
    GuardError,
    count_brute_force,
    count_dp,
    max_lozenge_count,
    row_sum,
)
from lozenge.geometry import matchstick_number, tri_number
from oracles import literal_subset_scan, matchings_by_size


@pytest.mark.parametrize("n, expected", [
    (1, [1]),
    (2, [1, 3]),
    (3, [1, 9, 24, 18]),
])
def test_brute_force_small(n, expected):
    assert list(count_brute_force(n).trimmed()) == expected


def test_brute_force_guard():
    with pytest.raises(GuardError, match=r"2\^45"):
        count_brute_force(6)
    assert count_brute_force(2, max_n_guard=2).trimmed() == (1, 3)


def test_dp_examples():
    assert count_dp(4).trimmed() == (1, 18, 126, 434, 762, 630, 187)
    assert count_dp(15)[11] == 32139701729335767774


@pytest.mark.parametrize("n", range(1, 6))
def test_dp_equals_brute_force(n):
    assert count_dp(n) == count_brute_force(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_literal_scan_agrees(n):
    assert list(count_brute_force(n).trimmed()) == literal_subset_scan(n)


@pytest.mark.parametrize("n", range(1, 5))
def test_matching_model_agrees(n):
    assert list(count_dp(n).trimmed()) == matchings_by_size(n)


@pytest.mark.parametrize("n", range(1, 13))
def test_count_vector_invariants(n):
    v = count_dp(n)
    m = matchstick_number(n - 1)
    assert v.capacity == n * n // 2
    assert v[0] == 1
    assert v[1] == m or n == 1
    assert all(v[l] <= comb(m, l) for l in range(len(v)))
    top = max_lozenge_count(v)
    # n unit triangles are always left over at the maximum
    assert top == tri_number(n - 1)
    assert all(c == 0 for c in v.counts[top + 1:])


@pytest.mark.parametrize("n, total", [(1, 1), (3, 52), (5, 286242)])
def test_row_sum(n, total):
    assert row_sum(count_dp(n)) == total


@pytest.mark.parametrize("n, top, value", [(2, 1, 3), (4, 6, 187), (7, 21, 3198404)])
def test_max_lozenge_count(n, top, value):
    v = count_dp(n)
    assert max_lozenge_count(v) == top
    assert v[top] == value


def test_count_vector_padding_and_access():
    v = CountVector(3, (1, 9, 24, 18))
    assert v.counts == (1, 9, 24, 18, 0)
    assert v[7] == 0
    assert v.trimmed() == (1, 9, 24, 18)
    with pytest.raises(ValueError):
        CountVector(2, (1, 3, 0, 0))


def test_dp_deterministic():
    assert count_dp(9) == count_dp(9)
