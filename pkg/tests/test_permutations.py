"""Tests for the permutation representation and the inv/maj statistics."""

import math

import pytest

import oracles
from mahonian.permutations import (
    all_permutations,
    descent_positions,
    identity,
    inv_stat,
    inverse,
    maj_stat,
    make_permutation,
)


def test_make_permutation_accepts_valid_word():
    assert make_permutation([2, 4, 1, 3, 5, 0]) == (2, 4, 1, 3, 5, 0)


def test_make_permutation_accepts_empty_word():
    assert make_permutation([]) == ()


def test_make_permutation_rejects_out_of_range():
    with pytest.raises(ValueError, match=r"word\[1\] = 2"):
        make_permutation([0, 2])


def test_make_permutation_rejects_negative():
    with pytest.raises(ValueError, match=r"word\[0\] = -1"):
        make_permutation([-1, 0])


def test_make_permutation_rejects_duplicate():
    with pytest.raises(ValueError, match=r"word\[2\] = 1"):
        make_permutation([1, 0, 1])


def test_identity():
    assert identity(3) == (0, 1, 2)
    assert identity(0) == ()
    assert identity(1) == (0,)


def test_inverse_golden():
    assert inverse((3, 4, 1, 0, 2)) == (3, 2, 4, 0, 1)


def test_inverse_fixes_identity_and_transposition():
    assert inverse(identity(5)) == identity(5)
    assert inverse((1, 0)) == (1, 0)


@pytest.mark.parametrize("n", range(7))
def test_inverse_is_an_involution(n):
    for p in all_permutations(n):
        q = inverse(p)
        assert all(q[p[i]] == i for i in range(n))
        assert inverse(q) == p


def test_descent_positions_golden():
    assert descent_positions((2, 4, 1, 3, 5, 0)) == [2, 5]
    assert descent_positions(identity(5)) == []
    assert descent_positions((2, 1, 0)) == [1, 2]


def test_inv_stat_golden():
    assert inv_stat((3, 4, 1, 0, 2)) == 7
    assert inv_stat(identity(6)) == 0
    assert inv_stat((3, 2, 1, 0)) == 6


def test_maj_stat_golden():
    assert maj_stat((2, 4, 1, 3, 5, 0)) == 7
    assert maj_stat(identity(6)) == 0
    assert maj_stat((3, 2, 4, 0, 1)) == 4


@pytest.mark.parametrize("n", range(8))
def test_inv_stat_matches_pair_scan(n):
    for p in all_permutations(n):
        assert inv_stat(p) == oracles.inv_by_pair_scan(p)


@pytest.mark.parametrize("n", range(7))
def test_maj_stat_sums_descent_positions(n):
    for p in all_permutations(n):
        descents = descent_positions(p)
        assert all(1 <= i <= n - 1 for i in descents)
        assert maj_stat(p) == sum(descents)
        assert maj_stat(p) == oracles.maj_by_descent_scan(p)


@pytest.mark.parametrize("n", range(9))
def test_inv_stat_is_invariant_under_inverse(n):
    for p in all_permutations(n):
        assert inv_stat(p) == inv_stat(inverse(p))


@pytest.mark.parametrize("n", range(7))
def test_inv_stat_bounds_and_extremes(n):
    top = n * (n - 1) // 2
    reversed_identity = tuple(reversed(identity(n)))
    for p in all_permutations(n):
        k = inv_stat(p)
        assert 0 <= k <= top
        if k == 0:
            assert p == identity(n)
        if k == top and n >= 2:
            assert p == reversed_identity


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (3, 6), (8, 40320)])
def test_all_permutations_yields_each_once(n, count):
    seen = set(all_permutations(n))
    assert len(seen) == count == math.factorial(n)


def test_all_permutations_is_deterministic_lexicographic():
    assert list(all_permutations(3)) == [
        (0, 1, 2),
        (0, 2, 1),
        (1, 0, 2),
        (1, 2, 0),
        (2, 0, 1),
        (2, 1, 0),
    ]


def test_all_permutations_enforces_cap():
    with pytest.raises(ValueError, match="cap 10"):
        all_permutations(11)
    with pytest.raises(ValueError, match="cap 4"):
        all_permutations(5, max_n=4)
    assert sum(1 for _ in all_permutations(5, max_n=5)) == 120
