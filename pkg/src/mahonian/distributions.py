"""Exact count vectors and joint matrices for the inv and maj statistics.

All counts are exact Python integers.  The Mahonian vector comes from a
small convolution DP; everything else is brute force over the n! objects,
so the enumeration caps apply.
"""

from __future__ import annotations

from typing import NamedTuple

from .permutations import ENUM_CAP_DEFAULT, all_permutations, inv_stat, maj_stat
from .tables import all_tables, table_ascent_sum, table_sum

__all__ = [
    "DistributionVector",
    "JointMatrix",
    "DP_CAP_DEFAULT",
    "STAT_FUNCS",
    "mahonian_numbers",
    "stat_distribution",
    "joint_distribution",
    "table_stat_joint",
    "check_symmetry",
]

DP_CAP_DEFAULT = 20

STAT_FUNCS = {"inv": inv_stat, "maj": maj_stat}


class DistributionVector(NamedTuple):
    """Counts of length-n permutations by statistic value k = 0..n(n-1)/2."""

    n: int
    counts: tuple[int, ...]


class JointMatrix(NamedTuple):
    """cells[k][k2] = number of length-n permutations with inv=k, maj=k2."""

    n: int
    cells: tuple[tuple[int, ...], ...]


def mahonian_numbers(n: int, max_n: int = DP_CAP_DEFAULT) -> DistributionVector:
    """b(n, k): inversion tables of length n whose entries sum to k.

    Convolution DP: start from the one-point distribution of the empty
    table and fold in the uniform block {0..j} for j = 1..n-1 (multiplying
    out (1 + q + ... + q^j) coefficient-wise).

    >>> mahonian_numbers(3).counts
    (1, 2, 2, 1)
    """
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the cap {max_n}")
    counts = [1]
    for j in range(1, n):
        grown = [0] * (len(counts) + j)
        for k, c in enumerate(counts):
            for d in range(j + 1):
                grown[k + d] += c
        counts = grown
    return DistributionVector(n, tuple(counts))


def stat_distribution(
    n: int, stat: str, max_n: int = ENUM_CAP_DEFAULT
) -> DistributionVector:
    """Brute-force counts of 'inv' or 'maj' over all n! permutations.

    >>> stat_distribution(3, "maj").counts
    (1, 2, 2, 1)
    """
    try:
        stat_of = STAT_FUNCS[stat]
    except KeyError:
        raise ValueError(f"unknown statistic {stat!r}; expected 'inv' or 'maj'") from None
    counts = [0] * (n * (n - 1) // 2 + 1)
    for p in all_permutations(n, max_n):
        counts[stat_of(p)] += 1
    return DistributionVector(n, tuple(counts))


def joint_distribution(n: int, max_n: int = ENUM_CAP_DEFAULT) -> JointMatrix:
    """Exact joint counts of (inv, maj) over all n! permutations.

    >>> joint_distribution(2).cells
    ((1, 0), (0, 1))
    """
    size = n * (n - 1) // 2 + 1
    cells = [[0] * size for _ in range(size)]
    for p in all_permutations(n, max_n):
        cells[inv_stat(p)][maj_stat(p)] += 1
    return JointMatrix(n, tuple(tuple(row) for row in cells))


def table_stat_joint(n: int, max_n: int = ENUM_CAP_DEFAULT) -> JointMatrix:
    """Joint counts of (entry sum, ascent-position sum) over all tables.

    Cell for cell this equals joint_distribution(n): rightmost-insertion
    decoding transports one pair of statistics onto the other.
    """
    size = n * (n - 1) // 2 + 1
    cells = [[0] * size for _ in range(size)]
    for t in all_tables(n, max_n):
        cells[table_sum(t)][table_ascent_sum(t)] += 1
    return JointMatrix(n, tuple(tuple(row) for row in cells))


def check_symmetry(m: JointMatrix) -> list[tuple[int, int, int, int]]:
    """All (k, k2, cells[k][k2], cells[k2][k]) with mismatched mirror cells.

    An empty list means the matrix is symmetric.

    >>> check_symmetry(joint_distribution(3))
    []
    """
    violations = []
    size = len(m.cells)
    for k in range(size):
        for k2 in range(k + 1, size):
            if m.cells[k][k2] != m.cells[k2][k]:
                violations.append((k, k2, m.cells[k][k2], m.cells[k2][k]))
    return violations
