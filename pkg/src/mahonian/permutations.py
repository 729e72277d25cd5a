"""Permutations of [n] = {0, 1, ..., n-1} in one-line notation, with the two
Mahonian statistics inv (inversion count) and maj (major index).

A permutation is an ordinary tuple ``(p[0], ..., p[n-1])`` containing each
value of ``range(n)`` exactly once.  ``make_permutation`` validates arbitrary
input; every other function trusts its argument.  The empty word is a valid
permutation with ``inv == maj == 0``.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

__all__ = [
    "Permutation",
    "ENUM_CAP_DEFAULT",
    "make_permutation",
    "identity",
    "inverse",
    "descent_positions",
    "inv_stat",
    "maj_stat",
    "all_permutations",
]

Permutation = tuple[int, ...]

# Guard against accidental huge enumerations; override per call.
ENUM_CAP_DEFAULT = 10


def make_permutation(word: Sequence[int]) -> Permutation:
    """Validate that `word` is a permutation of ``range(len(word))``.

    >>> make_permutation([2, 4, 1, 3, 5, 0])
    (2, 4, 1, 3, 5, 0)
    >>> make_permutation([])
    ()
    >>> make_permutation([0, 2])
    Traceback (most recent call last):
        ...
    ValueError: word[1] = 2 is out of range 0..1
    """
    n = len(word)
    seen = [False] * n
    for i, v in enumerate(word):
        if not 0 <= v < n:
            raise ValueError(f"word[{i}] = {v} is out of range 0..{n - 1}")
        if seen[v]:
            raise ValueError(f"word[{i}] = {v} appears more than once")
        seen[v] = True
    return tuple(word)


def identity(n: int) -> Permutation:
    """The increasing word 0, 1, ..., n-1.

    >>> identity(3)
    (0, 1, 2)
    """
    return tuple(range(n))


def inverse(p: Sequence[int]) -> Permutation:
    """The inverse permutation q, defined by q[p[i]] = i.

    >>> inverse((3, 4, 1, 0, 2))
    (3, 2, 4, 0, 1)
    >>> inverse(())
    ()
    """
    q = [0] * len(p)
    for i, v in enumerate(p):
        q[v] = i
    return tuple(q)


def descent_positions(p: Sequence[int]) -> list[int]:
    """All positions i >= 1 with p[i-1] > p[i], in increasing order.

    >>> descent_positions((2, 4, 1, 3, 5, 0))
    [2, 5]
    >>> descent_positions((0, 1, 2))
    []
    """
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def inv_stat(p: Sequence[int]) -> int:
    """Number of inversions: pairs of positions i < j with p[i] > p[j].

    Counted with a merge sort rather than the quadratic pair scan; the
    pair-scan definition is the oracle the tests compare against.

    >>> inv_stat((3, 4, 1, 0, 2))
    7
    >>> inv_stat((3, 2, 1, 0))
    6
    """

    def sort_count(seq: list[int]) -> tuple[list[int], int]:
        if len(seq) <= 1:
            return seq, 0
        mid = len(seq) // 2
        left, a = sort_count(seq[:mid])
        right, b = sort_count(seq[mid:])
        merged: list[int] = []
        count = a + b
        i = j = 0
        while i < len(left) and j < len(right):
            if left[i] <= right[j]:
                merged.append(left[i])
                i += 1
            else:
                # left[i:] are all larger than right[j], one inversion each
                count += len(left) - i
                merged.append(right[j])
                j += 1
        merged.extend(left[i:])
        merged.extend(right[j:])
        return merged, count

    return sort_count(list(p))[1]


def maj_stat(p: Sequence[int]) -> int:
    """Major index: the sum of all descent positions.

    >>> maj_stat((2, 4, 1, 3, 5, 0))
    7
    >>> maj_stat((0, 1, 2, 3))
    0
    """
    return sum(descent_positions(p))


def all_permutations(n: int, max_n: int = ENUM_CAP_DEFAULT) -> Iterator[Permutation]:
    """Yield all n! permutations of [n] once each, in lexicographic order.

    The stream is single-consumer; concurrent verification should partition
    the index space rather than share one iterator.

    >>> list(all_permutations(0))
    [()]
    >>> sum(1 for _ in all_permutations(3))
    6
    """
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the enumeration cap {max_n}")
    return iter(itertools.permutations(range(n)))
