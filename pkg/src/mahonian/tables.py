"""Inversion tables and the three codecs pairing them with permutations.

An inversion table of length n is a tuple ``(a[0], ..., a[n-1])`` with
``0 <= a[j] <= j``.  There are n! of them, and each of three insertion
schemes reads the same table as build instructions for a distinct
permutation, inserting j = 0, 1, ..., n-1 in turn:

* inv-insertion: place j so that exactly a[j] existing items end up to its
  right; each step creates a[j] inversions.
* maj-insertion: place j at the unique slot that raises the major index by
  exactly a[j].
* rightmost-insertion: append j - a[j] at the right end and bump every
  existing value >= j - a[j] by one; each step creates a[j] inversions and
  a descent at position j exactly when a[j] > a[j-1].

Decoders trust their input; route raw data through ``make_table`` first.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Sequence

from .permutations import (
    ENUM_CAP_DEFAULT,
    Permutation,
    descent_positions,
    inverse,
    maj_stat,
)

__all__ = [
    "InversionTable",
    "InsertionOutcome",
    "CODECS",
    "DECODERS",
    "ENCODERS",
    "make_table",
    "all_tables",
    "decode_inv",
    "encode_inv",
    "maj_insertion_outcome",
    "decode_maj",
    "encode_maj",
    "decode_rightmost",
    "encode_rightmost",
    "table_sum",
    "table_ascent_sum",
]

InversionTable = tuple[int, ...]


class InsertionOutcome(NamedTuple):
    """Slot chosen for a maj-insertion step and the increase it realizes."""

    position: int
    maj_delta: int


def make_table(entries: Sequence[int]) -> InversionTable:
    """Validate that ``0 <= entries[j] <= j`` for every j.

    >>> make_table((0, 1, 0, 3, 3))
    (0, 1, 0, 3, 3)
    >>> make_table((1, 0))
    Traceback (most recent call last):
        ...
    ValueError: entries[0] = 1 is out of range 0..0
    """
    for j, a in enumerate(entries):
        if not 0 <= a <= j:
            raise ValueError(f"entries[{j}] = {a} is out of range 0..{j}")
    return tuple(entries)


def all_tables(n: int, max_n: int = ENUM_CAP_DEFAULT) -> Iterator[InversionTable]:
    """Yield all n! inversion tables of length n once each.

    Mixed-radix counting: entry j is a digit in base j+1, rightmost digit
    fastest, so the order is lexicographic and deterministic.

    >>> list(all_tables(2))
    [(0, 0), (0, 1)]
    """
    if n > max_n:
        raise ValueError(f"n = {n} exceeds the enumeration cap {max_n}")
    return iter(itertools.product(*(range(j + 1) for j in range(n))))


def decode_inv(t: Sequence[int]) -> Permutation:
    """Decode by inv-insertion: step j leaves t[j] items to the right of j.

    >>> decode_inv((0, 1, 0, 3, 3))
    (3, 4, 1, 0, 2)
    >>> decode_inv((0, 0, 0))
    (0, 1, 2)
    """
    word: list[int] = []
    for j, a in enumerate(t):
        word.insert(j - a, j)
    return tuple(word)


def encode_inv(p: Sequence[int]) -> InversionTable:
    """Invert decode_inv: a[j] counts values smaller than j to its right.

    >>> encode_inv((3, 4, 1, 0, 2))
    (0, 1, 0, 3, 3)
    """
    n = len(p)
    position = inverse(p)
    return tuple(
        sum(1 for k in range(position[j] + 1, n) if p[k] < j) for j in range(n)
    )


def maj_insertion_outcome(word: Sequence[int], target_delta: int) -> InsertionOutcome:
    """Slot where inserting the new maximum raises maj by exactly target_delta.

    `word` must be a permutation of ``range(len(word))``; the new maximum
    ``len(word)`` may be placed in any of the len(word)+1 slots.  Writing
    kappa for the number of descents of `word`, the slot is:

    * ``target_delta == 0``: the rightmost slot;
    * ``1 <= target_delta <= kappa``: the target_delta-th largest descent
      position (the shifted descents account for the whole increase);
    * ``kappa < target_delta <= len(word)``: the (target_delta - kappa)-th
      slot from the left that is not a descent, slot 0 included (one new
      descent appears and every descent to its right shifts by one).

    Distinct deltas always get distinct slots, which is what makes
    maj-insertion decoding invertible.

    >>> maj_insertion_outcome((2, 4, 1, 3, 5, 0), 2)
    InsertionOutcome(position=2, maj_delta=2)
    >>> maj_insertion_outcome((), 0)
    InsertionOutcome(position=0, maj_delta=0)
    """
    j = len(word)
    if not 0 <= target_delta <= j:
        raise ValueError(f"target_delta = {target_delta} is out of range 0..{j}")
    if target_delta == 0:
        return InsertionOutcome(j, 0)
    descents = descent_positions(word)
    if target_delta <= len(descents):
        return InsertionOutcome(descents[-target_delta], target_delta)
    r = target_delta - len(descents)
    non_descents = [i for i in range(j) if i == 0 or word[i - 1] < word[i]]
    return InsertionOutcome(non_descents[r - 1], target_delta)


def decode_maj(t: Sequence[int]) -> Permutation:
    """Decode by maj-insertion: step j raises the major index by t[j].

    >>> decode_maj((0, 1, 2))
    (2, 1, 0)
    >>> decode_maj((0, 0, 0, 0))
    (0, 1, 2, 3)
    """
    word: list[int] = []
    for j, a in enumerate(t):
        word.insert(maj_insertion_outcome(word, a).position, j)
    return tuple(word)


def encode_maj(p: Sequence[int]) -> InversionTable:
    """Invert decode_maj: delete the maxima in turn, recording each maj drop.

    Deleting the current maximum j undoes the insertion step that placed it,
    so the drop in maj is exactly the entry a[j].

    >>> encode_maj((2, 1, 0))
    (0, 1, 2)
    """
    word = list(p)
    entries = [0] * len(p)
    for j in reversed(range(len(p))):
        before = maj_stat(word)
        word.remove(j)
        entries[j] = before - maj_stat(word)
    return tuple(entries)


def decode_rightmost(t: Sequence[int]) -> Permutation:
    """Decode by rightmost-insertion: append j - t[j], bumping values above.

    Step j appends ``j - t[j]`` and increments every earlier value that is
    >= the new one, keeping the word a permutation.

    >>> decode_rightmost((0, 1, 0, 3, 3))
    (3, 2, 4, 0, 1)
    >>> decode_rightmost((0, 1))
    (1, 0)
    """
    word: list[int] = []
    for j, a in enumerate(t):
        new = j - a
        word = [v + 1 if v >= new else v for v in word]
        word.append(new)
    return tuple(word)


def encode_rightmost(p: Sequence[int]) -> InversionTable:
    """Invert decode_rightmost by peeling the last value off each step.

    Equals ``encode_inv(inverse(p))``; the two routes are kept independent
    and compared in the tests.

    >>> encode_rightmost((3, 2, 4, 0, 1))
    (0, 1, 0, 3, 3)
    """
    word = list(p)
    entries = [0] * len(p)
    for j in reversed(range(len(p))):
        last = word.pop()
        entries[j] = j - last
        word = [v - 1 if v > last else v for v in word]
    return tuple(entries)


def table_sum(t: Sequence[int]) -> int:
    """Sum of the entries: inv of the inv- or rightmost-decoded permutation.

    >>> table_sum((0, 1, 0, 3, 3))
    7
    """
    return sum(t)


def table_ascent_sum(t: Sequence[int]) -> int:
    """Sum of ascent positions j >= 1 with t[j] > t[j-1]: maj of the
    rightmost-decoded permutation.

    >>> table_ascent_sum((0, 1, 0, 3, 3))
    4
    """
    return sum(j for j in range(1, len(t)) if t[j] > t[j - 1])


CODECS = ("inv", "maj", "rightmost")

DECODERS = {"inv": decode_inv, "maj": decode_maj, "rightmost": decode_rightmost}
ENCODERS = {"inv": encode_inv, "maj": encode_maj, "rightmost": encode_rightmost}
