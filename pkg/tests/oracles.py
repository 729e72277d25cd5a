"""Definition-level oracles shared by the tests.

These deliberately avoid the package implementation: inversions by the
quadratic pair scan, major index by the descent scan, insertion slots by
trying every slot, and Mahonian numbers by the one-step recurrence.  Tests
compare the fast or clever path in the package against these.
"""


def inv_by_pair_scan(word):
    """Count pairs i < j with word[i] > word[j]."""
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def maj_by_descent_scan(word):
    """Sum the positions i >= 1 with word[i-1] > word[i]."""
    return sum(i for i in range(1, len(word)) if word[i - 1] > word[i])


def insert_at(word, slot, value):
    """The word with `value` spliced in so that it occupies index `slot`."""
    return tuple(word[:slot]) + (value,) + tuple(word[slot:])


def slots_realizing_delta(word, delta):
    """Every slot where inserting the new maximum raises maj by `delta`."""
    j = len(word)
    base = maj_by_descent_scan(word)
    return [
        slot
        for slot in range(j + 1)
        if maj_by_descent_scan(insert_at(word, slot, j)) - base == delta
    ]


def mahonian_by_recurrence(n):
    """Row n of the Mahonian triangle via the one-step recurrence:
    the count at k is the sum of the previous row's counts at k, k-1, ...,
    k-(n-1)."""
    row = [1]
    for m in range(1, n + 1):
        size = m * (m - 1) // 2 + 1
        row = [
            sum(row[k - i] for i in range(min(k, m - 1) + 1) if k - i < len(row))
            for k in range(size)
        ]
    return tuple(row)
