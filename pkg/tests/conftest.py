from fractions import Fraction

import pytest


def set_partitions(elements):
    """All set partitions of a list, as lists of blocks."""
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for partition in set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]


def count_partitions(size, blocks, distinct=0):
    """Partitions of {0..size-1} into ``blocks`` blocks, first ``distinct`` elements separated."""
    total = 0
    for partition in set_partitions(list(range(size))):
        if len(partition) != blocks:
            continue
        if all(sum(1 for e in block if e < distinct) <= 1 for block in partition):
            total += 1
    return total


def brute_sum(p, a, d, n):
    a, d = Fraction(a), Fraction(d)
    return sum((a + s * d) ** p for s in range(n + 1))


def brute_hypersum(p, a, d, n, r):
    """Literal nested recursion, no memo: S^(r)(n) = sum_j S^(r-1)(j)."""
    if r == 0:
        return brute_sum(p, a, d, n)
    return sum(brute_hypersum(p, a, d, j, r - 1) for j in range(n + 1))


@pytest.fixture
def F():
    return Fraction
