"""Weighted Stirling numbers of the second kind and their integer specializations.

The weighted Stirling number W(n, i; x) = (1/i!) Delta^i x^n is computed two
ways: by the triangular recurrence (memoized per weight ``x``) and by the
explicit alternating sum.  Classical Stirling, r-Stirling and r-Whitney
numbers are read off the recurrence tables.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .rational import RationalLike, as_rational, binomial, ratpow


class IndexOutOfRange(IndexError):
    pass


class NonIntegerResult(ArithmeticError):
    """An identity that must produce an integer did not; signals an arithmetic bug."""


class WeightedStirlingTable:
    """Rows 0..n_max of the triangle W(n, i; x), grown on demand.

    Growth is serialized by a lock; completed rows are never mutated.
    """

    def __init__(self, x: RationalLike):
        self.x = as_rational(x)
        self._rows: list[tuple[Fraction, ...]] = [(Fraction(1),)]
        self._lock = threading.Lock()

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    def _grow(self, n: int) -> None:
        with self._lock:
            rows = self._rows
            x = self.x
            while len(rows) <= n:
                prev = rows[-1]
                m = len(prev) - 1
                # W(m+1, i) = W(m, i-1) + (x+i) W(m, i)
                row = [(x * prev[0])]
                for i in range(1, m + 1):
                    row.append(prev[i - 1] + (x + i) * prev[i])
                row.append(prev[m])
                rows.append(tuple(row))

    def row(self, n: int) -> tuple[Fraction, ...]:
        if n > self.n_max:
            self._grow(n)
        return self._rows[n]

    def __getitem__(self, ni):
        n, i = ni
        if i < 0 or i > n:
            return Fraction(0)
        return self.row(n)[i]

    def rows(self, n_max: int) -> list[tuple[Fraction, ...]]:
        self.row(n_max)
        return self._rows[: n_max + 1]


_tables: dict[Fraction, WeightedStirlingTable] = {}
_tables_lock = threading.Lock()


def stirling_table(x: RationalLike) -> WeightedStirlingTable:
    x = as_rational(x)
    table = _tables.get(x)
    if table is None:
        with _tables_lock:
            table = _tables.setdefault(x, WeightedStirlingTable(x))
    return table


def weighted_stirling(n: int, i: int, x: RationalLike) -> Fraction:
    """W(n, i; x) by recurrence; zero for i outside 0..n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return stirling_table(x)[n, i]


def weighted_stirling_explicit(n: int, i: int, x: RationalLike) -> Fraction:
    """(1/i!) * sum_j (-1)^{i-j} C(i, j) (x + j)^n."""
    if n < 0 or i < 0 or i > n:
        raise IndexOutOfRange(f"need 0 <= i <= n, got n={n}, i={i}")
    x = as_rational(x)
    total = Fraction(0)
    for j in range(i + 1):
        term = binomial(i, j) * ratpow(x + j, n)
        total += term if (i - j) % 2 == 0 else -term
    return total / factorial(i)


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to non-integer {value}")
    return value.numerator


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind {n over k}."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    return _integral(weighted_stirling(n, k, 0), f"stirling2({n}, {k})")


def r_stirling2(n: int, k: int, r: int) -> int:
    """{n+r over k+r}_r, the r-Stirling number, as W(n, k; r)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    if n < 0 or k < 0:
        return 0
    return _integral(weighted_stirling(n, k, r), f"r_stirling2({n}, {k}, {r})")


def whitney(m: int, r: int, n: int, i: int) -> int:
    """r-Whitney number of the second kind W_{m,r}(n, i) = m^{n-i} W(n, i; r/m).

    Note: these satisfy (mx + r)^n = sum_i m^i W_{m,r}(n, i) x(x-1)...(x-i+1)
    with the *falling* factorial; the rising-factorial form of this expansion
    disagrees with the generating function (1/(m^i i!)) e^{rz}(e^{mz}-1)^i.
    """
    if m < 1:
        raise ValueError("modulus m must be a positive integer")
    if r < 0 or n < 0:
        raise ValueError("r and n must be non-negative")
    if i < 0 or i > n:
        return 0
    value = Fraction(m) ** (n - i) * weighted_stirling(n, i, Fraction(r, m))
    return _integral(value, f"whitney({m}, {r}, {n}, {i})")
