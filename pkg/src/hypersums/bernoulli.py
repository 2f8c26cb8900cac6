"""Classical and generalized (order alpha) Bernoulli polynomials, exactly.

B_n^{(alpha)}(x) is the coefficient of z^n/n! in (z/(e^z - 1))^alpha e^{xz}.
Only non-negative integer orders are supported.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .rational import RationalLike, as_rational, binomial, format_rational
from .series import TruncatedSeries, exp_series, expm1_unit
from .special import weighted_stirling

_cache_lock = threading.Lock()


@lru_cache(maxsize=None)
def _bernoulli_kernel_cached(alpha: int, order: int) -> TruncatedSeries:
    return expm1_unit(1, order).inverse() ** alpha


def bernoulli_kernel(alpha: int, order: int) -> TruncatedSeries:
    """(z/(e^z - 1))^alpha to the given order, i.e. B_k^{(alpha)}(0)/k!."""
    if alpha < 0:
        raise ValueError("alpha must be a non-negative integer")
    with _cache_lock:
        return _bernoulli_kernel_cached(alpha, order)


@dataclass(frozen=True)
class BernoulliPoly:
    """Dense monomial coefficients of B_n^{(alpha)}(x), lowest degree first."""

    alpha: int
    degree: int
    coeffs: tuple[Fraction, ...]

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, x)

    def __str__(self):
        out = ""
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = format_rational(abs(c))
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = mono if (mag == "1" and mono) else (f"{mag}*{mono}" if mono else mag)
            out += (f"-{body}" if sign == "-" else body) if not out else f" {sign} {body}"
        return out or "0"


def generalized_bernoulli_poly(alpha: int, n: int) -> BernoulliPoly:
    """B_n^{(alpha)}(x) collected per power of x.

    [x^j] B_n^{(alpha)}(x) = n! * [z^n] (z/(e^z-1))^alpha z^j / j!,
    i.e. C(n, j) * B_{n-j}^{(alpha)}(0).
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    kernel = bernoulli_kernel(alpha, n)
    coeffs = tuple(
        binomial(n, j) * factorial(n - j) * kernel[n - j] for j in range(n + 1)
    )
    return BernoulliPoly(alpha, n, coeffs)


def bernoulli_poly(n: int) -> BernoulliPoly:
    return generalized_bernoulli_poly(1, n)


def evaluate(poly: BernoulliPoly, x: RationalLike) -> Fraction:
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    return acc


def bernoulli_number(n: int) -> Fraction:
    """B_n = B_n(0), with B_1 = -1/2."""
    return factorial(n) * bernoulli_kernel(1, n)[n]


def bernoulli_via_stirling(n: int, x: RationalLike) -> Fraction:
    """B_n(x) = sum_k (-1)^k k!/(k+1) W(n, k; x), through the weighted Stirling triangle."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = as_rational(x)
    total = Fraction(0)
    for k in range(n + 1):
        term = Fraction(factorial(k), k + 1) * weighted_stirling(n, k, x)
        total += -term if k % 2 else term
    return total


def gen_bernoulli(alpha: int, n: int, x: RationalLike) -> Fraction:
    """B_n^{(alpha)}(x) as n! [z^n] of (z/(e^z-1))^alpha * e^{xz}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    series = bernoulli_kernel(alpha, n) * exp_series(x, n)
    return factorial(n) * series[n]


def gen_bernoulli_egf(alpha: int, x: RationalLike, order: int) -> TruncatedSeries:
    """The generating series (z/(e^z-1))^alpha e^{xz} itself."""
    return bernoulli_kernel(alpha, order) * exp_series(x, order)
