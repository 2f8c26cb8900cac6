"""Independent evaluators of S_p(n) = sum_{s=0}^{n} (a + s d)^p.

``powersum_direct`` is the brute-force oracle; every other function is a
separate closed formula and shares no code path with it beyond the
primitives in :mod:`hypersums.rational`.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd

from .bernoulli import bernoulli_poly, evaluate
from .rational import SumQuery, binomial, ratpow
from .series import TruncatedSeries, exp_series
from .special import r_stirling2, weighted_stirling, whitney


class NotApplicable(ValueError):
    """The requested formula's preconditions do not hold for this query."""


def powersum_direct(q: SumQuery) -> Fraction:
    return sum((ratpow(t, q.p) for t in q.terms()), Fraction(0))


def powersum_stirling(q: SumQuery) -> Fraction:
    """d^p * sum_k k! C(n+1, k+1) W(p, k; a/d)."""
    x = q.ratio
    total = Fraction(0)
    for k in range(q.p + 1):
        total += factorial(k) * binomial(q.n + 1, k + 1) * weighted_stirling(q.p, k, x)
    return q.d ** q.p * total


def powersum_bernoulli_diff(q: SumQuery) -> Fraction:
    """d^p/(p+1) * (B_{p+1}(n + a/d + 1) - B_{p+1}(a/d))."""
    x = q.ratio
    b = bernoulli_poly(q.p + 1)
    return q.d ** q.p / (q.p + 1) * (evaluate(b, q.n + x + 1) - evaluate(b, x))


def powersum_bernoulli_sum(q: SumQuery) -> Fraction:
    """d^p/(p+1) * sum_{s<=p} C(p+1, s) (n+1)^{p+1-s} B_s(a/d)."""
    x = q.ratio
    total = Fraction(0)
    for s in range(q.p + 1):
        total += binomial(q.p + 1, s) * (q.n + 1) ** (q.p + 1 - s) * evaluate(bernoulli_poly(s), x)
    return q.d ** q.p / (q.p + 1) * total


def powersum_rstirling(q: SumQuery) -> Fraction:
    """d^p * sum_k k! C(n+1, k+1) {p + a/d over k + a/d}_{a/d}.

    Requires a/d to be a non-negative integer and p > 0.
    """
    x = q.ratio
    if x.denominator != 1 or x < 0:
        raise NotApplicable(f"a/d = {x} is not a non-negative integer")
    if q.p == 0:
        raise NotApplicable("the r-Stirling formula is stated for p > 0")
    r = x.numerator
    total = sum(
        factorial(k) * binomial(q.n + 1, k + 1) * r_stirling2(q.p, k, r)
        for k in range(q.p + 1)
    )
    return q.d ** q.p * total


def powersum_whitney(q: SumQuery) -> Fraction:
    """sum_k k! d^k C(n+1, k+1) W_{d,a}(p, k).

    The Whitney modulus is d and the shift is a, so that
    d^k W_{d,a}(p, k) = d^p W(p, k; a/d) and the formula agrees with the
    Stirling one term by term.  Requires coprime integers with d >= 1 and
    a >= 0.
    """
    a, d = q.a, q.d
    if a.denominator != 1 or d.denominator != 1:
        raise NotApplicable("a and d must be integers")
    a, d = a.numerator, d.numerator
    if gcd(a, d) != 1:
        raise NotApplicable(f"a = {a} and d = {d} are not coprime")
    if d < 1 or a < 0:
        raise NotApplicable("needs modulus d >= 1 and shift a >= 0")
    total = sum(
        factorial(k) * d**k * binomial(q.n + 1, k + 1) * whitney(d, a, q.p, k)
        for k in range(q.p + 1)
    )
    return Fraction(total)


def powersum_egf(a, d, n: int, order: int) -> TruncatedSeries:
    """sum_{k=0}^{n} e^{(a + k d) z}; p! [z^p] is S_p(n)."""
    q = SumQuery(0, a, d, n)
    total = TruncatedSeries.constant(0, order)
    for t in q.terms():
        total = total + exp_series(t, order)
    return total


METHODS = {
    "direct": powersum_direct,
    "stirling": powersum_stirling,
    "bernoulli-diff": powersum_bernoulli_diff,
    "bernoulli-sum": powersum_bernoulli_sum,
    "rstirling": powersum_rstirling,
    "whitney": powersum_whitney,
}


def evaluate_all(q: SumQuery) -> dict[str, Fraction | None]:
    """Every method's value, ``None`` where the method does not apply."""
    out: dict[str, Fraction | None] = {}
    for name, fn in METHODS.items():
        try:
            out[name] = fn(q)
        except NotApplicable:
            out[name] = None
    return out
