"""Hyper-sums S^{(r)}_p(n): the r-fold iterated cumulative sums of power sums.

S^{(0)}_p(n) = sum_{i<=n} (a + i d)^p and S^{(r)}_p(n) = sum_{j<=n} S^{(r-1)}_p(j).
``hypersum_recursive`` evaluates that definition literally and is the oracle
for the closed formulas and generating-function identities below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .bernoulli import gen_bernoulli
from .rational import SumQuery, binomial, format_rational, ratpow
from .series import (
    BivariateSeries,
    LaurentSeries,
    TruncatedSeries,
    exp_series,
    expm1_unit,
    from_egf_values,
    gauss_2f1_terminating,
    laurent_from_quotient,
)


class PrincipalPartResidue(ArithmeticError):
    """The negative-power part of a combination that must be a power series is nonzero."""


@lru_cache(maxsize=4096)
def _hyper_table(p: int, a: Fraction, d: Fraction, n: int, r: int) -> tuple[tuple[Fraction, ...], ...]:
    """Rows S^{(0)}(0..n) .. S^{(r)}(0..n)."""
    level = []
    acc = Fraction(0)
    for s in range(n + 1):
        acc += ratpow(a + s * d, p)
        level.append(acc)
    rows = [tuple(level)]
    for _ in range(r):
        acc = Fraction(0)
        nxt = []
        for v in rows[-1]:
            acc += v
            nxt.append(acc)
        rows.append(tuple(nxt))
    return tuple(rows)


def hypersum_recursive(q: SumQuery) -> Fraction:
    return _hyper_table(q.p, q.a, q.d, q.n, q.r)[q.r][q.n]


def hypersum_binomial(q: SumQuery) -> Fraction:
    """sum_{i<=n} C(n + r - i, r) (a + i d)^p."""
    return sum(
        (binomial(q.n + q.r - i, q.r) * ratpow(q.a + i * q.d, q.p) for i in range(q.n + 1)),
        Fraction(0),
    )


def hypersum_genbernoulli(q: SumQuery) -> Fraction:
    """Closed form through generalized Bernoulli polynomials of orders 1..r+1."""
    p, r, n, d = q.p, q.r, q.n, q.d
    x = q.ratio
    total = gen_bernoulli(r + 1, p + r + 1, x + r + n + 1) / factorial(p + r + 1)
    for k in range(r + 1):
        total -= (
            binomial(n + k, k)
            * gen_bernoulli(r - k + 1, p + r + 1 - k, x + r - k)
            / factorial(p + r + 1 - k)
        )
    return factorial(p) * d**p * total


def hypersum_egf_direct(a, d, n: int, r: int, order: int) -> TruncatedSeries:
    """sum_{k<=n} C(n + r - k, r) e^{(a + k d) z}."""
    q = SumQuery(0, a, d, n, r)
    total = TruncatedSeries.constant(0, order)
    for k, t in enumerate(q.terms()):
        total = total + exp_series(t, order).scale(binomial(n + r - k, r))
    return total


def hypersum_egf_hypergeom(a, d, n: int, r: int, order: int) -> TruncatedSeries:
    """C(n+r+1, r+1) e^{az} 2F1(1, -n; r+2; 1 - e^{dz})."""
    q = SumQuery(0, a, d, n, r)
    u = 1 - exp_series(q.d, order)
    f = gauss_2f1_terminating(n, r + 2, u)
    return (exp_series(q.a, order) * f).scale(binomial(n + r + 1, r + 1))


def hypersum_egf_laurent_parts(a, d, n: int, r: int, order: int) -> LaurentSeries:
    """The full Laurent combination

        e^{(a + d(r+n+1))z} / (e^{dz}-1)^{r+1}
          - sum_{k<=r} C(n+k, k) e^{(a + (r-k)d)z} / (e^{dz}-1)^{r-k+1},

    each term written as z^{-m} * e^{cz} / ((e^{dz}-1)/z)^m, computed at
    working order ``order + r + 1`` so the z^0..z^order part is exact.
    """
    q = SumQuery(0, a, d, n, r)
    a, d = q.a, q.d
    work = order + r + 1
    unit = expm1_unit(d, work)

    def term(c, m):
        return laurent_from_quotient(exp_series(c, work), m, unit**m)

    total = term(a + d * (r + n + 1), r + 1)
    for k in range(r + 1):
        total = total - term(a + (r - k) * d, r - k + 1).scale(binomial(n + k, k))
    return LaurentSeries(total.depth, total.coeffs[: total.depth + order + 1])


def hypersum_egf_laurent(a, d, n: int, r: int, order: int) -> TruncatedSeries:
    """Regular part of the Laurent combination; raises if the principal part survives."""
    combo = hypersum_egf_laurent_parts(a, d, n, r, order)
    residue = [c for c in combo.principal_part() if c != 0]
    if residue:
        raise PrincipalPartResidue(
            f"nonzero principal part {[format_rational(c) for c in combo.principal_part()]}"
        )
    return combo.regular_part()


@dataclass
class IdentityReport:
    """Outcome of checking a cleared-denominator identity coefficient by coefficient."""

    name: str
    params: dict
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def __bool__(self):
        return self.passed


def hypersum_ogf_check(p: int, a, d, n: int, R: int) -> IdentityReport:
    """Check (sum_{r<=R} S^{(r)} z^r) (1-z)^{n+1} == sum_{i<=n} (1-z)^i (a+id)^p.

    Dropped terms (r > R) only reach z^{R+1} and above after multiplying by a
    polynomial, so every coefficient z^0..z^R is fully determined.
    """
    q = SumQuery(p, a, d, n, R)
    report = IdentityReport("ogf", {"p": p, "a": format_rational(q.a), "d": format_rational(q.d), "n": n, "R": R})
    table = _hyper_table(p, q.a, q.d, n, R)
    lhs_series = TruncatedSeries(table[r][n] for r in range(R + 1))
    clearing = TruncatedSeries((-1) ** j * binomial(n + 1, j) for j in range(R + 1))
    lhs = lhs_series * clearing

    rhs = [Fraction(0)] * (R + 1)
    for i, t in enumerate(q.terms()):
        w = ratpow(t, p)
        for j in range(min(i, R) + 1):
            rhs[j] += (-1) ** j * binomial(i, j) * w

    # lowest dropped power is z^{R+1} and the clearing factor has no negative powers
    last_determined = R
    for j in range(last_determined + 1):
        report.checked += 1
        if lhs[j] != rhs[j]:
            report.mismatches.append({"index": j, "lhs": format_rational(lhs[j]), "rhs": format_rational(rhs[j])})
    return report


def hypersum_doublegf_check(a, d, n: int, R: int, N: int) -> IdentityReport:
    """Check the double generating function with the denominator cleared:

        G(z, t) (1-t)^{n+1} (1 - (1-t) e^{dz}) == e^{az} - (1-t)^{n+1} e^{(a+(n+1)d)z}

    where G = sum_{r<=R, p<=N} S^{(r)}_p z^p t^r / p!.  The clearing factor has
    only non-negative powers of t and z, so every (t^r, z^p) with r <= R and
    p <= N is fully determined by the truncated G.
    """
    q = SumQuery(0, a, d, n, R)
    a, d = q.a, q.d
    report = IdentityReport("double-gf", {"a": format_rational(a), "d": format_rational(d), "n": n, "R": R, "N": N})

    tables = [_hyper_table(p, a, d, n, R) for p in range(N + 1)]
    G = BivariateSeries(
        from_egf_values([tables[p][r][n] for p in range(N + 1)]) for r in range(R + 1)
    )
    one_minus_t_pow = [(-1) ** j * binomial(n + 1, j) for j in range(n + 2)]
    P = BivariateSeries.from_t_polynomial(one_minus_t_pow, R, N)
    e_d = exp_series(d, N)
    # 1 - (1-t) e^{dz} = (1 - e^{dz}) + t e^{dz}
    D = BivariateSeries.from_t_polynomial([1 - e_d, e_d], R, N)
    lhs = G * P * D
    rhs = BivariateSeries.from_t_polynomial([exp_series(a, N)], R, N) - P * BivariateSeries.from_t_polynomial(
        [exp_series(a + (n + 1) * d, N)], R, N
    )
    for r in range(R + 1):
        for p in range(N + 1):
            report.checked += 1
            if lhs[r, p] != rhs[r, p]:
                report.mismatches.append(
                    {"index": [r, p], "lhs": format_rational(lhs[r, p]), "rhs": format_rational(rhs[r, p])}
                )
    return report


METHODS = {
    "recursive": hypersum_recursive,
    "binomial": hypersum_binomial,
    "genbernoulli": hypersum_genbernoulli,
}

EGF_KINDS = {
    "egf-direct": hypersum_egf_direct,
    "egf-2f1": hypersum_egf_hypergeom,
    "egf-laurent": hypersum_egf_laurent,
}
