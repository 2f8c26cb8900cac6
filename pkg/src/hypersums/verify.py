"""Cross-formula verification suite behind ``hypersums verify``.

Every check compares an independent evaluation path with an oracle and
produces one :class:`CheckRecord` per grid point.  Record order is fixed by
the grid definition, so the JSON form of a report is reproducible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator

from . import bernoulli, hypersum, powersum, special
from .rational import SumQuery, binomial, format_rational
from .series import TruncatedSeries, bivariate_expand, exp_series

F = Fraction


@dataclass(frozen=True)
class Grid:
    name: str
    ps_p: int
    ps_n: int
    ps_pairs: tuple
    hs_p: int
    hs_n: int
    hs_r: int
    hs_pairs: tuple
    egf_order: int
    egf_n: int
    egf_r: int
    egf_pairs: tuple
    gf_R: int
    gf_N: int
    gf_n: int
    gf_p: int
    stirling_n: int
    stirling_weights: tuple
    bernoulli_n: int
    bernoulli_points: tuple

    def describe(self) -> dict:
        def pairs(ps):
            return [[format_rational(a), format_rational(d)] for a, d in ps]

        return {
            "name": self.name,
            "powersum": {"p_max": self.ps_p, "n_max": self.ps_n, "pairs": pairs(self.ps_pairs)},
            "hypersum": {"p_max": self.hs_p, "n_max": self.hs_n, "r_max": self.hs_r, "pairs": pairs(self.hs_pairs)},
            "egf": {"order": self.egf_order, "n_max": self.egf_n, "r_max": self.egf_r, "pairs": pairs(self.egf_pairs)},
            "gf": {"R": self.gf_R, "N": self.gf_N, "n_max": self.gf_n, "p_max": self.gf_p},
            "stirling": {"n_max": self.stirling_n, "weights": [format_rational(x) for x in self.stirling_weights]},
            "bernoulli": {"n_max": self.bernoulli_n, "points": [format_rational(x) for x in self.bernoulli_points]},
        }


POWERSUM_PAIRS = ((F(0), F(1)), (F(1), F(1)), (F(1), F(2)), (F(2), F(3)), (F(-1), F(2)), (F(1, 2), F(1, 3)), (F(5), F(-2)))
HYPERSUM_PAIRS = ((F(0), F(1)), (F(1), F(1)), (F(1), F(2)), (F(-1), F(2)), (F(1, 2), F(1, 3)))
SMALL_PAIRS = ((F(0), F(1)), (F(1), F(2)), (F(-1), F(2)), (F(1, 2), F(1, 3)))

GRIDS = {
    "small": Grid(
        "small",
        ps_p=6, ps_n=8, ps_pairs=SMALL_PAIRS,
        hs_p=6, hs_n=8, hs_r=3, hs_pairs=SMALL_PAIRS,
        egf_order=8, egf_n=4, egf_r=3, egf_pairs=SMALL_PAIRS[:2],
        gf_R=8, gf_N=8, gf_n=3, gf_p=4,
        stirling_n=8, stirling_weights=(F(0), F(1), F(1, 2), F(-1, 3)),
        bernoulli_n=8, bernoulli_points=(F(0), F(1), F(1, 2), F(-2, 3)),
    ),
    "full": Grid(
        "full",
        ps_p=8, ps_n=12, ps_pairs=POWERSUM_PAIRS,
        hs_p=6, hs_n=10, hs_r=5, hs_pairs=HYPERSUM_PAIRS,
        egf_order=10, egf_n=5, egf_r=4, egf_pairs=((F(0), F(1)), (F(1), F(2))),
        gf_R=10, gf_N=10, gf_n=4, gf_p=6,
        stirling_n=12, stirling_weights=(F(0), F(1), F(2), F(1, 2), F(-1, 3), F(5, 2)),
        bernoulli_n=12, bernoulli_points=(F(0), F(1), F(1, 2), F(-2, 3), F(3)),
    ),
}


@dataclass
class CheckRecord:
    check: str
    params: dict
    expected_source: str
    passed: bool
    mismatch: dict | None = None

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "expected_source": self.expected_source,
            "status": "pass" if self.passed else "fail",
            "mismatch": self.mismatch,
        }


@dataclass
class VerifyReport:
    grid: dict
    records: list[CheckRecord] = field(default_factory=list)
    duration: float = 0.0

    @property
    def failed(self) -> int:
        return sum(not r.passed for r in self.records)

    @property
    def passed(self) -> int:
        return len(self.records) - self.failed

    @property
    def exit_code(self) -> int:
        return 0 if self.failed == 0 else 1

    def summary(self) -> dict:
        return {"total": len(self.records), "passed": self.passed, "failed": self.failed}

    def to_json(self) -> dict:
        # wall-clock duration is left out so the JSON is reproducible
        return {
            "grid": self.grid,
            "records": [r.to_json() for r in self.records],
            "summary": self.summary(),
        }


def _values_record(check, params, source, values: dict) -> CheckRecord:
    """Pass when every non-None value equals the ``source`` entry."""
    expected = values[source]
    bad = {k: format_rational(v) for k, v in values.items() if v is not None and v != expected}
    if bad:
        bad[source] = format_rational(expected)
        return CheckRecord(check, params, source, False, bad)
    return CheckRecord(check, params, source, True)


def _equal_record(check, params, source, got, expected) -> CheckRecord:
    if got == expected:
        return CheckRecord(check, params, source, True)
    fmt = (lambda s: s.to_json()) if isinstance(got, TruncatedSeries) else format_rational
    return CheckRecord(check, params, source, False, {"got": fmt(got), "expected": fmt(expected)})


def check_powersums(g: Grid) -> Iterator[CheckRecord]:
    for a, d in g.ps_pairs:
        for p in range(g.ps_p + 1):
            for n in range(g.ps_n + 1):
                q = SumQuery(p, a, d, n)
                values = powersum.evaluate_all(q)
                yield _values_record("powersum-agreement", q.as_dict(), "direct", values)
                if p == 0:
                    yield _equal_record("powersum-p0", q.as_dict(), "n+1", values["direct"], F(n + 1))


def check_hypersums(g: Grid) -> Iterator[CheckRecord]:
    for a, d in g.hs_pairs:
        for p in range(g.hs_p + 1):
            for n in range(g.hs_n + 1):
                for r in range(g.hs_r + 1):
                    q = SumQuery(p, a, d, n, r)
                    values = {name: fn(q) for name, fn in hypersum.METHODS.items()}
                    yield _values_record("hypersum-agreement", q.as_dict(), "recursive", values)
                    if r == 0:
                        q0 = SumQuery(p, a, d, n)
                        reduced = {
                            "direct": powersum.powersum_direct(q0),
                            "recursive": values["recursive"],
                            "binomial": values["binomial"],
                            "genbernoulli": values["genbernoulli"],
                            "bernoulli-diff": powersum.powersum_bernoulli_diff(q0),
                        }
                        yield _values_record("reduction-r0", q.as_dict(), "direct", reduced)
                    if r >= 1 and n >= 1:
                        for name, fn in hypersum.METHODS.items():
                            diff = values[name] - fn(SumQuery(p, a, d, n - 1, r))
                            lower = fn(SumQuery(p, a, d, n, r - 1))
                            yield _equal_record("column-difference", {**q.as_dict(), "method": name},
                                                "same method at r-1", diff, lower)


def check_egfs(g: Grid) -> Iterator[CheckRecord]:
    N = g.egf_order
    for a, d in g.egf_pairs:
        for n in range(g.egf_n + 1):
            for r in range(g.egf_r + 1):
                params = {"a": format_rational(a), "d": format_rational(d), "n": n, "r": r, "order": N}
                oracle = TruncatedSeries(
                    F(hypersum.hypersum_recursive(SumQuery(p, a, d, n, r)), factorial(p)) for p in range(N + 1)
                )
                direct = hypersum.hypersum_egf_direct(a, d, n, r, N)
                yield _equal_record("egf-direct", params, "recursive", direct, oracle)
                yield _equal_record("egf-2f1", params, "egf-direct",
                                    hypersum.hypersum_egf_hypergeom(a, d, n, r, N), direct)
                combo = hypersum.hypersum_egf_laurent_parts(a, d, n, r, N)
                residue = [format_rational(c) for c in combo.principal_part()]
                ok = all(c == 0 for c in combo.principal_part())
                yield CheckRecord("egf-laurent-principal-part", params, "zero", ok,
                                  None if ok else {"principal_part": residue})
                yield _equal_record("egf-laurent", params, "egf-direct", combo.regular_part(), direct)
                if r == 0:
                    yield _equal_record("powersum-egf", params, "egf-direct",
                                        powersum.powersum_egf(a, d, n, N), direct)


def check_generating_functions(g: Grid) -> Iterator[CheckRecord]:
    pairs = g.hs_pairs
    for a, d in pairs:
        for n in range(g.gf_n + 1):
            for p in range(g.gf_p + 1):
                rep = hypersum.hypersum_ogf_check(p, a, d, n, g.gf_R)
                yield CheckRecord("ogf-cleared", rep.params, "recursive", rep.passed,
                                  None if rep.passed else {"mismatches": rep.mismatches})
            rep = hypersum.hypersum_doublegf_check(a, d, n, g.gf_R, g.gf_N)
            yield CheckRecord("double-gf-cleared", rep.params, "recursive", rep.passed,
                              None if rep.passed else {"mismatches": rep.mismatches})
            R, N = min(g.gf_R, 5), min(g.gf_N, 5)
            expanded = bivariate_expand(n, a, d, R, N)
            params = {"a": format_rational(a), "d": format_rational(d), "n": n, "R": R, "N": N}
            bad = {}
            for r in range(R + 1):
                for p in range(N + 1):
                    want = hypersum.hypersum_recursive(SumQuery(p, a, d, n, r))
                    got = expanded[r, p] * factorial(p)
                    if got != want:
                        bad[f"{r},{p}"] = [format_rational(got), format_rational(want)]
            yield CheckRecord("double-gf-expansion", params, "recursive", not bad, bad or None)


def check_special_numbers(g: Grid) -> Iterator[CheckRecord]:
    for x in g.stirling_weights:
        for n in range(g.stirling_n + 1):
            for i in range(n + 1):
                yield _equal_record("weighted-stirling", {"n": n, "i": i, "x": format_rational(x)}, "explicit",
                                    special.weighted_stirling(n, i, x),
                                    special.weighted_stirling_explicit(n, i, x))
    order = g.stirling_n
    for x in (F(0), F(1, 2), F(2)):
        for i in range(6):
            egf = (exp_series(x, order) * (exp_series(1, order) - 1) ** i).scale(F(1, factorial(i)))
            row = TruncatedSeries(F(special.weighted_stirling(n, i, x), factorial(n)) for n in range(order + 1))
            yield _equal_record("weighted-stirling-egf", {"i": i, "x": format_rational(x)}, "egf", row, egf)
    wn = min(order, 10)
    for m in (1, 2, 3):
        for r in (0, 1, 2):
            for i in range(5):
                egf = (exp_series(r, wn) * (exp_series(m, wn) - 1) ** i).scale(F(1, m**i * factorial(i)))
                try:
                    row = TruncatedSeries(F(special.whitney(m, r, n, i), factorial(n)) for n in range(wn + 1))
                except special.NonIntegerResult as exc:
                    yield CheckRecord("whitney-egf", {"m": m, "r": r, "i": i}, "egf", False, {"error": str(exc)})
                    continue
                yield _equal_record("whitney-egf", {"m": m, "r": r, "i": i}, "egf", row, egf)
    for r in range(4):
        for n in range(order + 1):
            ok = True
            try:
                for k in range(n + 1):
                    special.r_stirling2(n, k, r)
            except special.NonIntegerResult:
                ok = False
            yield CheckRecord("r-stirling-integral", {"n": n, "r": r}, "integrality", ok)
    for n in range(order + 1):
        for r in range(1, 7):
            for i in range(n + 1):
                lhs = sum(binomial(j - i + r - 1, r - 1) for j in range(i, n + 1))
                yield _equal_record("hockey-stick", {"n": n, "r": r, "i": i}, "C(n+r-i,r)",
                                    F(lhs), F(binomial(n + r - i, r)))


def check_bernoulli(g: Grid) -> Iterator[CheckRecord]:
    yield _equal_record("bernoulli-B1(0)", {}, "-1/2", bernoulli.evaluate(bernoulli.bernoulli_poly(1), 0), F(-1, 2))
    for x in g.bernoulli_points:
        for n in range(g.bernoulli_n + 1):
            params = {"n": n, "x": format_rational(x)}
            poly_value = bernoulli.evaluate(bernoulli.bernoulli_poly(n), x)
            yield _equal_record("bernoulli-stirling", params, "series-division",
                                bernoulli.bernoulli_via_stirling(n, x), poly_value)
            yield _equal_record("gen-bernoulli-order1", params, "series-division",
                                bernoulli.gen_bernoulli(1, n, x), poly_value)


CHECKS = (
    check_powersums,
    check_hypersums,
    check_egfs,
    check_generating_functions,
    check_special_numbers,
    check_bernoulli,
)


def run_verify(grid: str = "small") -> VerifyReport:
    g = GRIDS[grid]
    start = time.perf_counter()
    report = VerifyReport(g.describe())
    for check in CHECKS:
        report.records.extend(check(g))
    report.duration = time.perf_counter() - start
    return report
