"""Command-line front end.

Exit codes: 0 success, 1 verification failure or disagreement, 2 usage
error, 3 the requested single method does not apply to the query.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import bernoulli, hypersum, powersum, special
from .rational import SumQuery, format_rational, parse_rational
from .verify import GRIDS, run_verify

_NEGATIVE_FRACTION = re.compile(r"^-\d+/\d+$")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NOT_APPLICABLE = 0, 1, 2, 3


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def _whitney_arg(text: str) -> tuple[int, int]:
    try:
        m, r = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected M,R, got {text!r}") from None
    if m < 1 or r < 0:
        raise argparse.ArgumentTypeError("need M >= 1 and R >= 0")
    return m, r


def _nonzero_rational(text: str) -> Fraction:
    value = _rational_arg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("common difference must be nonzero")
    return value


def _add_progression_args(parser: argparse.ArgumentParser, with_p: bool = True) -> None:
    if with_p:
        parser.add_argument("--p", type=_nonneg_int, required=True, help="power")
    parser.add_argument("--a", type=_rational_arg, required=True, help="first term")
    parser.add_argument("--d", type=_nonzero_rational, required=True, help="common difference")
    parser.add_argument("--n", type=_nonneg_int, required=True, help="index of the last term")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypersums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    s = add("sum", "power sum of an arithmetic progression")
    _add_progression_args(s)
    s.add_argument("--method", choices=[*powersum.METHODS, "all"], default="direct")

    h = add("hypersum", "r-fold hyper-sum")
    _add_progression_args(h)
    h.add_argument("--r", type=_nonneg_int, required=True, help="hyper-sum depth")
    h.add_argument("--method", choices=[*hypersum.METHODS, "all"], default="recursive")

    st = add("stirling", "weighted Stirling / r-Stirling / r-Whitney triangles")
    st.add_argument("--n", type=_nonneg_int, required=True, help="last row")
    weight = st.add_mutually_exclusive_group()
    weight.add_argument("--x", type=_rational_arg, help="weight of the weighted Stirling numbers")
    weight.add_argument("--r", type=_nonneg_int, help="r-Stirling numbers {n+r over i+r}_r")
    weight.add_argument("--whitney", type=_whitney_arg, metavar="M,R", help="r-Whitney numbers W_{M,R}")

    b = add("bernoulli", "Bernoulli polynomials of order alpha")
    b.add_argument("--n", type=_nonneg_int, required=True, help="degree")
    b.add_argument("--alpha", type=_nonneg_int, default=1)
    b.add_argument("--at", type=_rational_arg, help="evaluate at this point instead of listing coefficients")

    se = add("series", "dump a generating function as a truncated series")
    se.add_argument("--kind", choices=["egf-direct", "egf-2f1", "egf-laurent", "powersum-egf"], required=True)
    se.add_argument("--order", type=_nonneg_int, required=True)
    _add_progression_args(se, with_p=False)
    se.add_argument("--r", type=_nonneg_int, default=0)
    se.add_argument("--values", action="store_true", help="print k! * [z^k] instead of raw coefficients")

    v = add("verify", "run the cross-formula verification suite")
    v.add_argument("--grid", choices=sorted(GRIDS), default="small")
    return parser


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _evaluate(args, methods: dict, query: SumQuery) -> int:
    names = list(methods) if args.method == "all" else [args.method]
    results = []
    for name in names:
        try:
            value = methods[name](query)
        except powersum.NotApplicable as exc:
            results.append({"method": name, "value": None, "applicable": False, "reason": str(exc)})
        else:
            results.append({"method": name, "value": format_rational(value), "applicable": True})

    applicable = [r["value"] for r in results if r["applicable"]]
    agree = len(set(applicable)) <= 1
    payload = {"query": query.as_dict(), "results": results, "agree": agree}
    if args.method != "all":
        res = results[0]
        lines = [res["value"] if res["applicable"] else f"not applicable: {res['reason']}"]
        _emit(args, payload, lines)
        return EXIT_OK if res["applicable"] else EXIT_NOT_APPLICABLE

    width = max(len(n) for n in names)
    lines = [
        f"{r['method']:<{width}}  {r['value'] if r['applicable'] else 'not applicable'}" for r in results
    ]
    lines.append("AGREE" if agree else "DISAGREE")
    _emit(args, payload, lines)
    return EXIT_OK if agree else EXIT_FAIL


def _cmd_stirling(args) -> int:
    n = args.n
    if args.whitney is not None:
        m, r = args.whitney
        label, value = f"whitney m={m} r={r}", lambda i, k: special.whitney(m, r, i, k)
    elif args.r is not None:
        r = args.r
        label, value = f"r-stirling r={r}", lambda i, k: special.r_stirling2(i, k, r)
    else:
        x = args.x if args.x is not None else Fraction(0)
        label, value = f"weighted-stirling x={format_rational(x)}", lambda i, k: special.weighted_stirling(i, k, x)
    rows = [[format_rational(value(i, k)) for k in range(i + 1)] for i in range(n + 1)]
    width = max(len(c) for row in rows for c in row)
    lines = [" ".join(c.rjust(width) for c in row) for row in rows]
    _emit(args, {"table": label, "rows": rows}, lines)
    return EXIT_OK


def _cmd_bernoulli(args) -> int:
    poly = bernoulli.generalized_bernoulli_poly(args.alpha, args.n)
    if args.at is not None:
        value = format_rational(bernoulli.evaluate(poly, args.at))
        payload = {"alpha": args.alpha, "n": args.n, "x": format_rational(args.at), "value": value}
        _emit(args, payload, [value])
    else:
        coeffs = [format_rational(c) for c in poly.coeffs]
        _emit(args, {"alpha": args.alpha, "n": args.n, "coeffs": coeffs}, [" ".join(coeffs)])
    return EXIT_OK


def _cmd_series(args) -> int:
    if args.kind == "powersum-egf":
        s = powersum.powersum_egf(args.a, args.d, args.n, args.order)
    else:
        s = hypersum.EGF_KINDS[args.kind](args.a, args.d, args.n, args.r, args.order)
    coeffs = [format_rational(c) for c in (s.egf_values() if args.values else s.coeffs)]
    if args.json:
        print(json.dumps({"kind": args.kind, "order": args.order, "values": args.values, "coeffs": coeffs}))
    else:
        print(json.dumps(coeffs))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_verify(args.grid)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
        print(f"verify: {report.duration:.2f}s", file=sys.stderr)
    else:
        for rec in report.records:
            if not rec.passed:
                print(f"FAIL {rec.check} {json.dumps(rec.params)} {json.dumps(rec.mismatch)}")
        s = report.summary()
        print(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed ({report.duration:.2f}s)")
    return report.exit_code


def _join_negative_fractions(argv: list[str]) -> list[str]:
    # argparse only recognises "-3" style negatives; "-1/3" would read as a flag
    out: list[str] = []
    for token in argv:
        if _NEGATIVE_FRACTION.match(token) and out and out[-1].startswith("--") and "=" not in out[-1]:
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def run(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_fractions(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "sum":
        return _evaluate(args, powersum.METHODS, SumQuery(args.p, args.a, args.d, args.n))
    if args.command == "hypersum":
        return _evaluate(args, hypersum.METHODS, SumQuery(args.p, args.a, args.d, args.n, args.r))
    return {"stirling": _cmd_stirling, "bernoulli": _cmd_bernoulli,
            "series": _cmd_series, "verify": _cmd_verify}[args.command](args)


def main() -> None:
    sys.exit(run())
