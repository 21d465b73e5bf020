"""Command-line front end (installed as ``qb``).

Subcommands: ``verify`` (identity suites), ``euler`` (E-number tables),
``bernstein`` (point evaluation and monomial coefficients), ``operator``
(floating operator demo over an x grid), ``padic`` (truncated-sum oracle
runner).  Rational inputs use the exact ``a/b`` literal format, real inputs
use decimal literals, grids are ``start:end:step``.

Exit codes: 0 all checks pass, 1 identity violation, 2 usage error,
3 domain error (pole q, bad prime, and so on).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bernstein import basis_eval_exact, basis_eval_real, monomial_samples, operator_eval_real
from .euler import euler_number, fermionic_sum
from .kernel import DomainError, format_rational, padic_valuation, parse_rational
from .tables import emit_table
from .verify import DEFAULT_QS, SUITES, IdentityReport, VerifyConfig, run_verify_suite

__all__ = ["main"]


class _UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _grid(text: str) -> list[float]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must look like start:end:step")
    try:
        start, end, step = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed grid: {text!r}") from exc
    if step <= 0 or end < start:
        raise argparse.ArgumentTypeError("grid needs step > 0 and end >= start")
    xs = []
    i = 0
    while True:
        x = start + i * step
        if x > end + 1e-12:
            break
        xs.append(round(x, 12))
        i += 1
    return xs


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qb",
        description="Exact q-Bernstein / q-Euler / q-Stirling tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the identity verification suites")
    p_verify.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p_verify.add_argument(
        "--q",
        action="append",
        type=_rational,
        metavar="A/B",
        help="rational sample value; repeatable (default: 1/2 2/3 3/5 5/4 3)",
    )
    p_verify.add_argument("--nmax", type=int, default=12)
    p_verify.add_argument("--smax", type=int, default=3)
    p_verify.add_argument("--kmax", type=int, default=2)
    p_verify.add_argument("--include-printed-counterexamples", action="store_true")
    p_verify.add_argument("--out", metavar="PATH", help="write the JSON report here")
    p_verify.set_defaults(handler=_cmd_verify)

    p_euler = sub.add_parser("euler", help="emit a table of E-numbers at one q")
    p_euler.add_argument("--q", type=_rational, required=True, metavar="A/B")
    p_euler.add_argument("--nmax", type=int, default=10)
    p_euler.add_argument("--format", choices=("csv", "json"), default="csv")
    p_euler.set_defaults(handler=_cmd_euler)

    p_bern = sub.add_parser("bernstein", help="basis evaluation and coefficients")
    bern_sub = p_bern.add_subparsers(dest="bernstein_command", required=True)
    p_eval = bern_sub.add_parser("eval", help="evaluate one basis member")
    p_eval.add_argument("--k", type=int, required=True)
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--x", type=float, help="float path: x in [0,1], with --q")
    p_eval.add_argument("--q", type=float, help="float path: q > 0")
    p_eval.add_argument("--u", type=_rational, metavar="A/B", help="exact path: u = [x]_q")
    p_eval.set_defaults(handler=_cmd_bernstein_eval)
    p_upoly = bern_sub.add_parser("upoly", help="monomial coefficients of one basis member")
    p_upoly.add_argument("--k", type=int, required=True)
    p_upoly.add_argument("--n", type=int, required=True)
    p_upoly.add_argument("--format", choices=("csv", "json"), default="csv")
    p_upoly.set_defaults(handler=_cmd_bernstein_upoly)

    p_op = sub.add_parser("operator", help="evaluate the operator over an x grid")
    p_op.add_argument("--f", metavar="t^M", help="monomial integrand, e.g. t^2")
    p_op.add_argument("--samples", metavar="PATH", help="CSV of k,f(k/n) rows")
    p_op.add_argument("--n", type=int, help="operator degree (required with --f)")
    p_op.add_argument("--q", type=float, required=True)
    p_op.add_argument("--grid", type=_grid, default="0:1:0.05")
    p_op.add_argument("--format", choices=("csv", "json"), default="csv")
    p_op.set_defaults(handler=_cmd_operator)

    p_padic = sub.add_parser("padic", help="truncated-sum oracle: S_N and valuations")
    p_padic.add_argument("--p", type=int, default=3)
    p_padic.add_argument("--q", type=_rational, default=Fraction(4), metavar="A/B")
    p_padic.add_argument("--n", type=int, required=True)
    p_padic.add_argument("--levels", type=int, default=5)
    p_padic.set_defaults(handler=_cmd_padic)

    return parser


def _cmd_verify(args) -> int:
    try:
        cfg = VerifyConfig(
            suite=args.suite,
            qs=tuple(args.q) if args.q else DEFAULT_QS,
            nmax=args.nmax,
            smax=args.smax,
            kmax=args.kmax,
            include_printed_counterexamples=args.include_printed_counterexamples,
        )
    except DomainError as exc:
        # bad bounds / empty q list are command-line usage problems
        raise _UsageError(str(exc)) from exc
    report = run_verify_suite(cfg)
    _print_report(report)
    if args.out:
        Path(args.out).write_text(json.dumps(report.to_dict(), indent=2) + "\n")
    return 0 if report.ok else 1


def _print_report(report: IdentityReport) -> None:
    groups: dict[str, list[int]] = {}
    for entry in report.entries:
        passed, total = groups.setdefault(entry.identity_id, [0, 0])
        groups[entry.identity_id][0] = passed + (entry.verdict == "pass")
        groups[entry.identity_id][1] = total + 1
    for identity_id in sorted(groups):
        passed, total = groups[identity_id]
        marker = "" if passed == total else "   <-- FAIL"
        print(f"{identity_id:<44} {passed}/{total}{marker}")
    if report.counterexamples:
        print()
        print("counterexamples (expected to fail):")
        for entry in report.counterexamples:
            status = (
                "failed as expected"
                if entry.verdict == "fail"
                else "UNEXPECTEDLY PASSING"
            )
            print(f"{entry.identity_id:<44} {status}")
    s = report.summary
    print()
    print(f"checks: {s['checks']}, failed: {s['failed']}")
    if report.counterexamples:
        print(
            "counterexamples confirmed: "
            f"{s['counterexamples_failed_as_expected']}/{s['counterexamples']}"
        )
    print(f"result: {'PASS' if report.ok else 'FAIL'}")


def _cmd_euler(args) -> int:
    data = emit_table("euler", {"q": args.q, "nmax": args.nmax}, args.format)
    sys.stdout.buffer.write(data)
    return 0


def _cmd_bernstein_eval(args) -> int:
    exact = args.u is not None
    floating = args.x is not None or args.q is not None
    if exact and floating:
        raise _UsageError("give either --u (exact) or --x with --q (float), not both")
    if exact:
        print(format_rational(basis_eval_exact((args.k, args.n), args.u)))
        return 0
    if args.x is None or args.q is None:
        raise _UsageError("the float path needs both --x and --q")
    print(repr(basis_eval_real((args.k, args.n), args.x, args.q)))
    return 0


def _cmd_bernstein_upoly(args) -> int:
    data = emit_table("bernstein", {"k": args.k, "n": args.n}, args.format)
    sys.stdout.buffer.write(data)
    return 0


def _parse_monomial_spec(text: str) -> int:
    s = text.strip()
    if s == "t":
        return 1
    if s.startswith("t^"):
        exponent = s[2:]
        if exponent.isdigit():
            return int(exponent)
    raise _UsageError(f"integrand must look like t^M, got {text!r}")


def _read_samples(path: str) -> list[Fraction]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read samples file: {exc}") from exc
    rows: dict[int, Fraction] = {}
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or (lineno == 1 and not row[0].strip().lstrip("+-").isdigit()):
            continue  # blank line or header row
        if len(row) < 2:
            raise _UsageError(f"samples row {lineno} needs two columns: k,f(k/n)")
        try:
            k = int(row[0])
            value = parse_rational(row[1])
        except (ValueError, DomainError) as exc:
            raise _UsageError(f"malformed samples row {lineno}: {exc}") from exc
        if k in rows:
            raise _UsageError(f"duplicate sample index k={k}")
        rows[k] = value
    if not rows:
        raise _UsageError("samples file holds no data rows")
    n = max(rows)
    if sorted(rows) != list(range(n + 1)):
        raise _UsageError("sample indices must cover k = 0..n without gaps")
    return [rows[k] for k in range(n + 1)]


def _cmd_operator(args) -> int:
    if (args.f is None) == (args.samples is None):
        raise _UsageError("give exactly one of --f or --samples")
    if args.f is not None:
        if args.n is None:
            raise _UsageError("--f needs --n (the operator degree)")
        if args.n < 0:
            raise _UsageError("--n must be nonnegative")
        samples = monomial_samples(_parse_monomial_spec(args.f), args.n)
    else:
        samples = _read_samples(args.samples)
        if args.n is not None and args.n != len(samples) - 1:
            raise _UsageError(
                f"--n {args.n} contradicts the samples file (n = {len(samples) - 1})"
            )
    grid = args.grid if isinstance(args.grid, list) else _grid(args.grid)
    values = [float(s) for s in samples]
    rows = [(x, operator_eval_real(values, x, args.q)) for x in grid]
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["x", "value"])
        writer.writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(json.dumps([{"x": x, "value": v} for x, v in rows], indent=2))
    return 0


def _cmd_padic(args) -> int:
    if args.levels < 1:
        raise _UsageError("--levels must be >= 1")
    limit = euler_number(args.n, args.q)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["level", "sum", "valuation"])
    for level in range(1, args.levels + 1):
        s = fermionic_sum(args.n, args.q, args.p, level)
        v = padic_valuation(s - limit, args.p)
        writer.writerow([level, format_rational(s), "inf" if v == float("inf") else v])
    sys.stdout.write(buf.getvalue())
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
