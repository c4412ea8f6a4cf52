"""
Command-line front end.

Usage:
    umbral verify --filter 'doetsch*' --format json   # run catalog entries
    umbral eval hermite2 3 1 1                         # evaluate a special function
    umbral series tricomi_c0 --order 5                 # print series coefficients
    umbral transform tricomi_c0 --op borel --alpha 1   # apply a Borel-family transform
    umbral table bessel_j0 --from 0 --to 10 --points 11

Exit codes: 0 success, 1 identity failure, 2 usage error, 3 numeric error.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Callable, Optional, Sequence, TextIO

import numpy as np

from . import catalog
from . import generating as gen
from . import operators as ops
from . import special as sf
from .series import ConvergenceFlag, PoleError, default_order, named_series

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


class UsageError(Exception):
    """Bad arguments discovered after parsing."""


def _fmt(v: float) -> str:
    return f"{v:.15g}"


def _doetsch_gap(x: float, p: dict) -> float:
    y, t = p.get("y", 0.3), p.get("t", 0.4)
    lhs = math.fsum(t ** n / math.factorial(n) * sf.hermite2(2 * n, x, y) for n in range(60))
    return lhs - gen.doetsch(x, y, t)


# table functions take the abscissa and a dict of extra --param values
TABLES: dict[str, Callable[[float, dict], float]] = {
    "bessel_j0": lambda x, p: sf.bessel_j(0, x),
    "tricomi_c0": lambda x, p: sf.tricomi_c(0, x),
    "hermite2": lambda x, p: sf.hermite2(int(p.get("n", 4)), x, p.get("y", 1.0)),
    "heat_poly": lambda x, p: sf.heat_poly(int(p.get("n", 2)), p.get("nu", 0.5), x, p.get("y", 1.0)),
    "mittag_leffler": lambda x, p: sf.mittag_leffler(p.get("alpha", 1.0), p.get("beta", 1.0), x),
    "bessel_wright": lambda x, p: sf.bessel_wright(p.get("alpha", 1.0), p.get("beta", 0.0), x),
    "quartic_gaussian": lambda x, p: sf.quartic_gaussian_integral(x, p.get("y", 1.0)),
    "doetsch": lambda x, p: gen.doetsch(x, p.get("y", 0.3), p.get("t", 0.4)),
    "doetsch_lhs_minus_rhs": _doetsch_gap,
}


def _parse_params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise UsageError(f"--param {key} needs a number, got {value!r}") from None
    return out


def _open_output(path: Optional[str]) -> TextIO:
    return sys.stdout if path in (None, "-") else open(path, "w", encoding="utf-8", newline="")


def cmd_verify(args: argparse.Namespace) -> int:
    entries = catalog.select(args.filter)
    if not entries:
        raise UsageError(f"no catalog entry matches {args.filter!r}")
    reports = catalog.run_all(args.filter, args.points, args.seed, args.tol_override, args.workers)
    if args.format == "json":
        text = catalog.reports_to_json(reports, args.timings)
    elif args.format == "csv":
        text = catalog.reports_to_csv(reports, args.timings)
    else:
        text = catalog.reports_to_text(reports)
    out = _open_output(args.output)
    try:
        out.write(text)
    finally:
        if out is not sys.stdout:
            out.close()
    if any(r.numeric_error for r in reports):
        return EXIT_NUMERIC
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    fn = sf.FUNCTIONS.get(args.function)
    if fn is None:
        raise UsageError(f"unknown function {args.function!r}; choose from {', '.join(sorted(sf.FUNCTIONS))}")
    ints = sf.INTEGER_ARGS.get(args.function, ())
    values = []
    for i, raw in enumerate(args.args):
        try:
            if i in ints:
                values.append(int(raw))
            else:
                values.append(float(raw))
        except ValueError:
            kind = "an integer" if i in ints else "a number"
            raise UsageError(f"argument {i + 1} of {args.function} must be {kind}, got {raw!r}") from None
    try:
        result = fn(*values)
    except TypeError as exc:
        raise UsageError(str(exc)) from None
    print(_fmt(result))
    return EXIT_OK


def _series_for(args: argparse.Namespace):
    try:
        return named_series(args.name, args.order)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def cmd_series(args: argparse.Namespace) -> int:
    f = _series_for(args)
    for r, c in enumerate(f.coeffs):
        print(f"{r},{c:.17g}")
    return EXIT_OK


def _build_transform(args: argparse.Namespace) -> ops.CoefficientTransform:
    if args.op == "borel":
        T = ops.borel(args.alpha, args.gamma)
    elif args.op == "borel-leroy":
        T = ops.borel_leroy(args.alpha, args.gamma)
    else:
        T = ops.bborel(args.alpha, args.gamma, args.beta, args.delta, normalized=not args.raw)
    if args.power > 1:
        T = T.power(args.power)
    return T.inverted() if args.inverse else T


def _flag_text(flag: ConvergenceFlag) -> str:
    w = "none" if flag.witness is None else f"{flag.witness:.6g}"
    return f"flag: {flag.status} (witness {w})"


def cmd_transform(args: argparse.Namespace) -> int:
    f = _series_for(args)
    T = _build_transform(args)
    out, flag = ops.apply_transform(f, T)
    print("r,before,after")
    for r, (a, b) in enumerate(zip(f.coeffs, out.coeffs)):
        print(f"{r},{a:.17g},{b:.17g}")
    print(_flag_text(flag))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    fn = TABLES.get(args.function)
    if fn is None:
        raise UsageError(f"unknown table function {args.function!r}; choose from {', '.join(sorted(TABLES))}")
    if args.points < 1:
        raise UsageError("--points must be at least 1")
    params = _parse_params(args.param)
    xs = np.linspace(args.x_from, args.x_to, args.points)
    print("x,value")
    for x in xs:
        print(f"{_fmt(float(x))},{_fmt(fn(float(x), params))}")
    return EXIT_OK


def _nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umbral", description=__doc__.split("\n\n")[0].strip(),
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run identity-catalog checks")
    v.add_argument("--filter", default=None, help="glob on ids or tags; comma separates alternatives")
    v.add_argument("--tol-override", type=float, default=None, help="replace every entry's tolerance")
    v.add_argument("--points", type=_nonneg_int, default=None,
                   help="points per identity (default: each entry's full grid)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("json", "csv", "text"), default="text")
    v.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="record elapsed_s (output no longer reproducible)")
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(handler=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a special function")
    e.add_argument("function")
    e.add_argument("args", nargs="*")
    e.set_defaults(handler=cmd_eval)

    s = sub.add_parser("series", help="print coefficients of a named series")
    s.add_argument("name")
    s.add_argument("--order", type=_nonneg_int, default=default_order())
    s.set_defaults(handler=cmd_series)

    t = sub.add_parser("transform", help="apply a Borel-family coefficient transform")
    t.add_argument("name")
    t.add_argument("--order", type=_nonneg_int, default=default_order())
    t.add_argument("--op", choices=("borel", "borel-leroy", "bborel"), default="borel")
    t.add_argument("--alpha", type=float, default=1.0)
    t.add_argument("--gamma", type=float, default=1.0)
    t.add_argument("--beta", type=float, default=1.0)
    t.add_argument("--delta", type=float, default=0.0)
    t.add_argument("--power", type=int, default=1, help="apply the transform this many times")
    t.add_argument("--raw", action="store_true", help="bborel without the B(gamma, beta) normalisation")
    t.add_argument("--inverse", action="store_true")
    t.set_defaults(handler=cmd_transform)

    tb = sub.add_parser("table", help="emit (x, f(x)) rows as CSV")
    tb.add_argument("function")
    tb.add_argument("--from", dest="x_from", type=float, default=0.0)
    tb.add_argument("--to", dest="x_to", type=float, default=1.0)
    tb.add_argument("--points", type=int, default=11)
    tb.add_argument("--param", action="append", default=[], help="extra parameter as key=value")
    tb.set_defaults(handler=cmd_table)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"umbral: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, ValueError, PoleError, OverflowError) as exc:
        print(f"umbral: numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
