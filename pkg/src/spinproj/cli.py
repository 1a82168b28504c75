"""Command-line front end: ``spinproj {projector,funcal,reduce,interpolate,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
Output is fully rendered before anything is written, so a failing
command never leaves partial output on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .exact import HalfInt, format_rational, parse_rational
from .opcalc import VerificationReport, eval_on_diagonal, run_suite
from .poly import NodeSet, Polynomial, interpolate
from .render import (
    LATEX_SZ,
    TEXT_SZ,
    factor_from_roots,
    latex_rational,
    render_diag,
    render_factored,
    render_poly,
)
from .spin import (
    MagneticQuantum,
    SpinQuantum,
    operator_function,
    projector_coefficient,
    projector_polynomial,
    projector_roots,
    reduce_power,
    sz_operator,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# options whose value may legitimately start with "-"
_SIGNED_OPTS = ("--m", "--values", "--nodes")


class UsageError(Exception):
    pass


def _halfint(text: str) -> HalfInt:
    try:
        return HalfInt.of(parse_rational(text))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"invalid half-integer {text!r}: {exc}") from None


def _spin(text: str) -> HalfInt:
    s = _halfint(text)
    if s.twice < 0:
        raise argparse.ArgumentTypeError(f"spin must be nonnegative, got {text!r}")
    return s


def _rational_list(text: str) -> list[Fraction]:
    items = [t for t in text.split(",")]
    try:
        return [parse_rational(t) for t in items]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinproj",
        description="Exact spin projection operators and functions of S_z.",
        epilog="Value lists are comma-separated rationals ('1/2,-1,0') in m-descending "
               "order: the first entry belongs to m = S.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--max-twos", type=_nonneg_int, default=100, metavar="N",
                        help="refuse spins with 2S > N (default 100)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("projector", parents=[common], help="projector onto |m>")
    p.add_argument("--spin", type=_spin, required=True, help="S, e.g. 1/2, 3/2 or 2")
    p.add_argument("--m", type=_halfint, required=True, help="magnetic quantum number")

    p = sub.add_parser("funcal", parents=[common], help="f(Sz) from values f(m)")
    p.add_argument("--spin", type=_spin, required=True)
    p.add_argument("--values", type=_rational_list, required=True,
                   help="f(S), f(S-1), ..., f(-S)")

    p = sub.add_parser("reduce", parents=[common], help="reduce Sz^n to degree <= 2S")
    p.add_argument("--spin", type=_spin, required=True)
    p.add_argument("--power", type=_nonneg_int, required=True)

    p = sub.add_parser("interpolate", parents=[common], help="Lagrange interpolant through points")
    p.add_argument("--nodes", type=_rational_list, required=True)
    p.add_argument("--values", type=_rational_list, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the exact identity suite")
    p.add_argument("--spin", type=_spin, required=True)
    return parser


def _fix_signed(argv: list[str]) -> list[str]:
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in _SIGNED_OPTS and nxt is not None and nxt[:1] in ("-", "−") and nxt[1:2].isdigit():
            out.append(f"{tok}={nxt}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _spin_json(S) -> dict:
    return HalfInt.of(S).to_json()


def cmd_projector(args) -> tuple[str, int]:
    q = MagneticQuantum(args.spin, args.m)
    p = projector_polynomial(q)
    fp = factor_from_roots(projector_coefficient(q), projector_roots(q))
    op = eval_on_diagonal(p, sz_operator(args.spin))
    if args.format == "json":
        return _dump({
            "S": _spin_json(args.spin),
            "m": _spin_json(args.m),
            "polynomial": p.to_json(),
            "factored": fp.to_json(),
            "operator": op.to_json(),
        }), EXIT_OK
    if args.format == "latex":
        lhs = rf"\hat P_{{{latex_rational(q.m.to_fraction())}}}({LATEX_SZ})"
        return "\n".join([
            f"{lhs} = {render_factored(fp, LATEX_SZ, latex=True)}",
            f"{lhs} = {render_poly(p, LATEX_SZ, latex=True)}",
            f"{lhs} = {render_diag(op.diagonal, latex=True)}",
        ]) + "\n", EXIT_OK
    return "\n".join([
        f"P = {render_poly(p, TEXT_SZ)} ; {render_diag(op.diagonal)}",
        f"P = {render_factored(fp, TEXT_SZ)}",
    ]) + "\n", EXIT_OK


def cmd_funcal(args) -> tuple[str, int]:
    p = operator_function(SpinQuantum(args.spin), args.values)
    op = eval_on_diagonal(p, sz_operator(args.spin))
    if args.format == "json":
        return _dump({
            "S": _spin_json(args.spin),
            "values": [format_rational(v) for v in args.values],
            "polynomial": p.to_json(),
            "operator": op.to_json(),
        }), EXIT_OK
    if args.format == "latex":
        lhs = rf"\hat f({LATEX_SZ})"
        return (f"{lhs} = {render_poly(p, LATEX_SZ, latex=True)}\n"
                f"{lhs} = {render_diag(op.diagonal, latex=True)}\n"), EXIT_OK
    return f"f(Sz) = {render_poly(p, TEXT_SZ)} ; {render_diag(op.diagonal)}\n", EXIT_OK


def cmd_reduce(args) -> tuple[str, int]:
    p = reduce_power(SpinQuantum(args.spin), args.power)
    power = Polynomial.monomial(args.power)
    if args.format == "json":
        return _dump({
            "S": _spin_json(args.spin),
            "power": args.power,
            "polynomial": p.to_json(),
        }), EXIT_OK
    if args.format == "latex":
        return f"{render_poly(power, LATEX_SZ, latex=True)} = {render_poly(p, LATEX_SZ, latex=True)}\n", EXIT_OK
    return f"{render_poly(power, TEXT_SZ)} = {render_poly(p, TEXT_SZ)}\n", EXIT_OK


def cmd_interpolate(args) -> tuple[str, int]:
    ns = NodeSet(args.nodes)
    p = interpolate(ns, args.values)
    if args.format == "json":
        return _dump({
            "nodes": [format_rational(x) for x in ns],
            "values": [format_rational(v) for v in args.values],
            "polynomial": p.to_json(),
        }), EXIT_OK
    if args.format == "latex":
        return f"P(x) = {render_poly(p, 'x', latex=True)}\n", EXIT_OK
    return f"P(x) = {render_poly(p, 'x')}\n", EXIT_OK


def render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return _dump(report.to_json())
    if fmt == "latex":
        S = report.spin.S
        lines = [rf"% S = {latex_rational(S.to_fraction())}, 2S = {S.twice}",
                 r"\begin{tabular}{ll}"]
        for c in report.checks:
            mark = r"\checkmark" if c.passed else r"\texttimes"
            lines.append(rf"\texttt{{{c.name}}} & {mark} \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"
    lines = [f"S = {report.spin.S} (2S = {report.spin.twice})"]
    for c in report.checks:
        line = f"{'PASS' if c.passed else 'FAIL'} {c.name}"
        if c.witness:
            line += f" : {c.witness}"
        lines.append(line)
    lines.append("all checks passed" if report.passed else "verification FAILED")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    report = run_suite(SpinQuantum(args.spin))
    return render_report(report, args.format), EXIT_OK if report.passed else EXIT_FAIL


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


COMMANDS = {
    "projector": cmd_projector,
    "funcal": cmd_funcal,
    "reduce": cmd_reduce,
    "interpolate": cmd_interpolate,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_fix_signed(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    spin = getattr(args, "spin", None)
    try:
        if spin is not None and spin.twice > args.max_twos:
            raise UsageError(f"2S = {spin.twice} exceeds --max-twos {args.max_twos}")
        out, code = COMMANDS[args.command](args)
    except (UsageError, ValueError, IndexError, ZeroDivisionError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
