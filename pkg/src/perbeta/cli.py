"""Command-line interface.

Coefficients are given ASCENDING: ``--minpoly 3,2,3`` is 3 + 2x + 3x^2. Pass
``--descending`` to write them highest power first.

Exit codes: 0 ok, 1 bad input, 2 verification mismatch, 3 witness search failed,
4 internal verification failure, 5 size budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import DegenerateInput, PerBetaError, SizeBudgetExceeded
from .fermat import find_witness
from .field import BaseSpec, FieldElement, check_base, format_element
from .graph import export_dot
from .poly import parse_coeffs
from .representation import PeriodicRep, normalize_digits, rep_of_field_element
from .verify import eval_rep

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_SEARCH, EXIT_INTERNAL, EXIT_BUDGET = range(6)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _base(args) -> BaseSpec:
    try:
        m = parse_coeffs(args.minpoly, descending=args.descending)
        return check_base(m, tolerance=getattr(args, "tolerance", 1e-9),
                          designated_root_index=getattr(args, "root_index", None))
    except (ValueError, DegenerateInput) as exc:
        raise InputError(f"bad --minpoly: {exc}") from exc


def parse_element(text: str, base: BaseSpec) -> FieldElement:
    """"p/q" for a rational, or comma-separated rationals for sum c_i beta^i (ascending)."""
    try:
        coeffs = [Fraction(s.strip()) for s in text.split(",")]
        return FieldElement(base, coeffs)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad field element {text!r}: {exc}") from exc


def _modulus(value: int) -> int:
    if value < 2:
        raise InputError(f"--n must be at least 2, got {value}")
    return value


def cmd_witness(args) -> int:
    base = _base(args)
    n = _modulus(args.n)
    w = find_witness(base, n, args.method)
    if args.format == "json":
        print(w.to_json())
    else:
        print(w.identity())
        print(f"certificate: x^{w.i} - x^{w.j} - {w.n}*p(x) = r(x)*m(x), r(x) = {w.r}")
    return EXIT_OK


def cmd_represent(args) -> int:
    base = _base(args)
    x = parse_element(args.target, base)
    rep = rep_of_field_element(x, factor=args.factor, method=args.method)
    if args.normalize_bound is not None:
        rep = normalize_digits(rep, args.normalize_bound)
    if eval_rep(rep) != x:
        print("internal error: representation does not evaluate to the target", file=sys.stderr)
        return EXIT_INTERNAL
    payload = rep.to_dict()
    payload.update(digit_bound=rep.max_digit(), human=rep.human(), value=format_element(x.coeffs))
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"value:       {payload['value']}")
        print(f"digits:      {payload['human']}")
        print(f"L={rep.L} preperiod={list(rep.preperiod)} period={list(rep.period)}")
        print(f"digit bound: {payload['digit_bound']}")
    return EXIT_OK


def cmd_verify(args) -> int:
    base = _base(args)
    try:
        text = sys.stdin.read() if args.rep == "-" else open(args.rep).read()
        rep = PeriodicRep.from_dict(base, json.loads(text))
    except (OSError, ValueError, TypeError) as exc:
        raise InputError(f"cannot read representation: {exc}") from exc
    expected = parse_element(args.expected, base)
    value = eval_rep(rep)
    print(f"value:    {format_element(value.coeffs)}")
    print(f"expected: {format_element(expected.coeffs)}")
    if value != expected:
        print("MISMATCH")
        return EXIT_MISMATCH
    print("OK")
    return EXIT_OK


def cmd_graph(args) -> int:
    base = _base(args)
    n = _modulus(args.n)
    dot = export_dot(base, n, args.scope, max_vertices=args.max_vertices)
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_OK


def cmd_check_base(args) -> int:
    base = _base(args)
    print(f"minpoly:  {base.minpoly}")
    for k, (root, mod) in enumerate(zip(base.roots, base.root_moduli)):
        mark = "  <- beta" if k == base.designated_root_index else ""
        print(f"root {k}: {root.real:+.12g}{root.imag:+.12g}i  |root| = {mod:.12g}{mark}")
    print(f"unit-circle conjugate: {base.has_unit_circle_conjugate}")
    print(f"|beta| > 1: {'yes' if base.dominant_modulus else 'no'}")
    print(f"class: {base.eligibility}")
    if base.eligibility == "UNIT-FRACTIONS-ONLY":
        print("warning: 1/n has periodic representations, but a single finite alphabet "
              "for all of Q(beta) is not guaranteed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="perbeta", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--minpoly", required=True, help="integer coefficients, ascending, e.g. -1,-1,1")
        p.add_argument("--descending", action="store_true", help="coefficients are highest power first")

    p = sub.add_parser("witness", help="find i > j with beta^i - beta^j in n Z[beta]")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["auto", "walk", "graph"], default="auto")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("represent", help="eventually periodic representation of an element")
    common(p)
    p.add_argument("--target", required=True, help='"p/q" or ascending coefficients "1/2,1/2"')
    p.add_argument("--factor", type=float, default=2.0, help="densification factor (> 1)")
    p.add_argument("--normalize-bound", type=int, default=None)
    p.add_argument("--method", choices=["auto", "walk", "graph"], default="auto")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="evaluate a representation JSON exactly")
    common(p)
    p.add_argument("--rep", required=True, help="path to representation JSON, or - for stdin")
    p.add_argument("--expected", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="write G(m, n) as DOT")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--scope", choices=["reachable", "full"], default="reachable")
    p.add_argument("--out", default="-")
    p.add_argument("--max-vertices", type=int, default=20_000)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("check-base", help="root moduli and eligibility of the base")
    common(p)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--root-index", type=int, default=None)
    p.set_defaults(func=cmd_check_base)
    return parser


_VALUE_OPTIONS = ("--minpoly", "--target", "--expected")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Let "--minpoly -1,-1,1" through; argparse would read -1,-1,1 as an option."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SizeBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except PerBetaError as exc:
        print(f"search failed: {exc}", file=sys.stderr)
        return EXIT_SEARCH


if __name__ == "__main__":
    sys.exit(main())
