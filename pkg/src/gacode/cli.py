"""Command-line entry point: ``gacode {run,render,verify,shor15,eval}``."""

from __future__ import annotations

import argparse
import re
import sys
from pathlib import Path

from . import mvtx
from .algorithms import SHOR15_BASES, shor15
from .core import Algebra, Multivector
from .dsl import ParseError, parse_circuit
from .errors import AlgebraError
from .gates import apply_circuit
from .render import render_svg
from .verify import run_all

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

_FACTOR = re.compile(r"([+-]?)(\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?(?:c([01]+))?$")


def _num(c: float) -> str:
    if c.is_integer() and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


def format_terms(mv: Multivector) -> str:
    if not mv:
        return "0"
    return "\n".join(f"{_num(c)} c{mv.algebra.bitstring(m)}" for m, c in mv.items())


class ExprError(ValueError):
    def __init__(self, column: int, message: str):
        super().__init__(f"1:{column}: {message}")


def evaluate(expr: str) -> Multivector:
    """Evaluate ``c10011 * c01011``-style expressions.

    Factors are optionally signed numbers and/or combs (``-2c101``); ``*`` is
    the geometric product, ``+``/``-`` between factors add. All combs must
    have the same number of bits.
    """
    tokens = [(m.start() + 1, m.group()) for m in re.finditer(r"\S+", expr)]
    if not tokens:
        raise ExprError(1, "empty expression")
    widths = {len(m.group(3)) for _, t in tokens if (m := _FACTOR.match(t)) and m.group(3)}
    if len(widths) > 1:
        raise ExprError(1, f"combs of different widths {sorted(widths)}")
    if not widths:
        raise ExprError(1, "expression contains no comb")
    algebra = Algebra(widths.pop())

    def factor(col: int, tok: str) -> Multivector:
        m = _FACTOR.match(tok)
        if not m or not (m.group(2) or m.group(3)):
            raise ExprError(col, f"bad factor {tok!r}")
        coef = float(m.group(2)) if m.group(2) else 1.0
        if m.group(1) == "-":
            coef = -coef
        mask = algebra.parse_bits(m.group(3)) if m.group(3) else 0
        return Multivector.comb(algebra, mask, coef)

    total = Multivector.zero(algebra)
    term: Multivector | None = None
    sign, expect_factor = 1.0, True
    for col, tok in tokens:
        if expect_factor:
            f = factor(col, tok)
            term = f * sign if term is None else term * f
            expect_factor = False
        elif tok == "*":
            expect_factor = True
        elif tok in ("+", "-"):
            total = total + term
            term, sign, expect_factor = None, (1.0 if tok == "+" else -1.0), True
        else:
            raise ExprError(col, f"expected an operator, got {tok!r}")
    if expect_factor:
        raise ExprError(len(expr) or 1, "expression ends with an operator")
    return total + term


def _cmd_run(args) -> int:
    path = Path(args.circuit)
    circuit = parse_circuit(path.read_text(encoding="utf-8"))
    if args.state:
        state = mvtx.load(args.state)
    else:
        state = Multivector.scalar(Algebra(circuit.width, complex=circuit.complex))
    out, counter = apply_circuit(state, circuit)
    if args.out:
        mvtx.dump(out, args.out)
    else:
        sys.stdout.write(mvtx.dumps(out))
    if args.count_ops:
        print(f"ops={counter.count}")
    return EXIT_OK


def _cmd_render(args) -> int:
    svg = render_svg(mvtx.load(args.state))
    Path(args.out).write_text(svg, encoding="utf-8")
    return EXIT_OK


def _cmd_verify(args) -> int:
    results = run_all(n=args.n, trials=args.trials, seed=args.seed)
    failed = False
    for suite, problems in results.items():
        if problems:
            failed = True
            print(f"{suite}: FAIL ({len(problems)} mismatches)")
            for p in problems[:5]:
                print(f"  {p}")
        else:
            print(f"{suite}: ok")
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_shor15(args) -> int:
    result = shor15(args.base)
    pre, post = result.trace
    print(f"pre-selection ({len(pre)} terms):")
    print(format_terms(pre))
    print(f"post-selection ({len(post)} terms):")
    print(format_terms(post))
    factors = ",".join(map(str, result.factors)) if result.factors else "none"
    print(f"period={result.period} factors={factors}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    print(format_terms(evaluate(args.expr)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gacode", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="apply a .gac circuit to the vacuum or a given state")
    p.add_argument("circuit")
    p.add_argument("--state", help="initial state (MVTX file)")
    p.add_argument("--out", help="write the final state here instead of stdout")
    p.add_argument("--count-ops", action="store_true", help="print the primitive operation count")
    p.set_defaults(func=_cmd_run)

    p = sub.add_parser("render", help="draw an MVTX multivector as SVG")
    p.add_argument("state")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("verify", help="run the oracle differential suites")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("shor15", help="period finding for 15 by blade selection")
    p.add_argument("--base", type=int, default=2, choices=SHOR15_BASES)
    p.set_defaults(func=_cmd_shor15)

    p = sub.add_parser("eval", help="evaluate a product of combs, e.g. 'c10011 * c01011'")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        where = getattr(args, "circuit", "<input>")
        print(f"{where}:{exc.line}:{exc.column}: {exc.message}", file=sys.stderr)
    except (AlgebraError, ExprError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
