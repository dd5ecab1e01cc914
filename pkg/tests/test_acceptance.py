"""Exit criteria for the build, one check per criterion.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import itertools
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gacode import cli  # noqa: E402
from gacode.algorithms import SHOR15_BASES, SHOR15_LAYOUT, bell, ghz, multiplicative_order, shor15  # noqa: E402
from gacode.core import Algebra, Multivector, factor_prefix, geometric_product, scalar_product  # noqa: E402
from gacode.dsl import Circuit, ParseError, parse_circuit, print_circuit  # noqa: E402
from gacode.gates import GateKind, GateOp, apply_circuit, reset_bit  # noqa: E402
from gacode.oracle import sort_generators  # noqa: E402
from gacode.render import emit_svg, layout, render_svg  # noqa: E402
from gacode.verify import check_correspondence, check_sandwich, random_circuit  # noqa: E402
from scenes import GOLDEN_DIR, SCENES  # noqa: E402

RESULTS: list[str] = []


def _cli(argv: list[str]) -> tuple[int, str]:
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def ac1_sign_rule() -> str:
    code, out = _cli(["eval", "c10011 * c01011"])
    assert code == 0 and out == "-1 c11000\n", out
    for n in range(1, 7):
        alg = Algebra(n, complex=True)
        for a in range(1 << (n + 1)):
            ca = Multivector.comb(alg, a)
            gens_a = [k for k in range(n + 1) if a >> k & 1]
            for b in range(1 << (n + 1)):
                sign, mask = sort_generators(gens_a + [k for k in range(n + 1) if b >> k & 1])
                got = geometric_product(ca, Multivector.comb(alg, b))
                assert got.terms == {mask: float(sign)}, (n, a, b)
    return "eval prints -1 c11000; all comb pairs n<=6 (with complex bit) match"


def ac2_gate_identities() -> str:
    for n in range(1, 6):
        problems = check_sandwich(n)
        assert not problems, problems[:3]
    return "negate/sign == sandwich forms for every comb, n<=5, no residual sign"


def ac3_correspondence() -> str:
    problems = check_correspondence(200, 4, 20, random.Random(2024), tol=1e-10)
    assert not problems, problems[:3]
    return "200 random circuits agree with the state vector at 1e-10"


def ac4_hadamard() -> str:
    for n in range(1, 11):
        alg = Algebra(n)
        circuit = Circuit(n, ops=tuple(GateOp(GateKind.H, (k,)) for k in range(1, n + 1)))
        out, counter = apply_circuit(Multivector.scalar(alg), circuit)
        expected = Multivector(alg, {m: 2.0 ** (-n / 2) for m in range(0, 1 << (n + 1), 2)})
        assert out == expected, n
        assert counter.count == 2 * n, (n, counter.count)
    return "exact 2^(-n/2) sum and 2n ops for n=1..10"


def ac5_shor15() -> str:
    result = shor15(2)
    assert result.period == 4 and result.factors == (3, 5)
    pre = result.trace[0]
    alg = pre.algebra
    displayed = {
        "0001": ("0000", "0100", "1000", "1100"),
        "0010": ("0001", "0101", "1001", "1101"),
        "0100": ("0010", "0110", "1010", "1110"),
        "1000": ("0011", "0111", "1011", "1111"),
    }
    assert pre.terms == {alg.parse_bits(x + v): 1.0 for v, xs in displayed.items() for x in xs}
    for base in SHOR15_BASES:
        assert shor15(base).period == multiplicative_order(base, 15), base
    assert sorted(SHOR15_LAYOUT.decode("x", m) for m in result.trace[1].masks()) == [0, 4, 8, 12]
    return "base 2: period 4, factors 3,5, 16-term state; all 7 bases match the order"


def ac6_named_states() -> str:
    s = 2**-0.5
    r2, r3 = Algebra(2), Algebra(3)
    b1, b2 = 1 << 1, 1 << 2
    assert bell("psi+").terms == {b1: s, b2: s}
    assert bell("psi-").terms == {b1: -s, b2: s}
    assert bell("phi+").terms == {0: s, b1 | b2: s}
    assert bell("phi-").terms == {0: s, b1 | b2: -s}
    assert ghz() == Multivector(r3, {0: s, 0b1110: s})
    names = ["psi+", "psi-", "phi+", "phi-"]
    for a, b in itertools.product(names, repeat=2):
        # each matching comb contributes exactly +-1/2 on the +-1 numerators
        na = Multivector(r2, {m: round(c / s) for m, c in bell(a).items()})
        nb = Multivector(r2, {m: round(c / s) for m, c in bell(b).items()})
        assert 0.5 * scalar_product(na, nb) == (1.0 if a == b else 0.0)
        got = scalar_product(bell(a), bell(b))
        assert got == (s * s + s * s if a == b else 0.0)
    return "Bell/GHZ coefficients exact; Gram matrix exact identity"


def ac7_reset() -> str:
    r3 = Algebra(3)
    rows = [("000", "000"), ("100", "100"), ("010", "010"), ("001", "000"),
            ("110", "110"), ("101", "100"), ("011", "010"), ("111", "110")]
    for src, dst in rows:
        assert reset_bit(Multivector.from_bits(r3, src), 3) == Multivector.from_bits(r3, dst), src
    return "all 8 rows"


def ac8_separability() -> str:
    rng = random.Random(8)
    for _ in range(500):
        n = rng.randint(1, 12)
        alg = Algebra(n)
        k = rng.randint(1, n)
        low = (1 << (k + 1)) - 1
        shared = rng.getrandbits(n + 1) & low & alg.data_mask
        ab = shared | (rng.getrandbits(n + 1) & ~low & alg.data_mask)
        ac = shared | (rng.getrandbits(n + 1) & ~low & alg.data_mask)
        alpha, beta = rng.uniform(-5, 5), rng.uniform(-5, 5)
        prefix, suffix = factor_prefix(alpha, ab, beta, ac, k, alg)
        assert prefix * suffix == Multivector(alg, [(ab, alpha), (ac, beta)])
    return "500 random instances recompose exactly"


def ac9_parser() -> str:
    rng = random.Random(9)
    kinds = list(GateKind)
    for _ in range(200):
        n = rng.randint(1, 6)
        complex_ = rng.random() < 0.7
        usable = [k for k in kinds if k.arity <= n and (complex_ or not k.needs_complex)]
        c = random_circuit(rng, n, rng.randint(0, 15), usable)
        c = Circuit(n, complex_, c.ops)
        text = print_circuit(c)
        assert parse_circuit(text) == c
        assert print_circuit(parse_circuit(text)) == text
    for src, where in (("", (1, 1)), ("circuit n=2\ncnot 1 3", (2, 8))):
        with pytest.raises(ParseError) as info:
            parse_circuit(src)
        assert (info.value.line, info.value.column) == where
    return "200 round trips; fixtures at 1:1 and 2:8"


def ac10_renderer() -> str:
    for name, build in SCENES.items():
        m = build()
        first, second = render_svg(m), render_svg(m)
        assert first == second, name
        assert first == (GOLDEN_DIR / f"{name}.svg").read_text(encoding="utf-8"), name
        scene = layout(m)
        nonscalar = [mask for mask, _ in m.items() if mask]
        assert len(scene.polylines) == len(nonscalar)
        assert [len(p.points) for p in scene.polylines] == [bin(x).count("1") + 1 for x in nonscalar]
        assert emit_svg(scene).count("<line ") == sum(bin(x).count("1") for x in nonscalar)
    return f"{len(SCENES)} scenes byte-identical and equal to goldens"


CRITERIA = [
    ("AC1 sign rule", ac1_sign_rule, 10.0),
    ("AC2 gate identities", ac2_gate_identities, 30.0),
    ("AC3 correspondence", ac3_correspondence, 60.0),
    ("AC4 Hadamard state and cost", ac4_hadamard, None),
    ("AC5 Shor-15", ac5_shor15, 1.0),
    ("AC6 named states", ac6_named_states, None),
    ("AC7 reset table", ac7_reset, None),
    ("AC8 partial separability", ac8_separability, None),
    ("AC9 parser", ac9_parser, None),
    ("AC10 renderer determinism", ac10_renderer, None),
]


def _run(name, check, budget) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        detail = check()
        ok = True
    except AssertionError as exc:
        detail, ok = f"assertion failed: {exc}", False
    elapsed = time.perf_counter() - start
    if ok and budget is not None and elapsed >= budget:
        ok, detail = False, f"took {elapsed:.2f}s, budget {budget:.0f}s"
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail} ({elapsed:.2f}s)"
    return ok, line


@pytest.mark.parametrize("name, check, budget", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, budget):
    ok, line = _run(name, check, budget)
    RESULTS.append(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for crit in CRITERIA:
        ok, line = _run(*crit)
        failures += not ok
        print(line)
    sys.exit(1 if failures else 0)
