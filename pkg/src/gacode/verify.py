"""Differential checks of the fast kernels against :mod:`gacode.oracle`.

Each ``check_*`` function returns a list of human-readable mismatches; an
empty list means the suite passed.
"""

from __future__ import annotations

import math
import random
from typing import Sequence

import numpy as np

from ._bits import reorder_sign
from .core import Algebra, Multivector
from .dsl import Circuit
from .gates import GateKind, GateOp, apply_circuit, negate_bit, sign_bit
from .oracle import (
    DenseMultivector,
    Sandwich,
    StateVector,
    correspondence,
    inverse_correspondence,
    sandwich_gate,
    sort_generators,
    sv_run,
)

__all__ = [
    "CIRCUIT_KINDS",
    "check_sign_rule",
    "check_sign_rule_random",
    "check_sandwich",
    "random_circuit",
    "random_state",
    "check_correspondence",
    "run_all",
]

CIRCUIT_KINDS = (
    GateKind.H,
    GateKind.X,
    GateKind.Y,
    GateKind.Z,
    GateKind.PHASE,
    GateKind.T,
    GateKind.CNOT,
    GateKind.TOFFOLI,
    GateKind.GLOBAL_PHASE,
)


def _oracle_sign(a: int, b: int) -> tuple[int, int]:
    gens = [k for k in range(max(a, b).bit_length()) if a >> k & 1]
    gens += [k for k in range(max(a, b).bit_length()) if b >> k & 1]
    return sort_generators(gens)


def check_sign_rule(n: int) -> list[str]:
    """All comb pairs over positions ``0..n`` (complex bit plus ``n`` data bits)."""
    bad = []
    size = 1 << (n + 1)
    for a in range(size):
        for b in range(size):
            sign, mask = _oracle_sign(a, b)
            if mask != a ^ b or sign != reorder_sign(a, b):
                bad.append(f"c{a:b} * c{b:b}: oracle {sign:+d} c{mask:b}, kernel {reorder_sign(a, b):+d} c{a ^ b:b}")
    return bad


def check_sign_rule_random(n: int, trials: int, rng: random.Random) -> list[str]:
    bad = []
    for _ in range(trials):
        a, b = rng.getrandbits(n + 1), rng.getrandbits(n + 1)
        sign, mask = _oracle_sign(a, b)
        if mask != a ^ b or sign != reorder_sign(a, b):
            bad.append(f"c{a:b} * c{b:b}")
    return bad


def check_sandwich(n: int) -> list[str]:
    """Bit-level negation/sign maps against the literal conjugation forms."""
    algebra = Algebra(n, complex=True, aux=True)
    bad = []
    for mask in range(1 << (n + 1)):
        z = Multivector.comb(algebra, mask)
        dense = DenseMultivector.from_multivector(z)
        for k in range(1, n + 1):
            for which, fast in ((Sandwich.NEG, negate_bit), (Sandwich.SIGN, sign_bit)):
                ref = sandwich_gate(dense, k, which).to_multivector(algebra)
                got = fast(z, k)
                if ref != got:
                    bad.append(f"{which.value} k={k} on c{algebra.bitstring(mask)}: oracle {ref}, kernel {got}")
    return bad


def random_circuit(rng: random.Random, n: int, depth: int, kinds: Sequence[GateKind] = CIRCUIT_KINDS) -> Circuit:
    usable = [k for k in kinds if k.arity <= n]
    ops = []
    for _ in range(depth):
        kind = rng.choice(usable)
        bits = tuple(rng.sample(range(1, n + 1), kind.arity))
        angle = rng.uniform(-math.pi, math.pi) if kind.has_angle else None
        ops.append(GateOp(kind, bits, angle))
    return Circuit(n, True, tuple(ops))


def random_state(rng: random.Random, n: int) -> StateVector:
    amp = np.array([complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(1 << n)])
    return StateVector(n, amp / np.linalg.norm(amp))


def check_correspondence(trials: int, n_max: int, depth_max: int, rng: random.Random, tol: float = 1e-10) -> list[str]:
    """Run random circuits both ways and compare amplitudes in max-norm."""
    bad = []
    for t in range(trials):
        n = rng.randint(1, n_max)
        depth = rng.randint(0, depth_max)
        circuit = random_circuit(rng, n, depth)
        start = random_state(rng, n)
        ga, _ = apply_circuit(inverse_correspondence(start), circuit)
        ref = sv_run(start, circuit.ops)
        err = correspondence(ga).max_diff(ref)
        if not err <= tol:
            bad.append(f"trial {t}: n={n} depth={depth} max error {err:.3e}")
    return bad


def run_all(n: int = 4, trials: int = 200, seed: int = 0) -> dict[str, list[str]]:
    rng = random.Random(seed)
    return {
        "sign-rule": check_sign_rule(min(n, 6)) + check_sign_rule_random(max(n, 10), trials, rng),
        "sandwich": check_sandwich(min(n, 5)),
        "correspondence": check_correspondence(trials, min(n, 4), 20, rng),
    }
