from __future__ import annotations

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multivectors, real_floats_mv
from gacode.core import Algebra, Multivector, complex_i, phase_rotate, scalar_product
from gacode.dsl import Circuit
from gacode.errors import BitIndexError, WidthMismatchError
from gacode.gates import (
    GateKind,
    GateOp,
    OpCounter,
    apply_circuit,
    cnot,
    control_x,
    hadamard,
    negate_bit,
    pauli_y,
    phase,
    project_bit,
    project_bit_complement,
    reset_bit,
    sign_bit,
    toffoli,
)
from gacode.oracle import StateVector, correspondence, inverse_correspondence, sv_apply

R3 = Algebra(3)
C3 = Algebra(3, complex=True)
R4 = Algebra(4)


def comb(algebra, bits, coef=1.0):
    return Multivector.from_bits(algebra, bits, coef)


def test_negate_bit_flips():
    assert negate_bit(comb(R3, "010"), 1) == comb(R3, "110")


@given(multivectors(C3), st.integers(1, 3))
def test_negate_and_sign_are_involutions(z, k):
    assert negate_bit(negate_bit(z, k), k) == z
    assert sign_bit(sign_bit(z, k), k) == z


def test_sign_bit_example():
    r2 = Algebra(2)
    z = comb(r2, "10") + comb(r2, "01")
    assert sign_bit(z, 1) == comb(r2, "10", -1) + comb(r2, "01")


def test_bit_range_checked():
    for fn in (negate_bit, sign_bit, project_bit, hadamard, reset_bit):
        with pytest.raises(BitIndexError):
            fn(comb(R3, "000"), 4)
        with pytest.raises(BitIndexError):
            fn(comb(R3, "000"), 0)


def test_project_bit_example():
    r2 = Algebra(2)
    assert project_bit(comb(r2, "10") + comb(r2, "01"), 1) == comb(r2, "10")


@given(multivectors(C3), st.integers(1, 3))
def test_projector_properties(z, k):
    p = project_bit(z, k)
    assert project_bit(p, k) == p
    assert p + project_bit_complement(z, k) == z
    assert p == z * 0.5 - sign_bit(z, k) * 0.5


@given(multivectors(C3), st.integers(1, 3), st.integers(1, 3))
def test_bit_maps_commute(z, k, l):
    if k != l:
        assert negate_bit(sign_bit(z, l), k) == sign_bit(negate_bit(z, k), l)
    assert negate_bit(complex_i(z), k) == complex_i(negate_bit(z, k))
    assert sign_bit(complex_i(z), k) == complex_i(sign_bit(z, k))


def test_hadamard_on_one_matches_state_vector():
    c1 = Algebra(1, complex=True)
    got = hadamard(comb(c1, "01"), 1)
    s = 2 ** -0.5
    assert got == Multivector(c1, {0: s, 0b10: -s})
    ref = sv_apply(StateVector.basis(1, 1), GateOp(GateKind.H, (1,)))
    assert correspondence(got).max_diff(ref) < 1e-15


@given(real_floats_mv(C3, 8), st.integers(1, 3))
def test_hadamard_is_involution(z, k):
    assert hadamard(hadamard(z, k), k).allclose(z, 1e-12)


@given(real_floats_mv(R3, 8), real_floats_mv(R3, 8), st.integers(1, 3))
def test_hadamard_preserves_scalar_product(a, b, k):
    assert scalar_product(hadamard(a, k), hadamard(b, k)) == pytest.approx(scalar_product(a, b), abs=1e-12)


@pytest.mark.parametrize("n", range(1, 11))
def test_hadamard_chain_on_vacuum(n):
    alg = Algebra(n)
    z, counter = Multivector.scalar(alg), OpCounter()
    for k in range(1, n + 1):
        z = hadamard(z, k, counter)
    assert z == Multivector(alg, {m: 2.0 ** (-n / 2) for m in range(0, 1 << (n + 1), 2)})
    assert counter.count == 2 * n


@given(multivectors(Algebra(5), max_terms=20))
def test_hadamard_cost_independent_of_terms(z):
    counter = OpCounter()
    for k in range(1, 6):
        z = hadamard(z, k, counter)
    assert counter.count == 10


def _sv_of_comb(alg, bits):
    return correspondence(comb(alg, "0" + bits))


def test_cnot_matches_state_vector():
    c2 = Algebra(2, complex=True)
    assert cnot(comb(c2, "011"), 1, 2) == comb(c2, "010")
    assert cnot(comb(c2, "001"), 1, 2) == comb(c2, "001")
    for bits in ("00", "01", "10", "11"):
        ref = sv_apply(_sv_of_comb(c2, bits), GateOp(GateKind.CNOT, (1, 2)))
        assert correspondence(cnot(comb(c2, "0" + bits), 1, 2)).max_diff(ref) == 0


@given(multivectors(C3), st.integers(1, 3))
def test_control_identity_is_identity(z, k):
    assert control_x(z, k, lambda w: w) == z


@given(multivectors(C3), st.integers(1, 3))
def test_control_x_subspaces(z, k):
    gate = lambda w: phase_rotate(negate_bit(w, (k % 3) + 1), 0.25)  # noqa: E731
    clear = project_bit_complement(z, k)
    assert control_x(clear, k, gate) == clear
    if (k % 3) + 1 != k:
        chosen = project_bit(z, k)
        assert control_x(chosen, k, gate) == gate(chosen)


def test_toffoli_truth_table():
    for a, b, c in itertools.product((0, 1), repeat=3):
        out = toffoli(comb(R3, f"{a}{b}{c}"), 1, 2, 3)
        assert out == comb(R3, f"{a}{b}{c ^ (a & b)}")


def test_collisions_rejected():
    with pytest.raises(BitIndexError):
        cnot(comb(R3, "000"), 2, 2)
    with pytest.raises(BitIndexError):
        toffoli(comb(R3, "000"), 1, 3, 3)


def test_pauli_y_and_phase_match_matrices():
    c1 = Algebra(1, complex=True)
    for idx in (0, 1):
        z = comb(c1, f"0{idx}")
        ref = sv_apply(StateVector.basis(1, idx), GateOp(GateKind.Y, (1,)))
        assert correspondence(pauli_y(z, 1)).max_diff(ref) == 0
        ref = sv_apply(StateVector.basis(1, idx), GateOp(GateKind.PHASE, (1,), 0.3))
        assert correspondence(phase(z, 1, 0.3)).max_diff(ref) < 1e-16


RESET_TABLE = [
    ("000", "000"),
    ("100", "100"),
    ("010", "010"),
    ("001", "000"),
    ("110", "110"),
    ("101", "100"),
    ("011", "010"),
    ("111", "110"),
]


@pytest.mark.parametrize("src, dst", RESET_TABLE)
def test_reset_third_bit(src, dst):
    assert reset_bit(comb(R3, src), 3) == comb(R3, dst)


def test_reset_sums_collisions():
    assert reset_bit(comb(R3, "001") + comb(R3, "000"), 3) == comb(R3, "000", 2.0)


def test_empty_circuit():
    z = comb(R3, "101", 0.5)
    out, counter = apply_circuit(z, Circuit(3))
    assert out == z and counter.count == 0


def test_circuit_width_mismatch():
    with pytest.raises(WidthMismatchError):
        apply_circuit(comb(R3, "101"), Circuit(4))


def test_gateop_validation():
    with pytest.raises(ValueError):
        GateOp(GateKind.CNOT, (1,))
    with pytest.raises(ValueError):
        GateOp(GateKind.PHASE, (1,))
    with pytest.raises(BitIndexError):
        GateOp(GateKind.TOFFOLI, (1, 2, 1))
    with pytest.raises(BitIndexError):
        apply_circuit(comb(R3, "000"), Circuit(3, ops=(GateOp(GateKind.H, (5,)),)))


def test_op_costs():
    cases = {
        GateOp(GateKind.H, (1,)): 2,
        GateOp(GateKind.X, (1,)): 1,
        GateOp(GateKind.Z, (1,)): 1,
        GateOp(GateKind.Y, (1,)): 3,
        GateOp(GateKind.PHASE, (1,), 0.1): 2,
        GateOp(GateKind.T, (1,)): 2,
        GateOp(GateKind.CNOT, (1, 2)): 2,
        GateOp(GateKind.TOFFOLI, (1, 2, 3)): 3,
        GateOp(GateKind.RESET, (1,)): 1,
        GateOp(GateKind.SELECT, (1,)): 1,
        GateOp(GateKind.GLOBAL_I): 1,
        GateOp(GateKind.GLOBAL_PHASE, (), 0.1): 1,
    }
    for op, cost in cases.items():
        _, counter = apply_circuit(comb(C3, "0110"), Circuit(3, True, (op,)))
        assert counter.count == cost, op


def test_counter_monotone():
    c = OpCounter()
    c.tick(2)
    with pytest.raises(ValueError):
        c.tick(-1)
    assert c.count == 2


def test_real_state_embedded_for_complex_circuit():
    out, _ = apply_circuit(comb(R3, "100"), Circuit(3, True, (GateOp(GateKind.GLOBAL_I),)))
    assert out == comb(C3, "1100")


def test_round_trip_correspondence_random():
    rng = np.random.default_rng(5)
    for n in range(1, 5):
        amp = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
        s = StateVector(n, amp)
        assert correspondence(inverse_correspondence(s)).max_diff(s) == 0
        assert math.isclose(np.linalg.norm(s.amplitudes), np.linalg.norm(amp))
