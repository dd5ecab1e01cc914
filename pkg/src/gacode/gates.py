"""Gate analogues acting on comb multivectors.

Everything is built from three bit-level maps: negation of bit ``k``, the sign
conjugation ``(-1)^{A_k}`` and the complex structure ``i``. They are applied
directly to masks and coefficients; the conjugation formulas with the
auxiliary bivectors are only evaluated by :mod:`gacode.oracle` to check them.

Each primitive map bumps an optional :class:`OpCounter` by one. Forming linear
combinations of already computed multivectors is free, so a Hadamard costs 2.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable

from ._bits import div_sqrt2
from .core import Multivector, _canonical, complex_i, phase_rotate
from .errors import BitIndexError, WidthMismatchError

if TYPE_CHECKING:
    from .dsl import Circuit

__all__ = [
    "GateKind",
    "GateOp",
    "OpCounter",
    "negate_bit",
    "sign_bit",
    "project_bit",
    "project_bit_complement",
    "hadamard",
    "control_x",
    "cnot",
    "toffoli",
    "phase",
    "t_gate",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "global_i",
    "global_phase",
    "reset_bit",
    "apply_gate",
    "apply_circuit",
]


class GateKind(enum.Enum):
    """Gate mnemonics, valued by their circuit-file spelling."""

    H = "h"
    X = "x"
    Y = "y"
    Z = "z"
    PHASE = "phase"
    T = "t"
    CNOT = "cnot"
    TOFFOLI = "toffoli"
    RESET = "reset"
    SELECT = "select"
    GLOBAL_I = "i"
    GLOBAL_PHASE = "gphase"

    @property
    def arity(self) -> int:
        return _ARITY[self]

    @property
    def has_angle(self) -> bool:
        return self in (GateKind.PHASE, GateKind.GLOBAL_PHASE)

    @property
    def needs_complex(self) -> bool:
        return self in _COMPLEX_KINDS


_ARITY = {
    GateKind.H: 1,
    GateKind.X: 1,
    GateKind.Y: 1,
    GateKind.Z: 1,
    GateKind.PHASE: 1,
    GateKind.T: 1,
    GateKind.CNOT: 2,
    GateKind.TOFFOLI: 3,
    GateKind.RESET: 1,
    GateKind.SELECT: 1,
    GateKind.GLOBAL_I: 0,
    GateKind.GLOBAL_PHASE: 0,
}

_COMPLEX_KINDS = frozenset(
    {GateKind.Y, GateKind.PHASE, GateKind.T, GateKind.GLOBAL_I, GateKind.GLOBAL_PHASE}
)


@dataclass(frozen=True)
class GateOp:
    kind: GateKind
    bits: tuple[int, ...] = ()
    angle: float | None = None

    def __post_init__(self) -> None:
        if len(self.bits) != self.kind.arity:
            raise ValueError(
                f"{self.kind.value} takes {self.kind.arity} bit(s), got {len(self.bits)}"
            )
        if len(set(self.bits)) != len(self.bits):
            raise BitIndexError(f"{self.kind.value}: bit indices must be distinct, got {self.bits}")
        if self.kind.has_angle != (self.angle is not None):
            raise ValueError(f"{self.kind.value}: angle is {'required' if self.kind.has_angle else 'not allowed'}")

    def check_width(self, n: int) -> None:
        for k in self.bits:
            if not 1 <= k <= n:
                raise BitIndexError(f"{self.kind.value}: bit {k} outside 1..{n}")


@dataclass
class OpCounter:
    """Number of primitive multivector-level maps applied so far."""

    count: int = 0

    def tick(self, k: int = 1) -> None:
        if k < 0:
            raise ValueError("counter only moves forward")
        self.count += k


def _tick(counter: OpCounter | None, k: int = 1) -> None:
    if counter is not None:
        counter.tick(k)


def _map_masks(z: Multivector, fn) -> Multivector:
    acc: dict[int, float] = {}
    for m, c in z.items():
        m2, c2 = fn(m, c)
        acc[m2] = acc.get(m2, 0.0) + c2
    return Multivector._from_canonical(z.algebra, _canonical(acc))


def negate_bit(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    """Flip data bit ``k`` of every comb, coefficients unchanged."""
    z.algebra.check_data_bit(k)
    _tick(counter)
    bit = 1 << k
    return Multivector._from_canonical(z.algebra, dict(sorted((m ^ bit, c) for m, c in z.items())))


def sign_bit(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    """Multiply each term by ``(-1)^{A_k}``."""
    z.algebra.check_data_bit(k)
    _tick(counter)
    bit = 1 << k
    return Multivector._from_canonical(z.algebra, {m: (-c if m & bit else c) for m, c in z.items()})


def project_bit(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    """Keep the terms whose comb contains ``b_k``."""
    z.algebra.check_data_bit(k)
    _tick(counter)
    bit = 1 << k
    return Multivector._from_canonical(z.algebra, {m: c for m, c in z.items() if m & bit})


def project_bit_complement(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    z.algebra.check_data_bit(k)
    _tick(counter)
    bit = 1 << k
    return Multivector._from_canonical(z.algebra, {m: c for m, c in z.items() if not m & bit})


def hadamard(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    """``(negate_bit(z, k) + sign_bit(z, k)) / sqrt(2)``."""
    flipped = negate_bit(z, k, counter)
    signed = sign_bit(z, k, counter)
    acc = flipped.terms
    for m, c in signed.items():
        acc[m] = acc.get(m, 0.0) + c
    return Multivector._from_canonical(
        z.algebra, {m: div_sqrt2(c) for m, c in _canonical(acc).items()}
    )


def control_x(
    z: Multivector,
    k: int,
    gate: Callable[[Multivector], Multivector],
    counter: OpCounter | None = None,
) -> Multivector:
    """Apply ``gate`` to the part of ``z`` whose combs contain ``b_k``.

    ``gate`` must be linear with ``gate(0) == 0``. The untouched part reuses
    the same conjugation as the projector, so only one tick is charged here.
    """
    selected = project_bit(z, k, counter)
    bit = 1 << k
    rest = Multivector._from_canonical(z.algebra, {m: c for m, c in z.items() if not m & bit})
    return rest + gate(selected)


def _distinct(*bits: int) -> None:
    if len(set(bits)) != len(bits):
        raise BitIndexError(f"control/target bits must be distinct, got {bits}")


def cnot(z: Multivector, control: int, target: int, counter: OpCounter | None = None) -> Multivector:
    _distinct(control, target)
    z.algebra.check_data_bit(target)
    return control_x(z, control, lambda w: negate_bit(w, target, counter), counter)


def toffoli(
    z: Multivector, c1: int, c2: int, target: int, counter: OpCounter | None = None
) -> Multivector:
    _distinct(c1, c2, target)
    z.algebra.check_data_bit(c2)
    z.algebra.check_data_bit(target)
    return control_x(z, c1, lambda w: cnot(w, c2, target, counter), counter)


def phase(z: Multivector, k: int, phi: float, counter: OpCounter | None = None) -> Multivector:
    """Controlled phase: rotate by ``phi`` the terms with bit ``k`` set."""
    return control_x(z, k, lambda w: global_phase(w, phi, counter), counter)


def t_gate(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    return phase(z, k, math.pi / 4, counter)


def pauli_x(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    return negate_bit(z, k, counter)


def pauli_z(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    return sign_bit(z, k, counter)


def pauli_y(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    # Derived: Y = i X Z, which sends |0> to i|1> and |1> to -i|0>.
    return global_i(negate_bit(sign_bit(z, k, counter), k, counter), counter)


def global_i(z: Multivector, counter: OpCounter | None = None) -> Multivector:
    out = complex_i(z)
    _tick(counter)
    return out


def global_phase(z: Multivector, phi: float, counter: OpCounter | None = None) -> Multivector:
    out = phase_rotate(z, phi)
    _tick(counter)
    return out


def reset_bit(z: Multivector, k: int, counter: OpCounter | None = None) -> Multivector:
    """Clear bit ``k`` of every comb; colliding coefficients add up."""
    z.algebra.check_data_bit(k)
    _tick(counter)
    keep = ~(1 << k)
    return _map_masks(z, lambda m, c: (m & keep, c))


def apply_gate(z: Multivector, op: GateOp, counter: OpCounter | None = None) -> Multivector:
    op.check_width(z.n)
    kind, b = op.kind, op.bits
    if kind is GateKind.H:
        return hadamard(z, b[0], counter)
    if kind is GateKind.X:
        return pauli_x(z, b[0], counter)
    if kind is GateKind.Y:
        return pauli_y(z, b[0], counter)
    if kind is GateKind.Z:
        return pauli_z(z, b[0], counter)
    if kind is GateKind.PHASE:
        return phase(z, b[0], op.angle, counter)
    if kind is GateKind.T:
        return t_gate(z, b[0], counter)
    if kind is GateKind.CNOT:
        return cnot(z, b[0], b[1], counter)
    if kind is GateKind.TOFFOLI:
        return toffoli(z, b[0], b[1], b[2], counter)
    if kind is GateKind.RESET:
        return reset_bit(z, b[0], counter)
    if kind is GateKind.SELECT:
        return project_bit(z, b[0], counter)
    if kind is GateKind.GLOBAL_I:
        return global_i(z, counter)
    if kind is GateKind.GLOBAL_PHASE:
        return global_phase(z, op.angle, counter)
    raise ValueError(f"unhandled gate {kind}")  # pragma: no cover


def apply_circuit(z: Multivector, circuit: Circuit) -> tuple[Multivector, OpCounter]:
    """Run ``circuit`` left to right on ``z``.

    A real state fed to a circuit declared ``complex`` is embedded into the
    algebra with the complex bit reserved.
    """
    if z.n != circuit.width:
        raise WidthMismatchError(f"width mismatch: state has n={z.n}, circuit has n={circuit.width}")
    if circuit.complex and not z.algebra.complex:
        z = Multivector(z.algebra.with_flags(complex=True), z.terms)
    counter = OpCounter()
    for op in circuit.ops:
        z = apply_gate(z, op, counter)
    return z, counter
