"""Geometric-product coding of bit strings.

Bit strings become combs (basis blades indexed by bitmasks) of a real
Euclidean Clifford algebra; superpositions become multivectors and quantum
gates become bit-level maps on them.
"""

from .algorithms import bell, ghz, hadamard_state, shor15
from .core import (
    Algebra,
    Multivector,
    add,
    complex_i,
    factor_prefix,
    geometric_product,
    phase_rotate,
    prune,
    reverse,
    scalar_part,
    scalar_product,
    scale,
)
from .dsl import Circuit, ParseError, parse_circuit, print_circuit
from .gates import GateKind, GateOp, OpCounter, apply_circuit, apply_gate

__all__ = [
    "Algebra",
    "Multivector",
    "add",
    "complex_i",
    "factor_prefix",
    "geometric_product",
    "phase_rotate",
    "prune",
    "reverse",
    "scalar_part",
    "scalar_product",
    "scale",
    "Circuit",
    "ParseError",
    "parse_circuit",
    "print_circuit",
    "GateKind",
    "GateOp",
    "OpCounter",
    "apply_circuit",
    "apply_gate",
    "bell",
    "ghz",
    "hadamard_state",
    "shor15",
]
