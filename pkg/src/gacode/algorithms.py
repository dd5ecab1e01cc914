"""Named states and the Fourier-free period finding demo for N = 15."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .core import Algebra, Multivector
from .errors import AlgebraError, BitIndexError
from .gates import project_bit, project_bit_complement

__all__ = [
    "RegisterLayout",
    "encode_int",
    "decode_int",
    "bell",
    "ghz",
    "hadamard_state",
    "ShorResult",
    "SHOR15_BASES",
    "SHOR15_LAYOUT",
    "shor15_state",
    "shor15",
    "multiplicative_order",
]

_INV_SQRT2 = 2.0 ** -0.5


def encode_int(x: int, width: int, start: int = 1) -> int:
    """Comb mask of ``x`` written MSB-first over positions ``start..start+width-1``.

    >>> bin(encode_int(4, 4))  # bits 0100 on positions 1..4
    '0b100'
    """
    if x < 0 or x >= 1 << width:
        raise OverflowError(f"{x} does not fit in {width} bits")
    mask = 0
    for i in range(width):
        if x >> (width - 1 - i) & 1:
            mask |= 1 << (start + i)
    return mask


def decode_int(mask: int, start: int, width: int) -> int:
    x = 0
    for i in range(width):
        x = (x << 1) | (mask >> (start + i) & 1)
    return x


@dataclass(frozen=True)
class RegisterLayout:
    """Named, contiguous, MSB-first registers over data positions ``1..n``."""

    registers: tuple[tuple[str, int, int], ...]  # (name, first position, width)

    def __post_init__(self) -> None:
        taken: set[int] = set()
        for name, start, width in self.registers:
            span = set(range(start, start + width))
            if start < 1 or width < 1 or span & taken:
                raise BitIndexError(f"register {name!r} overlaps or starts before position 1")
            taken |= span

    @property
    def width(self) -> int:
        return max(start + width - 1 for _, start, width in self.registers)

    def _reg(self, name: str) -> tuple[int, int]:
        for reg, start, width in self.registers:
            if reg == name:
                return start, width
        raise KeyError(name)

    def positions(self, name: str) -> range:
        start, width = self._reg(name)
        return range(start, start + width)

    def encode(self, **values: int) -> int:
        mask = 0
        for name, x in values.items():
            start, width = self._reg(name)
            mask |= encode_int(x, width, start)
        return mask

    def decode(self, name: str, mask: int) -> int:
        start, width = self._reg(name)
        return decode_int(mask, start, width)


def bell(which: str, algebra: Algebra | None = None) -> Multivector:
    """Bell multivectors ``(b2 +- b1)/sqrt2`` and ``(1 +- b1 b2)/sqrt2``.

    ``which`` is one of ``psi+``, ``psi-``, ``phi+``, ``phi-``.
    """
    algebra = algebra or Algebra(2)
    if algebra.n != 2:
        raise AlgebraError("Bell states live on two data bits")
    b1, b2 = 1 << 1, 1 << 2
    table = {
        "psi+": {b2: _INV_SQRT2, b1: _INV_SQRT2},
        "psi-": {b2: _INV_SQRT2, b1: -_INV_SQRT2},
        "phi+": {0: _INV_SQRT2, b1 | b2: _INV_SQRT2},
        "phi-": {0: _INV_SQRT2, b1 | b2: -_INV_SQRT2},
    }
    try:
        return Multivector(algebra, table[which.lower()])
    except KeyError:
        raise ValueError(f"unknown Bell state {which!r}; use one of {sorted(table)}") from None


def ghz(algebra: Algebra | None = None) -> Multivector:
    algebra = algebra or Algebra(3)
    if algebra.n != 3:
        raise AlgebraError("the GHZ state lives on three data bits")
    return Multivector(algebra, {0: _INV_SQRT2, 0b1110: _INV_SQRT2})


def hadamard_state(n: int, algebra: Algebra | None = None) -> Multivector:
    """``2^(-n/2) (1 + b_1)(1 + b_2)...(1 + b_n)``, built by ``n`` products."""
    if not 1 <= n <= 20:
        raise AlgebraError(f"Hadamard state width {n} outside 1..20")
    algebra = algebra or Algebra(n)
    one = Multivector.scalar(algebra)
    state = one
    for k in range(1, n + 1):
        state = state * (one + Multivector.basis(algebra, k))
    return state * (2.0 ** (-n / 2))


SHOR15_BASES = (2, 4, 7, 8, 11, 13, 14)
SHOR15_LAYOUT = RegisterLayout((("x", 1, 4), ("value", 5, 4)))


class ShorResult(NamedTuple):
    period: int
    factors: tuple[int, int] | None
    trace: list[Multivector]


def multiplicative_order(base: int, modulus: int) -> int:
    if math.gcd(base, modulus) != 1:
        raise ValueError(f"{base} is not coprime to {modulus}")
    r, acc = 1, base % modulus
    while acc != 1:
        acc = acc * base % modulus
        r += 1
    return r


def shor15_state(base: int) -> Multivector:
    """Sum over x of ``c_x c_{base^x mod 15}`` on the 8-bit layout."""
    algebra = Algebra(SHOR15_LAYOUT.width)
    state = Multivector.zero(algebra)
    for x in range(16):
        xs = Multivector.comb(algebra, SHOR15_LAYOUT.encode(x=x))
        value = Multivector.comb(algebra, SHOR15_LAYOUT.encode(value=pow(base, x, 15)))
        state = state + xs * value
    return state


def _select_value(state: Multivector, value: int) -> Multivector:
    target = SHOR15_LAYOUT.encode(value=value)
    for k in SHOR15_LAYOUT.positions("value"):
        if target >> k & 1:
            state = project_bit(state, k)
        else:
            state = project_bit_complement(state, k)
    return state


def shor15(base: int = 2) -> ShorResult:
    """Find the period of ``x -> base^x mod 15`` by selecting blades.

    No Fourier transform: the blades whose value register reads 1 are kept
    and the smallest nonzero x among them is the period. Factors come from
    ``gcd(base^(r/2) +- 1, 15)`` and are ``None`` when that shortcut fails
    (odd period or a trivial gcd).
    """
    if base not in SHOR15_BASES:
        raise ValueError(f"base must be one of {SHOR15_BASES}, got {base}")
    state = shor15_state(base)
    selected = _select_value(state, 1)
    xs = sorted(SHOR15_LAYOUT.decode("x", m) for m in selected.masks())
    period = min(x for x in xs if x > 0)

    factors = None
    if period % 2 == 0:
        half = pow(base, period // 2, 15)
        pair = tuple(sorted((math.gcd(half - 1, 15), math.gcd(half + 1, 15))))
        if 1 not in pair and 15 not in pair:
            factors = pair
    return ShorResult(period, factors, [state, selected])
