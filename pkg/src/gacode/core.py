"""Sparse multivectors over a real Euclidean Clifford algebra with comb indexing.

A comb is a bitmask: bit ``k`` set means the generator ``b_k`` occurs in the
blade. Position 0 is reserved for the complex flag, positions ``1..n`` carry
data bits and position ``n+1`` is the gate-auxiliary dimension. The product of
two combs is the XOR of their masks up to a reordering sign.

All operations are pure; a :class:`Multivector` never changes after creation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from ._bits import reorder_sign, reverse_sign
from .errors import (
    BitIndexError,
    ConfigurationError,
    NotFactorableError,
    WidthMismatchError,
)

__all__ = [
    "MAX_DIM",
    "Algebra",
    "Multivector",
    "geometric_product",
    "add",
    "scale",
    "complex_i",
    "phase_rotate",
    "reverse",
    "scalar_part",
    "scalar_product",
    "prune",
    "factor_prefix",
]

MAX_DIM = 62


@dataclass(frozen=True)
class Algebra:
    """Layout of reserved bit positions.

    ``n`` counts the data bits. ``complex`` reserves position 0 and ``aux``
    reserves position ``n + 1``.
    """

    n: int
    complex: bool = False
    aux: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ConfigurationError(f"data width must be a positive integer, got {self.n!r}")
        if self.total_dim > MAX_DIM:
            raise ConfigurationError(
                f"total dimension {self.total_dim} exceeds the {MAX_DIM}-bit limit"
            )

    @property
    def total_dim(self) -> int:
        return self.n + int(self.complex) + int(self.aux)

    @property
    def aux_position(self) -> int:
        return self.n + 1

    @property
    def data_mask(self) -> int:
        return ((1 << self.n) - 1) << 1

    @property
    def allowed_mask(self) -> int:
        mask = self.data_mask
        if self.complex:
            mask |= 1
        if self.aux:
            mask |= 1 << (self.n + 1)
        return mask

    @property
    def positions(self) -> tuple[int, ...]:
        """Reserved positions in bitstring order (left to right)."""
        start = 0 if self.complex else 1
        stop = self.n + 2 if self.aux else self.n + 1
        return tuple(range(start, stop))

    def with_flags(self, complex: bool | None = None, aux: bool | None = None) -> Algebra:
        return Algebra(
            self.n,
            self.complex if complex is None else complex,
            self.aux if aux is None else aux,
        )

    def join(self, other: Algebra) -> Algebra:
        """Smallest layout containing both; data widths must agree."""
        if self.n != other.n:
            raise WidthMismatchError(f"width mismatch: n={self.n} vs n={other.n}")
        if self == other:
            return self
        return Algebra(self.n, self.complex or other.complex, self.aux or other.aux)

    def check_mask(self, mask: int) -> int:
        if not isinstance(mask, int) or mask < 0 or mask & ~self.allowed_mask:
            raise BitIndexError(f"comb mask {mask!r} uses positions outside {self}")
        return mask

    def check_data_bit(self, k: int) -> int:
        if not isinstance(k, int) or not 1 <= k <= self.n:
            raise BitIndexError(f"bit index {k!r} outside 1..{self.n}")
        return k

    def bitstring(self, mask: int) -> str:
        return "".join("1" if mask >> p & 1 else "0" for p in self.positions)

    def parse_bits(self, bits: str) -> int:
        positions = self.positions
        if len(bits) != len(positions) or set(bits) - {"0", "1"}:
            raise BitIndexError(
                f"bitstring {bits!r} must have {len(positions)} characters of 0/1"
            )
        mask = 0
        for p, ch in zip(positions, bits):
            if ch == "1":
                mask |= 1 << p
        return mask


def _fmt(c: float) -> str:
    return f"{c:.6g}"


class Multivector:
    """Finite real combination of combs, stored as ``{mask: coefficient}``.

    Terms are kept in ascending mask order and exact zeros are never stored.
    ``*`` is the geometric product (or scaling by a number), ``~`` the reverse.
    """

    __slots__ = ("algebra", "_terms")

    algebra: Algebra
    _terms: dict[int, float]

    def __init__(self, algebra: Algebra, terms: Mapping[int, float] | Iterable[tuple[int, float]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, float] = {}
        for mask, coef in items:
            algebra.check_mask(mask)
            acc[mask] = acc.get(mask, 0.0) + float(coef)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "_terms", _canonical(acc))

    @classmethod
    def _from_canonical(cls, algebra: Algebra, terms: dict[int, float]) -> Multivector:
        mv = object.__new__(cls)
        object.__setattr__(mv, "algebra", algebra)
        object.__setattr__(mv, "_terms", terms)
        return mv

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, algebra: Algebra) -> Multivector:
        return cls._from_canonical(algebra, {})

    @classmethod
    def scalar(cls, algebra: Algebra, value: float = 1.0) -> Multivector:
        return cls(algebra, {0: value})

    @classmethod
    def comb(cls, algebra: Algebra, mask: int, coef: float = 1.0) -> Multivector:
        return cls(algebra, {mask: coef})

    @classmethod
    def basis(cls, algebra: Algebra, k: int) -> Multivector:
        """The one-blade ``b_k`` (``k`` may be 0 or ``n+1`` if reserved)."""
        return cls(algebra, {1 << k: 1.0})

    @classmethod
    def from_bits(cls, algebra: Algebra, bits: str, coef: float = 1.0) -> Multivector:
        return cls(algebra, {algebra.parse_bits(bits): coef})

    # -- access -----------------------------------------------------------

    @property
    def n(self) -> int:
        return self.algebra.n

    @property
    def terms(self) -> dict[int, float]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, float]]:
        return iter(self._terms.items())

    def masks(self) -> list[int]:
        return list(self._terms)

    def coef(self, mask: int) -> float:
        return self._terms.get(mask, 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(self._terms.items())))

    def allclose(self, other: Multivector, tol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        masks = self._terms.keys() | other._terms.keys()
        return all(abs(self.coef(m) - other.coef(m)) <= tol for m in masks)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Multivector) -> Multivector:
        if not isinstance(other, Multivector):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: Multivector) -> Multivector:
        if not isinstance(other, Multivector):
            return NotImplemented
        return add(self, scale(other, -1.0))

    def __neg__(self) -> Multivector:
        return scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (int, float)):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return scale(self, 1.0 / other)
        return NotImplemented

    def __invert__(self) -> Multivector:
        return reverse(self)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{_fmt(c)} c{self.algebra.bitstring(m)}" for m, c in self._terms.items())

    def __repr__(self) -> str:
        a = self.algebra
        return f"Multivector(n={a.n}, complex={a.complex}, aux={a.aux}, {self})"


def _canonical(acc: dict[int, float]) -> dict[int, float]:
    return {m: acc[m] for m in sorted(acc) if acc[m] != 0.0}


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Bilinear extension of ``c_A c_B = sign(A, B) c_{A xor B}``."""
    algebra = a.algebra.join(b.algebra)
    acc: dict[int, float] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            m = ma ^ mb
            acc[m] = acc.get(m, 0.0) + reorder_sign(ma, mb) * ca * cb
    return Multivector._from_canonical(algebra, _canonical(acc))


def add(a: Multivector, b: Multivector) -> Multivector:
    algebra = a.algebra.join(b.algebra)
    acc = dict(a._terms)
    for m, c in b._terms.items():
        acc[m] = acc.get(m, 0.0) + c
    return Multivector._from_canonical(algebra, _canonical(acc))


def scale(a: Multivector, s: float) -> Multivector:
    s = float(s)
    return Multivector._from_canonical(
        a.algebra, {m: c * s for m, c in a._terms.items() if c * s != 0.0}
    )


def _require_complex(z: Multivector) -> None:
    if not z.algebra.complex:
        raise ConfigurationError("complex structure needs the complex bit (position 0)")


def complex_i(z: Multivector) -> Multivector:
    """``i c_{A0 A} = (-1)^A0 c_{A0' A}``: flip bit 0, negate if it was set."""
    _require_complex(z)
    acc = {m ^ 1: (-c if m & 1 else c) for m, c in z._terms.items()}
    return Multivector._from_canonical(z.algebra, _canonical(acc))


def phase_rotate(z: Multivector, phi: float) -> Multivector:
    """``cos(phi) z + sin(phi) i z``."""
    _require_complex(z)
    cs, sn = math.cos(phi), math.sin(phi)
    acc: dict[int, float] = {}
    for m, c in z._terms.items():
        acc[m] = acc.get(m, 0.0) + cs * c
        acc[m ^ 1] = acc.get(m ^ 1, 0.0) + (-sn * c if m & 1 else sn * c)
    return Multivector._from_canonical(z.algebra, _canonical(acc))


def reverse(a: Multivector) -> Multivector:
    return Multivector._from_canonical(
        a.algebra, {m: reverse_sign(m) * c for m, c in a._terms.items()}
    )


def scalar_part(a: Multivector) -> float:
    return a._terms.get(0, 0.0)


def scalar_product(a: Multivector, b: Multivector) -> float:
    """Scalar part of ``reverse(a) * b``.

    Only equal masks meet at the scalar, so this skips the full product.
    """
    a.algebra.join(b.algebra)
    total = 0.0
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    for m, c in small._terms.items():
        other = large._terms.get(m)
        if other is not None:
            total += c * other
    return total


def prune(a: Multivector, tol: float) -> Multivector:
    """Drop terms with ``|coef| <= tol``."""
    return Multivector._from_canonical(
        a.algebra, {m: c for m, c in a._terms.items() if abs(c) > tol}
    )


def factor_prefix(
    alpha: float,
    comb_ab: int,
    beta: float,
    comb_ac: int,
    split: int,
    algebra: Algebra,
) -> tuple[Multivector, Multivector]:
    """Split ``alpha c_AB + beta c_AC`` into a shared prefix comb and a suffix.

    Positions ``<= split`` form the prefix and must agree between the two
    combs. Every prefix generator sits left of every suffix generator, so
    ``prefix * suffix`` recomposes the input with no sign correction.
    """
    algebra.check_mask(comb_ab)
    algebra.check_mask(comb_ac)
    if not 0 <= split <= algebra.n:
        raise BitIndexError(f"split {split!r} outside 0..{algebra.n}")
    low = (1 << (split + 1)) - 1
    if (comb_ab ^ comb_ac) & low:
        raise NotFactorableError(
            f"combs {algebra.bitstring(comb_ab)} and {algebra.bitstring(comb_ac)} "
            f"differ within the first {split} bits"
        )
    prefix = Multivector.comb(algebra, comb_ab & low)
    suffix = Multivector(algebra, [(comb_ab & ~low, alpha), (comb_ac & ~low, beta)])
    return prefix, suffix
