"""Brute-force reference implementations used as ground truth.

Nothing here shares code with the bitmask kernels in :mod:`gacode.core`:
product signs come from literally sorting generator sequences, the gate
identities are evaluated as written with the auxiliary bivectors
``a_j = b_j b_{n+1}``, and a plain tensor-product state vector simulator
provides the quantum side of the correspondence.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import Algebra, Multivector
from .errors import BitIndexError, ConfigurationError, WidthMismatchError
from .gates import GateKind, GateOp

__all__ = [
    "MAX_DENSE_DIM",
    "DenseMultivector",
    "sort_generators",
    "dense_product",
    "dense_reverse",
    "Sandwich",
    "sandwich_gate",
    "StateVector",
    "correspondence",
    "inverse_correspondence",
    "sv_apply",
    "sv_run",
]

MAX_DENSE_DIM = 14


def _generators(mask: int) -> list[int]:
    return [k for k in range(mask.bit_length()) if mask >> k & 1]


def sort_generators(seq: list[int]) -> tuple[int, int]:
    """Bubble-sort a word of orthonormal generators.

    Each adjacent swap of distinct generators flips the sign; equal
    neighbours then cancel since ``b_k b_k = 1``. Returns ``(sign, mask)``.
    """
    word = list(seq)
    swaps = 0
    for end in range(len(word) - 1, 0, -1):
        for j in range(end):
            if word[j] > word[j + 1]:
                word[j], word[j + 1] = word[j + 1], word[j]
                swaps += 1
    mask = 0
    i = 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == word[i + 1]:
            i += 2
            continue
        mask |= 1 << word[i]
        i += 1
    return (-1 if swaps % 2 else 1), mask


@lru_cache(maxsize=None)
def _pair(a: int, b: int) -> tuple[int, int]:
    return sort_generators(_generators(a) + _generators(b))


@lru_cache(maxsize=None)
def _reversed(a: int) -> int:
    sign, mask = sort_generators(_generators(a)[::-1])
    assert mask == a
    return sign


@dataclass
class DenseMultivector:
    dim: int
    coeffs: np.ndarray

    def __post_init__(self) -> None:
        if not 0 <= self.dim <= MAX_DENSE_DIM:
            raise ValueError(f"dense dimension {self.dim} outside 0..{MAX_DENSE_DIM}")
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        if self.coeffs.shape != (1 << self.dim,):
            raise ValueError(f"expected {1 << self.dim} coefficients, got {self.coeffs.shape}")

    @classmethod
    def zeros(cls, dim: int) -> DenseMultivector:
        return cls(dim, np.zeros(1 << dim))

    @classmethod
    def blade(cls, dim: int, mask: int, coef: float = 1.0) -> DenseMultivector:
        out = cls.zeros(dim)
        out.coeffs[mask] = coef
        return out

    @classmethod
    def from_multivector(cls, mv: Multivector, dim: int | None = None) -> DenseMultivector:
        """Embed into ``dim`` generators (default: positions ``0..n+1``)."""
        dim = mv.n + 2 if dim is None else dim
        out = cls.zeros(dim)
        for m, c in mv.items():
            if m >> dim:
                raise ValueError(f"mask {m} does not fit in {dim} generators")
            out.coeffs[m] = c
        return out

    def to_multivector(self, algebra: Algebra) -> Multivector:
        return Multivector(algebra, {int(m): float(self.coeffs[m]) for m in np.flatnonzero(self.coeffs)})

    def nonzero(self) -> list[tuple[int, float]]:
        return [(int(m), float(self.coeffs[m])) for m in np.flatnonzero(self.coeffs)]

    def __add__(self, other: DenseMultivector) -> DenseMultivector:
        _same_dim(self, other)
        return DenseMultivector(self.dim, self.coeffs + other.coeffs)

    def __mul__(self, other):
        if isinstance(other, DenseMultivector):
            return dense_product(self, other)
        return DenseMultivector(self.dim, self.coeffs * other)

    __rmul__ = __mul__


def _same_dim(a: DenseMultivector, b: DenseMultivector) -> None:
    if a.dim != b.dim:
        raise WidthMismatchError(f"dense dimension mismatch: {a.dim} vs {b.dim}")


def dense_product(a: DenseMultivector, b: DenseMultivector) -> DenseMultivector:
    _same_dim(a, b)
    out = np.zeros(1 << a.dim)
    for ma, ca in a.nonzero():
        for mb, cb in b.nonzero():
            sign, m = _pair(ma, mb)
            out[m] += sign * ca * cb
    return DenseMultivector(a.dim, out)


def dense_reverse(a: DenseMultivector) -> DenseMultivector:
    out = np.zeros_like(a.coeffs)
    for m, c in a.nonzero():
        out[m] = _reversed(m) * c
    return DenseMultivector(a.dim, out)


class Sandwich(enum.Enum):
    NEG = "neg"
    SIGN = "sign"


def _aux_bivector(dim: int, j: int) -> DenseMultivector:
    aux = dim - 1
    return dense_product(DenseMultivector.blade(dim, 1 << j), DenseMultivector.blade(dim, 1 << aux))


def sandwich_gate(z: DenseMultivector, k: int, which: Sandwich) -> DenseMultivector:
    """Evaluate the conjugation forms of bit negation and ``(-1)^{A_k}``.

    ``z`` lives in ``n + 2`` generators with position ``n + 1`` as the
    auxiliary axis. NEG computes ``b_k P~ z P`` with ``P = a_0 a_1 ... a_{k-1}``;
    SIGN computes ``a_k~ z a_k``.
    """
    n = z.dim - 2
    if n < 1:
        raise ConfigurationError("sandwich forms need data bits plus the auxiliary axis")
    if not 1 <= k <= n:
        raise BitIndexError(f"bit index {k} outside 1..{n}")
    if z.coeffs[1 << (n + 1) :].any():
        raise ConfigurationError("input must not use the auxiliary axis")
    if which is Sandwich.SIGN:
        a_k = _aux_bivector(z.dim, k)
        return dense_product(dense_product(dense_reverse(a_k), z), a_k)
    prod = DenseMultivector.blade(z.dim, 0)
    for j in range(k):
        prod = dense_product(prod, _aux_bivector(z.dim, j))
    b_k = DenseMultivector.blade(z.dim, 1 << k)
    return dense_product(dense_product(dense_product(b_k, dense_reverse(prod)), z), prod)


# -- tensor-product side --------------------------------------------------


@dataclass
class StateVector:
    """Amplitudes of ``|A_1 ... A_n>``, ``A_1`` being the most significant bit."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.amplitudes.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got {self.amplitudes.shape}")

    @classmethod
    def basis(cls, n: int, index: int = 0) -> StateVector:
        amp = np.zeros(1 << n, dtype=complex)
        amp[index] = 1.0
        return cls(n, amp)

    def max_diff(self, other: StateVector) -> float:
        return float(np.max(np.abs(self.amplitudes - other.amplitudes)))


def _basis_index(mask: int, n: int) -> int:
    idx = 0
    for k in range(1, n + 1):
        idx = (idx << 1) | (mask >> k & 1)
    return idx


def _basis_mask(index: int, n: int) -> int:
    mask = 0
    for k in range(1, n + 1):
        if index >> (n - k) & 1:
            mask |= 1 << k
    return mask


def correspondence(z: Multivector) -> StateVector:
    """Map ``x c_{0A} + y c_{1A}`` to amplitude ``x + iy`` on ``|A>``."""
    if z.algebra.aux and any(m >> z.n + 1 & 1 for m, _ in z.items()):
        raise ConfigurationError("auxiliary axis has no quantum counterpart")
    amp = np.zeros(1 << z.n, dtype=complex)
    for m, c in z.items():
        idx = _basis_index(m, z.n)
        if m & 1:
            amp[idx] += 1j * c
        else:
            amp[idx] += c
    return StateVector(z.n, amp)


def inverse_correspondence(s: StateVector) -> Multivector:
    algebra = Algebra(s.n, complex=True)
    terms: dict[int, float] = {}
    for idx, a in enumerate(s.amplitudes):
        mask = _basis_mask(idx, s.n)
        if a.real != 0.0:
            terms[mask] = float(a.real)
        if a.imag != 0.0:
            terms[mask | 1] = float(a.imag)
    return Multivector(algebra, terms)


_S2 = 1 / math.sqrt(2)
_MATRICES = {
    GateKind.H: np.array([[_S2, _S2], [_S2, -_S2]], dtype=complex),
    GateKind.X: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.T: np.array([[1, 0], [0, np.exp(1j * math.pi / 4)]], dtype=complex),
    GateKind.RESET: np.array([[1, 1], [0, 0]], dtype=complex),
    GateKind.SELECT: np.array([[0, 0], [0, 1]], dtype=complex),
}


def _apply_1q(psi: np.ndarray, matrix: np.ndarray, target: int, controls: tuple[int, ...] = ()) -> np.ndarray:
    psi = psi.copy()
    index: list = [slice(None)] * psi.ndim
    for c in controls:
        index[c] = 1
    sub = psi[tuple(index)]
    axis = target - sum(c < target for c in controls)
    moved = np.tensordot(matrix, np.moveaxis(sub, axis, 0), axes=([1], [0]))
    psi[tuple(index)] = np.moveaxis(moved, 0, axis)
    return psi


def sv_apply(s: StateVector, g: GateOp) -> StateVector:
    """Standard matrix action of ``g`` (qubit ``k`` is tensor axis ``k - 1``)."""
    g.check_width(s.n)
    psi = s.amplitudes.reshape([2] * s.n)
    q = [k - 1 for k in g.bits]
    kind = g.kind
    if kind in _MATRICES:
        psi = _apply_1q(psi, _MATRICES[kind], q[0])
    elif kind is GateKind.PHASE:
        psi = _apply_1q(psi, np.array([[1, 0], [0, np.exp(1j * g.angle)]]), q[0])
    elif kind is GateKind.CNOT:
        psi = _apply_1q(psi, _MATRICES[GateKind.X], q[1], (q[0],))
    elif kind is GateKind.TOFFOLI:
        psi = _apply_1q(psi, _MATRICES[GateKind.X], q[2], (q[0], q[1]))
    elif kind is GateKind.GLOBAL_I:
        psi = 1j * psi
    elif kind is GateKind.GLOBAL_PHASE:
        psi = np.exp(1j * g.angle) * psi
    else:  # pragma: no cover
        raise ValueError(f"unhandled gate {kind}")
    return StateVector(s.n, psi.reshape(-1))


def sv_run(s: StateVector, ops) -> StateVector:
    for g in ops:
        s = sv_apply(s, g)
    return s
