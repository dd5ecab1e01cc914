"""Bitmask helpers shared by the comb kernels.

Masks are plain Python ints; bit ``k`` set means generator ``b_k`` is present.
"""

from __future__ import annotations

import math
from typing import Iterator

__all__ = [
    "popcount",
    "set_bits",
    "reorder_sign",
    "reverse_sign",
    "div_sqrt2",
]


def popcount(x: int) -> int:
    return x.bit_count()


def set_bits(x: int) -> Iterator[int]:
    """Iterate over the indices of set bits of `x`, ascending."""
    k = 0
    while x:
        if x & 1:
            yield k
        x >>= 1
        k += 1


def reorder_sign(a: int, b: int) -> int:
    """Sign of ``c_a c_b`` relative to ``c_{a ^ b}``.

    Counts pairs (j in b, i in a) with j < i, i.e. the number of generators of
    the right factor that must hop over generators of the left factor.
    """
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def reverse_sign(mask: int) -> int:
    g = mask.bit_count()
    return -1 if (g * (g - 1) // 2) & 1 else 1


# 1/sqrt(2) as an unevaluated double-double (hi + lo).
_INV_SQRT2_HI = math.sqrt(0.5)
_INV_SQRT2_LO = -4.833646656726457e-17
_SPLITTER = 134217729.0  # 2**27 + 1


def _split(a: float) -> tuple[float, float]:
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


_H_HI, _H_LO = _split(_INV_SQRT2_HI)


def div_sqrt2(c: float) -> float:
    """Return ``c / sqrt(2)`` rounded once.

    The naive ``c * sqrt(0.5)`` drifts by an ulp after two steps, so repeated
    Hadamards would not land on ``2**(-n/2)``. An error-free product against a
    double-double constant keeps the result correctly rounded.
    """
    if not math.isfinite(c) or abs(c) > 1e300:
        return c * _INV_SQRT2_HI
    p = c * _INV_SQRT2_HI
    ch, cl = _split(c)
    err = ((ch * _H_HI - p) + ch * _H_LO + cl * _H_HI) + cl * _H_LO
    return p + (err + c * _INV_SQRT2_LO)
