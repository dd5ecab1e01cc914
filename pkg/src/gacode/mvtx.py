"""Read and write the MVTX v1 multivector text format.

::

    mv n=3 complex=1 aux=0
    0.7071067811865476 0100
    -0.5 1001

Each term line holds a decimal coefficient and a bitstring with one character
per reserved position, leftmost being position 0 when ``complex=1`` and
position 1 otherwise.
"""

from __future__ import annotations

import re
from pathlib import Path

from .core import Algebra, Multivector
from .errors import AlgebraError

__all__ = ["MVTXError", "loads", "dumps", "load", "dump"]

_HEADER = re.compile(r"mv\s+n=(\d+)\s+complex=([01])\s+aux=([01])\s*$")


class MVTXError(AlgebraError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


def loads(text: str) -> Multivector:
    lines = text.splitlines()
    header_at = next((i for i, ln in enumerate(lines) if ln.strip()), None)
    if header_at is None:
        raise MVTXError(1, "missing 'mv n=<dim> complex=<0|1> aux=<0|1>' header")
    m = _HEADER.match(lines[header_at].strip())
    if m is None:
        raise MVTXError(header_at + 1, f"malformed header {lines[header_at].strip()!r}")
    try:
        algebra = Algebra(int(m.group(1)), m.group(2) == "1", m.group(3) == "1")
    except AlgebraError as exc:
        raise MVTXError(header_at + 1, str(exc)) from None

    width = len(algebra.positions)
    terms: dict[int, float] = {}
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(lines[header_at + 1 :], start=header_at + 2):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MVTXError(lineno, f"expected '<coefficient> <bitstring>', got {line!r}")
        coef_text, bits = parts
        try:
            coef = float(coef_text)
        except ValueError:
            raise MVTXError(lineno, f"bad coefficient {coef_text!r}") from None
        if len(bits) != width or set(bits) - {"0", "1"}:
            raise MVTXError(lineno, f"bitstring {bits!r} must be {width} characters of 0/1")
        if bits in seen:
            raise MVTXError(lineno, f"duplicate bitstring {bits} (first on line {seen[bits]})")
        seen[bits] = lineno
        terms[algebra.parse_bits(bits)] = coef
    return Multivector(algebra, terms)


def dumps(mv: Multivector) -> str:
    a = mv.algebra
    out = [f"mv n={a.n} complex={int(a.complex)} aux={int(a.aux)}"]
    out.extend(f"{c!r} {a.bitstring(m)}" for m, c in mv.items())
    return "\n".join(out) + "\n"


def load(path: str | Path) -> Multivector:
    return loads(Path(path).read_text(encoding="utf-8"))


def dump(mv: Multivector, path: str | Path) -> None:
    Path(path).write_text(dumps(mv), encoding="utf-8")
