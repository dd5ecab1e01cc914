"""Line-oriented circuit files (``.gac``).

::

    # three Hadamards
    circuit n=3 complex
    h 1
    phase 2 pi/4
    cnot 1 3

One statement per line, ``#`` starts a comment, blank lines are ignored. Bit
indices are 1-based data positions. Angles are radians, written as decimal
floats or as ``pi``, ``pi/<int>`` with an optional sign.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .gates import GateKind, GateOp

__all__ = ["Circuit", "ParseError", "parse_circuit", "print_circuit"]

_MNEMONICS = {k.value: k for k in GateKind}
_PI_LITERAL = re.compile(r"([+-]?)pi(?:/(\d+))?$")
_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class Circuit:
    width: int
    complex: bool = False
    ops: tuple[GateOp, ...] = ()
    spans: tuple[tuple[int, int], ...] = field(default=(), compare=False)


class ParseError(ValueError):
    """Syntax or validation error at a 1-based ``line:column``."""

    def __init__(self, line: int, column: int, message: str, token: str = ""):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message
        self.token = token


def _tokens(line: str) -> list[tuple[int, str]]:
    code = line.split("#", 1)[0]
    return [(m.start() + 1, m.group()) for m in _TOKEN.finditer(code)]


def _parse_angle(text: str) -> float:
    m = _PI_LITERAL.match(text)
    if m:
        div = int(m.group(2)) if m.group(2) else 1
        if div == 0:
            raise ValueError("division by zero")
        value = math.pi / div
        return -value if m.group(1) == "-" else value
    value = float(text)
    if not math.isfinite(value):
        raise ValueError("angle must be finite")
    return value


def _parse_header(lineno: int, toks: list[tuple[int, str]]) -> tuple[int, bool]:
    col, _ = toks[0]
    if len(toks) < 2:
        raise ParseError(lineno, col, "header needs 'n=<int>'", "circuit")
    ncol, ntok = toks[1]
    if not re.fullmatch(r"n=\d+", ntok) or int(ntok[2:]) < 1:
        raise ParseError(lineno, ncol, f"expected 'n=<positive int>', got {ntok!r}", ntok)
    complex_flag = False
    for c, tok in toks[2:]:
        if tok != "complex" or complex_flag:
            raise ParseError(lineno, c, f"unexpected header token {tok!r}", tok)
        complex_flag = True
    return int(ntok[2:]), complex_flag


def parse_circuit(text: str) -> Circuit:
    """Parse circuit source, raising :class:`ParseError` on the first problem."""
    width: int | None = None
    complex_flag = False
    ops: list[GateOp] = []
    spans: list[tuple[int, int]] = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks:
            continue
        col, word = toks[0]
        if word == "circuit":
            if width is not None:
                raise ParseError(lineno, col, "duplicate circuit header", word)
            width, complex_flag = _parse_header(lineno, toks)
            continue
        if width is None:
            raise ParseError(lineno, col, "missing 'circuit n=<int>' header before first gate", word)
        kind = _MNEMONICS.get(word)
        if kind is None:
            raise ParseError(lineno, col, f"unknown mnemonic {word!r}", word)
        if kind.needs_complex and not complex_flag:
            raise ParseError(lineno, col, f"{word!r} needs a 'complex' circuit header", word)

        args = toks[1:]
        expected = kind.arity + int(kind.has_angle)
        if len(args) < expected:
            raise ParseError(
                lineno, col, f"{word!r} takes {expected} argument(s), got {len(args)}", word
            )
        if len(args) > expected:
            acol, atok = args[expected]
            raise ParseError(
                lineno, acol, f"{word!r} takes {expected} argument(s), got {len(args)}", atok
            )

        bits: list[int] = []
        for acol, atok in args[: kind.arity]:
            if not atok.isdigit():
                raise ParseError(lineno, acol, f"expected a bit index, got {atok!r}", atok)
            k = int(atok)
            if not 1 <= k <= width:
                raise ParseError(lineno, acol, f"bit index {k} out of range 1..{width}", atok)
            if k in bits:
                raise ParseError(lineno, acol, f"bit index {k} repeated", atok)
            bits.append(k)

        angle = None
        if kind.has_angle:
            acol, atok = args[-1]
            try:
                angle = _parse_angle(atok)
            except ValueError:
                raise ParseError(lineno, acol, f"bad angle {atok!r}", atok) from None

        ops.append(GateOp(kind, tuple(bits), angle))
        spans.append((lineno, col))

    if width is None:
        raise ParseError(1, 1, "missing 'circuit n=<int>' header")
    return Circuit(width, complex_flag, tuple(ops), tuple(spans))


def print_circuit(circuit: Circuit) -> str:
    """Canonical rendering; angles keep 17 significant digits."""
    lines = [f"circuit n={circuit.width}" + (" complex" if circuit.complex else "")]
    for op in circuit.ops:
        parts = [op.kind.value, *map(str, op.bits)]
        if op.angle is not None:
            parts.append(format(op.angle, ".17g"))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
