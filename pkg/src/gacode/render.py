"""Bag-of-shapes drawings: one oriented colored polyline per blade.

Conventions (the source figures fix no coordinates, so these are ours):

* bit ``k`` draws a unit segment at angle ``90deg * (k - 1) / n`` from the
  horizontal, so neighbouring axes differ by a small tilt;
* axes come in pairs sharing a color, ``color = (k - 1) // 2`` modulo an
  8-color palette (the complex bit 0 wraps around to the last color);
* ``|coefficient|`` stretches the first segment only, a negative coefficient
  flips every arrowhead;
* the scalar part is written as a number instead of being drawn.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ._bits import set_bits
from .core import Multivector
from .errors import AlgebraError

__all__ = [
    "PALETTE",
    "MAX_RENDER_DIM",
    "Polyline",
    "Scene",
    "layout",
    "emit_svg",
    "render_svg",
]

PALETTE = (
    "#d62728",
    "#2ca02c",
    "#1f77b4",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
)
MAX_RENDER_DIM = 16

_PAD = 0.5
_LABEL_BAND = 1.0
_PX_PER_UNIT = 60
_STROKE = 0.06
_HEAD = 0.12


@dataclass(frozen=True)
class Polyline:
    mask: int
    points: tuple[tuple[float, float], ...]
    colors: tuple[int, ...]  # palette index per segment
    arrows: tuple[bool, ...]  # True: arrowhead points along the segment
    label: str | None = None


@dataclass(frozen=True)
class Scene:
    polylines: tuple[Polyline, ...]
    scalar_label: str
    width: float
    height: float
    bitstrings: tuple[str, ...] = field(default=(), compare=False)


def _fmt_coef(c: float) -> str:
    return f"{c:.6g}"


def axis_angle(k: int, n: int) -> float:
    return (math.pi / 2) * (k - 1) / n


def axis_color(k: int) -> int:
    return ((k - 1) // 2) % len(PALETTE)


def _trace(mask: int, coef: float, n: int) -> tuple[list[tuple[float, float]], list[int]]:
    x = y = 0.0
    pts = [(x, y)]
    colors = []
    for i, k in enumerate(set_bits(mask)):
        length = abs(coef) if i == 0 else 1.0
        th = axis_angle(k, n)
        x += length * math.cos(th)
        y += length * math.sin(th)
        pts.append((x, y))
        colors.append(axis_color(k))
    return pts, colors


def layout(m: Multivector) -> Scene:
    """Place every non-scalar term of ``m`` in its own grid cell.

    Points are in abstract units with y pointing up; the scalar label sits in
    a band above the grid.
    """
    n = m.n
    if n > MAX_RENDER_DIM:
        raise AlgebraError(f"cannot render n={n}; limit is {MAX_RENDER_DIM}")
    traces = [(mask, c, *_trace(mask, c, n)) for mask, c in m.items() if mask]

    boxes = []
    for _, _, pts, _ in traces:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        boxes.append((min(xs), min(ys), max(xs), max(ys)))
    cell_w = max([b[2] - b[0] for b in boxes] + [1.0]) + 2 * _PAD
    cell_h = max([b[3] - b[1] for b in boxes] + [1.0]) + 2 * _PAD
    cols = max(1, math.ceil(math.sqrt(len(traces))))
    rows = math.ceil(len(traces) / cols)

    polylines = []
    for i, ((mask, c, pts, colors), box) in enumerate(zip(traces, boxes)):
        row, col = divmod(i, cols)
        ox = col * cell_w + _PAD - box[0]
        # grid rows count downward from the label band
        oy = (rows - 1 - row) * cell_h + _PAD - box[1]
        placed = tuple((px + ox, py + oy) for px, py in pts)
        polylines.append(
            Polyline(
                mask=mask,
                points=placed,
                colors=tuple(colors),
                arrows=(c > 0,) * len(colors),
                label=_fmt_coef(c),
            )
        )

    return Scene(
        polylines=tuple(polylines),
        scalar_label=_fmt_coef(m.coef(0)),
        width=max(cols * cell_w, 2.0),
        height=rows * cell_h + _LABEL_BAND,
        bitstrings=tuple(m.algebra.bitstring(p.mask) for p in polylines),
    )


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _arrowhead(p: tuple[float, float], q: tuple[float, float], forward: bool) -> list[tuple[float, float]]:
    dx, dy = q[0] - p[0], q[1] - p[1]
    length = math.hypot(dx, dy) or 1.0
    ux, uy = dx / length, dy / length
    if not forward:
        ux, uy = -ux, -uy
    mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
    tip = (mx + _HEAD * ux, my + _HEAD * uy)
    bx, by = mx - _HEAD * ux, my - _HEAD * uy
    w = 0.7 * _HEAD
    return [tip, (bx - w * uy, by + w * ux), (bx + w * uy, by - w * ux)]


def emit_svg(scene: Scene) -> str:
    """Serialize a scene as an SVG 1.1 document with fixed 3-decimal floats."""
    h = scene.height

    def pt(p: tuple[float, float]) -> tuple[str, str]:
        return _f(p[0]), _f(h - p[1])

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(scene.width * _PX_PER_UNIT)}" height="{_f(h * _PX_PER_UNIT)}" '
        f'viewBox="0 0 {_f(scene.width)} {_f(h)}">',
        f'<text class="scalar" x="{_f(_PAD)}" y="{_f(_LABEL_BAND * 0.7)}" '
        f'font-family="sans-serif" font-size="0.5" fill="#000000">{scene.scalar_label}</text>',
    ]
    bits = scene.bitstrings or (None,) * len(scene.polylines)
    for poly, bitstring in zip(scene.polylines, bits):
        attr = f' data-comb="{bitstring}"' if bitstring is not None else ""
        out.append(f'<g class="blade"{attr}>')
        for i, color in enumerate(poly.colors):
            p, q = poly.points[i], poly.points[i + 1]
            stroke = PALETTE[color]
            (x1, y1), (x2, y2) = pt(p), pt(q)
            out.append(
                f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" '
                f'stroke-width="{_f(_STROKE)}" stroke-linecap="round"/>'
            )
            head = " ".join(",".join(pt(v)) for v in _arrowhead(p, q, poly.arrows[i]))
            out.append(f'<polygon points="{head}" fill="{stroke}"/>')
        if poly.label is not None:
            lx, _ = pt(poly.points[0])
            out.append(
                f'<text class="coef" x="{lx}" y="{_f(h - poly.points[0][1] + 0.35)}" '
                f'font-family="sans-serif" font-size="0.25" fill="#444444">{poly.label}</text>'
            )
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_svg(m: Multivector) -> str:
    return emit_svg(layout(m))
