"""Standalone SVG drawing of a mirror scenario and its solutions."""

from __future__ import annotations

from typing import Sequence
from xml.sax.saxutils import escape

from .mirror import Classification, MirrorScenario, ReflectionSolution

SIZE = 480
MARGIN = 40

_STYLE = {
    Classification.TRUE_REFLECTION: 'stroke="#c0392b" stroke-width="1.6" fill="none"',
    Classification.TANGENT_BISECTOR: 'stroke="#2e86c1" stroke-width="1.2" fill="none" stroke-dasharray="6,4"',
}


def _fmt(v: float) -> str:
    out = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if out in ("-0", "") else out


def render_svg(scenario: MirrorScenario, solutions: Sequence[ReflectionSolution]) -> str:
    """Circle, points ``A`` and ``B``, and for each solution ``I`` the path
    ``A -> I -> B`` plus the radius through ``I``.

    True reflections are drawn solid red, tangent-bisector solutions dashed
    blue.  Output depends only on the inputs.
    """
    cx, cy = float(scenario.center.x), float(scenario.center.y)
    rad = float(scenario.radius)
    ax, ay = float(scenario.A.x), float(scenario.A.y)
    bx, by = float(scenario.B.x), float(scenario.B.y)

    xs = [cx - rad, cx + rad, ax, bx]
    ys = [cy - rad, cy + rad, ay, by]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    k = (SIZE - 2 * MARGIN) / span
    x0, y1 = min(xs), max(ys)

    def tx(x: float) -> str:
        return _fmt(MARGIN + (x - x0) * k)

    def ty(y: float) -> str:
        # SVG y axis points down
        return _fmt(MARGIN + (y1 - y) * k)

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
        f'<circle cx="{tx(cx)}" cy="{ty(cy)}" r="{_fmt(rad * k)}" stroke="#000000" stroke-width="1.5" fill="none"/>',
        f'<circle cx="{tx(cx)}" cy="{ty(cy)}" r="2" fill="#000000"/>',
        f'<text x="{tx(cx)}" y="{ty(cy)}" dx="4" dy="12" font-size="12">O</text>',
    ]
    for n, sol in enumerate(solutions, start=1):
        ix, iy = float(sol.point.x), float(sol.point.y)
        style = _STYLE[sol.classification]
        lines.append(
            f'<g class="solution {escape(sol.classification.value)}">'
            f'<polyline points="{tx(ax)},{ty(ay)} {tx(ix)},{ty(iy)} {tx(bx)},{ty(by)}" {style}/>'
            f'<line x1="{tx(cx)}" y1="{ty(cy)}" x2="{tx(ix)}" y2="{ty(iy)}" stroke="#7f8c8d" '
            f'stroke-width="0.8" stroke-dasharray="2,3"/>'
            f'<circle cx="{tx(ix)}" cy="{ty(iy)}" r="3" fill="#000000"/>'
            f'<text x="{tx(ix)}" y="{ty(iy)}" dx="5" dy="-5" font-size="12">I{n}</text>'
            "</g>"
        )
    for label, (px, py) in (("A", (ax, ay)), ("B", (bx, by))):
        lines.append(f'<circle cx="{tx(px)}" cy="{ty(py)}" r="3.5" fill="#27ae60"/>')
        lines.append(f'<text x="{tx(px)}" y="{ty(py)}" dx="5" dy="14" font-size="13">{label}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
