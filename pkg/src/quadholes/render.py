"""Deterministic SVG drawing of a point set and its quads."""
from __future__ import annotations

from typing import Sequence

from .geom import Point, Quad
from .radial import bottommost

SIZE = 800
MARGIN = 20
PALETTE = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf")


def render_svg(points: Sequence[Point], quads: Sequence[Quad]) -> str:
    if not points:
        return f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}"/>\n'
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    x0, y0 = min(xs), min(ys)
    span = max(max(xs) - x0, max(ys) - y0, 1)
    scale = (SIZE - 2 * MARGIN) / span

    def at(i: int) -> str:
        x, y = points[i]
        # y grows upward in the input, downward in SVG
        return f"{MARGIN + (x - x0) * scale:.2f},{SIZE - MARGIN - (y - y0) * scale:.2f}"

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
           f'viewBox="0 0 {SIZE} {SIZE}">',
           f'<rect width="{SIZE}" height="{SIZE}" fill="white"/>']
    for k, q in enumerate(quads):
        color = PALETTE[k % len(PALETTE)]
        out.append(f'<polygon points="{" ".join(at(i) for i in q)}" fill="{color}" '
                   f'fill-opacity="0.35" stroke="{color}" stroke-width="1"/>')
    r = 3 if len(points) <= 200 else 1.5
    for i in range(len(points)):
        cx, cy = at(i).split(",")
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{r}" fill="black"/>')
    cx, cy = at(bottommost(points)).split(",")
    out.append(f'<circle cx="{cx}" cy="{cy}" r="{2 * r}" fill="none" stroke="red" stroke-width="2"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
