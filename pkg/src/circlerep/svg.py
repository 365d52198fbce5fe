"""Chord diagrams as standalone SVG 1.1 documents.

Endpoint i of a word of length L sits on the unit circle at angle 2*pi*i/L,
counter-clockwise from the positive x axis. Coordinates are scaled, rounded
to three decimals and written in a fixed order, so equal words give equal
bytes.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .words import CircularWord

RADIUS = 100.0
MARGIN = 30.0


def endpoint_angles(w: CircularWord) -> list[float]:
    L = len(w)
    return [2 * math.pi * i / L for i in range(L)]


def _point(angle: float, r: float) -> tuple[float, float]:
    # SVG y grows downwards
    return (round(r * math.cos(angle), 3) + 0.0, round(-r * math.sin(angle), 3) + 0.0)


def chord_segments(w: CircularWord) -> list[tuple[str, tuple[float, float], tuple[float, float]]]:
    """One (label, p, q) segment per label, in order of first appearance."""
    angles = endpoint_angles(w)
    pos = w.positions()
    return [
        (v, _point(angles[pos[v][0]], RADIUS), _point(angles[pos[v][1]], RADIUS))
        for v in w.ordered_symbols()
    ]


def _num(x: float) -> str:
    return f"{x:.3f}"


def render_svg(w: CircularWord) -> str:
    size = 2 * (RADIUS + MARGIN)
    c = RADIUS + MARGIN
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_num(size)}" height="{_num(size)}" '
        f'viewBox="{_num(-c)} {_num(-c)} {_num(size)} {_num(size)}">',
        f'<circle cx="0.000" cy="0.000" r="{_num(RADIUS)}" fill="none" stroke="#888888" stroke-width="1"/>',
    ]
    for v, (x1, y1), (x2, y2) in chord_segments(w):
        out.append(
            f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}" '
            f'stroke="#1f4e79" stroke-width="1.5"><title>{escape(v)}</title></line>'
        )
    for i, angle in enumerate(endpoint_angles(w)):
        x, y = _point(angle, RADIUS + MARGIN / 2)
        out.append(
            f'<text x="{_num(x)}" y="{_num(y)}" font-size="10" text-anchor="middle" '
            f'dominant-baseline="middle">{escape(w.tokens[i])}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def segments_cross(p: tuple[float, float], q: tuple[float, float], r: tuple[float, float], s: tuple[float, float]) -> bool:
    """Proper intersection of segments pq and rs (shared endpoints do not count)."""

    def orient(a, b, c) -> float:
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    eps = 1e-9
    d1, d2 = orient(p, q, r), orient(p, q, s)
    d3, d4 = orient(r, s, p), orient(r, s, q)
    return ((d1 > eps and d2 < -eps) or (d1 < -eps and d2 > eps)) and (
        (d3 > eps and d4 < -eps) or (d3 < -eps and d4 > eps)
    )
