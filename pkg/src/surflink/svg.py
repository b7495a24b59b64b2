"""Deterministic SVG rendering of surface link diagrams.

Documentation output, never parsed back: the gluing polygon sits on a fixed
circle, crossings on an inner circle in index order, arcs run as quadratic
splines through their declared side-crossing points (spread along each side
in arc order), and under-strands get gaps at the crossings.  Symmetry
certificates are drawn as labeled chords through their fixed cells when the
certificate fixes any, else listed in the legend only.
"""

from __future__ import annotations

import math
from typing import Iterable

from .diagram import SurfaceLinkDiagram

SIZE = 600.0
CENTER = SIZE / 2.0
POLY_R = 260.0
CROSS_R = 120.0
GAP = 9.0


def _poly_points(side_count: int) -> list[tuple[float, float]]:
    pts = []
    for i in range(side_count):
        ang = 2 * math.pi * i / side_count - math.pi / 2
        pts.append((CENTER + POLY_R * math.cos(ang), CENTER + POLY_R * math.sin(ang)))
    return pts


def _crossing_point(index: int, total: int) -> tuple[float, float]:
    ang = 2 * math.pi * index / max(total, 1) - math.pi / 2
    return (CENTER + CROSS_R * math.cos(ang), CENTER + CROSS_R * math.sin(ang))


def _dart_anchor(diagram: SurfaceLinkDiagram, dart: int) -> tuple[float, float]:
    c = dart // 4
    x, y = _crossing_point(c, diagram.crossing_count)
    ang = 2 * math.pi * (dart % 4) / 4 + 0.6 + c
    r = 16.0
    return (x + r * math.cos(ang), y + r * math.sin(ang))


def render_svg(
    diagram: SurfaceLinkDiagram,
    certificates: Iterable = (),
    title: str = "",
) -> str:
    n = diagram.crossing_count
    poly = _poly_points(diagram.surface.side_count)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0f}" height="{SIZE:.0f}" '
        f'viewBox="0 0 {SIZE:.0f} {SIZE:.0f}">',
        f"<title>{title or 'surface link diagram'}</title>",
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    # gluing polygon with side labels
    points = " ".join(f"{x:.1f},{y:.1f}" for x, y in poly)
    parts.append(f'<polygon points="{points}" fill="none" stroke="#888" stroke-width="1.5"/>')
    k = diagram.surface.side_count
    for i in range(k):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % k]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        ox = CENTER + (mx - CENTER) * 1.07 - mx
        oy = CENTER + (my - CENTER) * 1.07 - my
        pair = diagram.surface.pair_index(i)
        parts.append(
            f'<text x="{mx + ox:.1f}" y="{my + oy:.1f}" font-size="13" fill="#555" '
            f'text-anchor="middle">{i} ({chr(97 + pair)})</text>'
        )
    # side-crossing waypoints per arc, spread along each side in arc order
    side_slots: dict[int, list[int]] = {i: [] for i in range(k)}
    arc_waypoints: dict[int, list[tuple[float, float]]] = {}
    for dart in diagram.arcs:
        word = diagram.arc_words.get(dart, ())
        pts = []
        for side, _sign in word:
            slot = len(side_slots[side])
            side_slots[side].append(dart)
            (x1, y1), (x2, y2) = poly[side], poly[(side + 1) % k]
            t = 0.2 + 0.6 * ((slot * 37) % 11) / 11.0
            pts.append((x1 + (x2 - x1) * t, y1 + (y2 - y1) * t))
        arc_waypoints[dart] = pts
    # arcs
    for dart in diagram.arcs:
        a = _dart_anchor(diagram, dart)
        b = _dart_anchor(diagram, diagram.alpha[dart])
        waypts = arc_waypoints[dart]
        path = [a] + waypts + [b]
        d_attr = f"M {path[0][0]:.1f} {path[0][1]:.1f} " + " ".join(
            f"L {x:.1f} {y:.1f}" for x, y in path[1:]
        )
        parts.append(
            f'<path d="{d_attr}" fill="none" stroke="#1a1a8c" stroke-width="2.2"/>'
        )
    # crossings: over-strand bar drawn on top with under gaps
    for c in range(n):
        x, y = _crossing_point(c, n)
        parts.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="{GAP:.1f}" fill="white"/>')
        over_slots = (0, 2) if diagram.over[c] == 0 else (1, 3)
        pts = [_dart_anchor(diagram, 4 * c + s) for s in over_slots]
        parts.append(
            f'<line x1="{pts[0][0]:.1f}" y1="{pts[0][1]:.1f}" x2="{pts[1][0]:.1f}" '
            f'y2="{pts[1][1]:.1f}" stroke="#1a1a8c" stroke-width="2.2"/>'
        )
        parts.append(
            f'<text x="{x + 11:.1f}" y="{y - 11:.1f}" font-size="11" fill="#a33">{c}</text>'
        )
    # certificate legend and chords
    y0 = 24.0
    for cert in certificates:
        label = getattr(cert, "label", str(cert))
        kind = getattr(cert, "kind", "")
        parts.append(
            f'<text x="12" y="{y0:.1f}" font-size="13" fill="#063">{label}: {kind}</text>'
        )
        fixed = getattr(cert, "fixed_sides", ())
        if fixed:
            ang = (hash(label) % 360) * math.pi / 180.0
            x1 = CENTER + POLY_R * math.cos(ang)
            y1 = CENTER + POLY_R * math.sin(ang)
            parts.append(
                f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{2 * CENTER - x1:.1f}" '
                f'y2="{2 * CENTER - y1:.1f}" stroke="#063" stroke-width="1" '
                'stroke-dasharray="6,4"/>'
            )
        y0 += 16.0
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
