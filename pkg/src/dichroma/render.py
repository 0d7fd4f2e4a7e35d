"""Straight-line SVG drawings of coloured plane digraphs."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .graph_core import Digraph, PlaneEmbedding

SIZE = 600
MARGIN = 40
RADIUS = 11
FILLS = {1: "#f4d35e", 2: "#3d5a80"}


def barycentric_layout(e: PlaneEmbedding, iterations: int = 200) -> dict[int, tuple[float, float]]:
    """Tutte-style drawing: outer face pinned on a regular polygon, the rest averaged.

    Interior positions are updated in place, in increasing vertex order, so
    the result is fully deterministic.
    """
    outer = e.faces[e.outer_face].boundary if e.m else tuple(e.vertices)
    centre = SIZE / 2
    r = SIZE / 2 - MARGIN
    pos = {}
    k = len(outer)
    for i, v in enumerate(outer):
        # start at the top and go clockwise around the pinned polygon
        angle = -math.pi / 2 + 2 * math.pi * i / max(k, 1)
        pos[v] = (centre + r * math.cos(angle), centre + r * math.sin(angle))
    free = [v for v in sorted(e.vertices) if v not in pos]
    for v in free:
        pos[v] = (centre, centre)
    adj = {v: sorted(e.adjacency[v]) for v in free}
    for _ in range(iterations):
        for v in free:
            if adj[v]:
                xs, ys = zip(*(pos[w] for w in adj[v]))
                pos[v] = (sum(xs) / len(xs), sum(ys) / len(ys))
    return pos


def render_svg(d: Digraph, e: PlaneEmbedding, colouring: dict[int, int] | None = None) -> str:
    """SVG text with one ``circle`` per vertex, classed ``colour-1`` / ``colour-2``."""
    pos = barycentric_layout(e)
    colouring = colouring or {}
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        "<defs>",
        '<marker id="arrow" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="7" markerHeight="7" orient="auto">',
        '<path d="M0,0 L10,5 L0,10 z" fill="#555"/>',
        "</marker>",
        "</defs>",
        "<style>",
        f".colour-1 {{ fill: {FILLS[1]}; }}",
        f".colour-2 {{ fill: {FILLS[2]}; }}",
        ".uncoloured { fill: #ffffff; }",
        "circle { stroke: #222; stroke-width: 1.5; }",
        "line { stroke: #555; stroke-width: 1.2; }",
        "text { font: 10px sans-serif; text-anchor: middle; dominant-baseline: central; }",
        "</style>",
    ]
    for u, v in sorted(d.arcs):
        (x1, y1), (x2, y2) = pos[u], pos[v]
        length = math.hypot(x2 - x1, y2 - y1) or 1.0
        # stop the arrow at the rim of the head's circle
        tx = x2 - (x2 - x1) * RADIUS / length
        ty = y2 - (y2 - y1) * RADIUS / length
        out.append(
            f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{tx:.2f}" y2="{ty:.2f}" marker-end="url(#arrow)"/>'
        )
    for v in sorted(d.vertices):
        x, y = pos[v]
        cls = f"colour-{colouring[v]}" if v in colouring else "uncoloured"
        label_fill = "#fff" if colouring.get(v) == 2 else "#000"
        out.append(f'<circle class="{cls}" cx="{x:.2f}" cy="{y:.2f}" r="{RADIUS}"/>')
        out.append(f'<text x="{x:.2f}" y="{y:.2f}" fill="{label_fill}">{escape(str(v))}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
