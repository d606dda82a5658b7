"""Standalone SVG drawings of bump diagrams and webs."""

from __future__ import annotations

import math
import random
from xml.sax.saxutils import escape

from .bump import BumpDiagram
from .web import AVOCADO, BLACK, BLUE, CRIMSON, EdgeColoring, Web

STROKE = {BLUE: "#1f4fbf", CRIMSON: "#b0103a", AVOCADO: "#5d7a1f"}
UNIT = 48


def _svg(width: float, height: float, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def bump_svg(d: BumpDiagram) -> str:
    m = len(d.word)
    biggest = max((arc.closer - arc.opener for arc in d.arcs), default=1) / 2
    top = 20 + biggest * UNIT
    base = top + 10
    width = (m + 1) * UNIT
    height = base + 50

    def px(i):
        return i * UNIT

    body = [f'<line x1="{px(0.5)}" y1="{base}" x2="{px(m + 0.5)}" y2="{base}" stroke="#888"/>']
    for arc in d.arcs:
        r = (arc.closer - arc.opener) / 2 * UNIT
        style = f'stroke="{STROKE[BLUE]}"' if arc.color == "B" else f'stroke="{STROKE[CRIMSON]}" stroke-dasharray="7 4"'
        body.append(
            f'<path d="M {px(arc.opener)} {base} A {r:g} {r:g} 0 0 1 {px(arc.closer)} {base}" '
            f'fill="none" stroke-width="2" {style}/>'
        )
    for x in d.crossings:
        cx = float(x.x) * UNIT
        cy = base - math.sqrt(float(x.y2)) * UNIT
        body.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="3" fill="#333"/>')
    for i, letter in enumerate(d.word, start=1):
        body.append(f'<circle cx="{px(i)}" cy="{base}" r="4" fill="black"/>')
        body.append(
            f'<text x="{px(i)}" y="{base + 20}" text-anchor="middle" font-family="monospace" '
            f'font-size="14">{escape(letter)}</text>'
        )
        body.append(
            f'<text x="{px(i)}" y="{base + 36}" text-anchor="middle" font-family="monospace" '
            f'font-size="11" fill="#666">{i}</text>'
        )
    return _svg(width, height, body)


def web_layout(web: Web, seed: int = 0, radius: float = 200.0, rounds: int = 400):
    """Boundary on a circle, internal vertices at neighbour averages."""
    m = web.size
    rng = random.Random(seed)
    pos = {}
    for i, v in enumerate(web.boundary):
        theta = math.pi / 2 + 2 * math.pi * i / max(m, 1)
        pos[v] = (radius * math.cos(theta), -radius * math.sin(theta))
    fixed = set(web.boundary)
    inner = web.internal_vertices()
    for v in inner:
        pos[v] = (rng.uniform(-radius / 4, radius / 4), rng.uniform(-radius / 4, radius / 4))
    for _ in range(rounds):
        for v in inner:
            nbrs = [web.head(dd) for dd in web.rotation[v]]
            pos[v] = (
                sum(pos[u][0] for u in nbrs) / len(nbrs),
                sum(pos[u][1] for u in nbrs) / len(nbrs),
            )
    # tiny seeded jitter keeps coincident vertices apart
    for v in inner:
        if v not in fixed:
            x, y = pos[v]
            pos[v] = (x + rng.uniform(-1, 1), y + rng.uniform(-1, 1))
    return pos


def _zigzag(p, q, amplitude: float = 3.0, waves: int = 6) -> str:
    (x1, y1), (x2, y2) = p, q
    length = math.hypot(x2 - x1, y2 - y1) or 1.0
    nx, ny = -(y2 - y1) / length, (x2 - x1) / length
    pts = [(x1, y1)]
    steps = 2 * waves
    for k in range(1, steps):
        t = k / steps
        s = amplitude if k % 2 else -amplitude
        pts.append((x1 + t * (x2 - x1) + s * nx, y1 + t * (y2 - y1) + s * ny))
    pts.append((x2, y2))
    return " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)


def web_svg(web: Web, coloring: EdgeColoring | None = None, seed: int = 0) -> str:
    radius = 200.0
    margin = 40.0
    pos = web_layout(web, seed=seed, radius=radius)
    off = radius + margin

    def at(v):
        x, y = pos[v]
        return x + off, y + off

    body = [f'<circle cx="{off}" cy="{off}" r="{radius}" fill="none" stroke="#ccc"/>']
    for e, (u, v) in enumerate(web.edges()):
        p, q = at(u), at(v)
        color = coloring.colors[e] if coloring is not None else None
        if color == AVOCADO:
            body.append(
                f'<polyline points="{_zigzag(p, q)}" fill="none" stroke="{STROKE[AVOCADO]}" stroke-width="2"/>'
            )
            continue
        style = 'stroke="black"'
        if color == BLUE:
            style = f'stroke="{STROKE[BLUE]}"'
        elif color == CRIMSON:
            style = f'stroke="{STROKE[CRIMSON]}" stroke-dasharray="7 4"'
        body.append(
            f'<line x1="{p[0]:.2f}" y1="{p[1]:.2f}" x2="{q[0]:.2f}" y2="{q[1]:.2f}" stroke-width="2" {style}/>'
        )
    for v in range(web.num_vertices):
        x, y = at(v)
        fill = "black" if web.colors[v] == BLACK else "white"
        body.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="5" fill="{fill}" stroke="black" stroke-width="1.5"/>')
    for i, v in enumerate(web.boundary, start=1):
        x, y = pos[v]
        scale = (radius + 18) / radius
        body.append(
            f'<text x="{x * scale + off:.2f}" y="{y * scale + off + 4:.2f}" text-anchor="middle" '
            f'font-family="monospace" font-size="12">{i}</text>'
        )
    return _svg(2 * off, 2 * off, body)
