"""Hand-built webs: rotations come from straight-line coordinates."""

import math

from kreweras.web import BLACK, WHITE, Web


def web_from_positions(pos, colors, edges, radius):
    """``pos``/``colors`` are indexed by vertex; vertices at ``radius`` are boundary."""
    tails = []
    for u, v in edges:
        tails += [u, v]
    rotation = []
    for v in range(len(pos)):
        darts = [d for d in range(len(tails)) if tails[d] == v]
        x0, y0 = pos[v]

        def angle(d):
            x, y = pos[tails[d ^ 1]]
            return math.atan2(y - y0, x - x0)

        rotation.append(tuple(sorted(darts, key=angle)))
    bnd = [v for v in range(len(pos)) if abs(math.hypot(*pos[v]) - radius) < 1e-9]
    bnd.sort(key=lambda v: math.atan2(pos[v][1], pos[v][0]) % (2 * math.pi))
    return Web(tuple(colors), tuple(bnd), tuple(tails), tuple(rotation))


def polygon_web(k):
    """A 2k-gon of alternating colours with a pendant tree on every vertex."""
    R = 10.0
    pos, colors, edges = [], [], []

    def add(p, c):
        pos.append(p)
        colors.append(c)
        return len(pos) - 1

    def polar(r, deg):
        t = math.radians(deg)
        return (r * math.cos(t), r * math.sin(t))

    ring = []
    for i in range(2 * k):
        ring.append(add(polar(2.0, i * 180 / k), WHITE if i % 2 == 0 else BLACK))
    for i in range(2 * k):
        edges.append((ring[i], ring[(i + 1) % (2 * k)]))
    for i, v in enumerate(ring):
        deg = i * 180 / k
        if colors[v] == BLACK:
            edges.append((v, add(polar(R, deg), WHITE)))
        else:
            kb = add(polar(5.0, deg), BLACK)
            edges.append((v, kb))
            spread = 60 / k
            edges.append((kb, add(polar(R, deg - spread), WHITE)))
            edges.append((kb, add(polar(R, deg + spread), WHITE)))
    return web_from_positions(pos, colors, edges, R)
