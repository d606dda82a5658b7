"""Trivalent bipartite webs with rotation systems.

A :class:`Web` stores half-edges ("darts").  Edge ``e`` owns darts ``2e`` and
``2e + 1``; ``d ^ 1`` is the reverse of ``d``.  ``rotation[v]`` lists the
darts leaving ``v`` in counterclockwise order and ``boundary[i - 1]`` is the
vertex carrying boundary label ``i``.  Boundary labels run counterclockwise.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import product

from . import bump, perm
from .errors import MalformedEmbedding, MalformedWeb, NonTerminatingTrip, RecoveryMismatch
from .words import A, B, C, validate

WHITE = "white"
BLACK = "black"
AVOCADO = "avocado"
BLUE = "blue"
CRIMSON = "crimson"
LETTER_COLOR = {B: BLUE, C: CRIMSON}
COLOR_LETTER = {BLUE: B, CRIMSON: C}


@dataclass(frozen=True)
class Web:
    colors: tuple[str, ...]
    boundary: tuple[int, ...]
    tails: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return len(self.boundary)

    @property
    def num_vertices(self) -> int:
        return len(self.colors)

    @property
    def num_edges(self) -> int:
        return len(self.tails) // 2

    def head(self, d: int) -> int:
        return self.tails[d ^ 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(self.tails[2 * e], self.tails[2 * e + 1]) for e in range(self.num_edges)]

    def internal_vertices(self) -> list[int]:
        bset = set(self.boundary)
        return [v for v in range(self.num_vertices) if v not in bset]

    def census(self) -> Counter:
        """Internal vertex counts by color."""
        return Counter(self.colors[v] for v in self.internal_vertices())

    def label_of(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.boundary, start=1)}

    def next_ccw(self, d: int) -> int:
        rot = self.rotation[self.tails[d]]
        return rot[(rot.index(d) + 1) % len(rot)]

    def next_cw(self, d: int) -> int:
        rot = self.rotation[self.tails[d]]
        return rot[(rot.index(d) - 1) % len(rot)]


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[str, ...]  # indexed by edge

    def at(self, e: int) -> str:
        return self.colors[e]

    def is_proper(self, web: Web) -> bool:
        for v in range(web.num_vertices):
            seen = [self.colors[d >> 1] for d in web.rotation[v]]
            if len(set(seen)) != len(seen):
                return False
        return True


@dataclass(frozen=True)
class Face:
    walk: tuple[int, ...]
    sides: int
    kind: str  # "internal" or "outer"
    component: int


class _Builder:
    def __init__(self):
        self.colors: list[str] = []
        self.tails: list[int] = []
        self.edge_colors: list[str] = []

    def vertex(self, color: str) -> int:
        self.colors.append(color)
        return len(self.colors) - 1

    def edge(self, u: int, v: int, color: str) -> tuple[int, int]:
        d = len(self.tails)
        self.tails += [u, v]
        self.edge_colors.append(color)
        return d, d + 1


def web_from_word(w: str) -> tuple[Web, EdgeColoring]:
    """Break apart every crossing of the bump diagram of ``w``."""
    w = validate(w)
    if not w:
        raise ValueError("web_from_word needs a nonempty word")
    m = len(w)
    d = bump.bump_diagram(w)
    bld = _Builder()
    boundary = [bld.vertex(WHITE) for _ in range(m)]
    rot: dict[int, list[int]] = {}

    # one black vertex per opener: [to opener, near arc, far arc] counterclockwise
    opener_vertex = {}
    opener_avocado = {}
    for o in range(1, m + 1):
        if w[o - 1] == A:
            k = bld.vertex(BLACK)
            opener_vertex[o] = k
            dk, dv = bld.edge(k, boundary[o - 1], AVOCADO)
            opener_avocado[o] = dk
            rot[boundary[o - 1]] = [dv]

    # each interior crossing becomes white W (opener side) -- avocado -- black B
    cross_vertices = {}
    for x in d.interior_crossings():
        wv = bld.vertex(WHITE)
        bv = bld.vertex(BLACK)
        dw, db = bld.edge(wv, bv, AVOCADO)
        cross_vertices[x] = (wv, bv, dw, db)

    # darts leaving each vertex along an arc, keyed by (vertex, arc)
    toward_opener = {}
    toward_closer = {}
    for arc in d.arcs:
        color = LETTER_COLOR[arc.color]
        interior = [x for x in d.per_arc_order[arc] if x.kind == bump.INTERIOR]
        prev = opener_vertex[arc.opener]
        for x in interior:
            wv, bv, _, _ = cross_vertices[x]
            out, back = bld.edge(prev, wv, color)
            toward_closer[prev, arc] = out
            toward_opener[wv, arc] = back
            prev = bv
        out, back = bld.edge(prev, boundary[arc.closer - 1], color)
        toward_closer[prev, arc] = out
        rot[boundary[arc.closer - 1]] = [back]

    for o, k in opener_vertex.items():
        near = d._near[o]
        far = bump.far_arc(d, o)
        rot[k] = [opener_avocado[o], toward_closer[k, near], toward_closer[k, far]]
    for x, (wv, bv, dw, db) in cross_vertices.items():
        rot[wv] = [dw, toward_opener[wv, x.outer], toward_opener[wv, x.inner]]
        rot[bv] = [toward_closer[bv, x.inner], db, toward_closer[bv, x.outer]]

    web = Web(
        tuple(bld.colors),
        tuple(boundary),
        tuple(bld.tails),
        tuple(tuple(rot[v]) for v in range(len(bld.colors))),
    )
    return web, EdgeColoring(tuple(bld.edge_colors))


def word_from_coloring(web: Web, coloring: EdgeColoring) -> str:
    """Read letters off boundary edges: avocado A, blue B, crimson C."""
    letters = {AVOCADO: A, BLUE: B, CRIMSON: C}
    return "".join(letters[coloring.colors[web.rotation[v][0] >> 1]] for v in web.boundary)


def components(web: Web) -> list[list[int]]:
    """Connected components as vertex lists, ordered by smallest boundary label."""
    seen = [False] * web.num_vertices
    out = []
    for v0 in list(web.boundary) + list(range(web.num_vertices)):
        if seen[v0]:
            continue
        seen[v0] = True
        comp = [v0]
        stack = [v0]
        while stack:
            v = stack.pop()
            for dd in web.rotation[v]:
                u = web.head(dd)
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(comp)
    return out


def num_components(web: Web) -> int:
    return len(components(web))


def _check_structure(web: Web) -> None:
    nv = web.num_vertices
    if len(web.tails) % 2 or len(web.rotation) != nv:
        raise MalformedWeb("dart and rotation tables are inconsistent")
    if len(set(web.boundary)) != len(web.boundary):
        raise MalformedWeb("boundary vertices repeat")
    listed = sorted(dd for rot in web.rotation for dd in rot)
    if listed != list(range(len(web.tails))):
        raise MalformedWeb("every dart must appear once in a rotation")
    for v, rot in enumerate(web.rotation):
        for dd in rot:
            if web.tails[dd] != v:
                raise MalformedWeb(f"dart {dd} listed at {v} but leaves {web.tails[dd]}")
    bset = set(web.boundary)
    for v in range(nv):
        deg = len(web.rotation[v])
        if v in bset and deg != 1:
            raise MalformedWeb(f"boundary vertex {v} has degree {deg}")
        if v not in bset and deg != 3:
            raise MalformedWeb(f"internal vertex {v} has degree {deg}")
        if web.colors[v] not in (WHITE, BLACK):
            raise MalformedWeb(f"vertex {v} has color {web.colors[v]!r}")
    for u, v in web.edges():
        if web.colors[u] == web.colors[v]:
            raise MalformedWeb(f"edge {u}-{v} joins two {web.colors[u]} vertices")
    for comp in components(web):
        if not bset.intersection(comp):
            raise MalformedWeb("closed component without boundary vertices")


def _face_orbits(web: Web) -> list[list[int]]:
    seen = [False] * len(web.tails)
    orbits = []
    for d0 in range(len(web.tails)):
        if seen[d0]:
            continue
        orbit = []
        dd = d0
        while not seen[dd]:
            seen[dd] = True
            orbit.append(dd)
            dd = web.next_ccw(dd ^ 1)
        orbits.append(orbit)
    return orbits


def _noncrossing(blocks: list[set[int]]) -> bool:
    for p in blocks:
        for q in blocks:
            if p is q:
                continue
            for a, b in product(sorted(p), repeat=2):
                if a < b and any(a < x < b for x in q) and any(x < a or x > b for x in q):
                    return False
    return True


def faces(web: Web) -> list[Face]:
    """All faces; each component contributes one outer walk."""
    _check_structure(web)
    label = web.label_of()
    comps = components(web)
    comp_of = {}
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    out = []
    outer_seen = set()
    for orbit in _face_orbits(web):
        k = comp_of[web.tails[orbit[0]]]
        tips = [label[web.tails[dd]] for dd in orbit if web.tails[dd] in label]
        if tips:
            if k in outer_seen:
                raise MalformedEmbedding(f"boundary of component {k} is split across faces")
            outer_seen.add(k)
            start = tips.index(min(tips))
            if tips[start:] + tips[:start] != sorted(tips):
                raise MalformedEmbedding("boundary labels are not counterclockwise on the outer face")
            kind = "outer"
        else:
            kind = "internal"
        out.append(Face(tuple(orbit), len(orbit), kind, k))
    for k, comp in enumerate(comps):
        nv = len(comp)
        ne = sum(len(web.rotation[v]) for v in comp) // 2
        nf = sum(1 for f in out if f.component == k)
        if nv - ne + nf != 2:
            raise MalformedEmbedding(f"Euler check fails on component {k}: {nv}-{ne}+{nf}")
    blocks = [{label[v] for v in comp if v in label} for comp in comps]
    if not _noncrossing(blocks):
        raise MalformedEmbedding("components interleave around the boundary")
    return out


def validate_web(web: Web) -> Web:
    faces(web)
    return web


def internal_faces(web: Web) -> list[Face]:
    return [f for f in faces(web) if f.kind == "internal"]


def is_irreducible(web: Web) -> bool:
    return all(f.sides >= 6 for f in internal_faces(web))


def is_kreweras_web(web: Web) -> bool:
    if any(web.colors[v] != WHITE for v in web.boundary):
        return False
    return all(f.sides >= 6 and f.sides % 4 for f in internal_faces(web))


def trip_permutation_web(web: Web) -> tuple[int, ...]:
    """Turn right (next ccw) at black vertices, left (next cw) at white ones."""
    label = web.label_of()
    out = []
    for i, v in enumerate(web.boundary, start=1):
        dd = web.rotation[v][0]
        seen = set()
        while web.head(dd) not in label:
            if dd in seen:
                raise NonTerminatingTrip(f"trip from {i} cycles")
            seen.add(dd)
            back = dd ^ 1
            if web.colors[web.tails[back]] == BLACK:
                dd = web.next_ccw(back)
            else:
                dd = web.next_cw(back)
        out.append(label[web.head(dd)])
    return tuple(out)


def rotate_web(web: Web) -> Web:
    """Relabel boundary label i as i - 1, and 1 as 3n."""
    if not web.boundary:
        return web
    return Web(web.colors, web.boundary[1:] + web.boundary[:1], web.tails, web.rotation)


def flip_web(web: Web) -> Web:
    """Mirror the embedding and relabel i as 3n + 1 - i."""
    rotation = tuple(tuple(reversed(r)) for r in web.rotation)
    return Web(web.colors, tuple(reversed(web.boundary)), web.tails, rotation)


def canonical_traversal(web: Web):
    """Boundary-anchored breadth-first numbering.

    Returns ``(form, dart_key)`` where ``form`` is a byte string and
    ``dart_key[d] = (canonical vertex, position in anchored rotation)``.
    """
    label = web.label_of()
    new_id = {}
    anchor = {}
    order = []
    queue = deque()

    def visit(v, entry):
        new_id[v] = len(order)
        anchor[v] = entry
        order.append(v)
        queue.append(v)

    def anchored(v):
        rot = web.rotation[v]
        k = rot.index(anchor[v])
        return rot[k:] + rot[:k]

    for v0 in web.boundary:
        if v0 in new_id:
            continue
        visit(v0, web.rotation[v0][0])
        while queue:
            v = queue.popleft()
            for dd in anchored(v):
                u = web.head(dd)
                if u not in new_id:
                    visit(u, dd ^ 1)
    if len(order) != web.num_vertices:
        raise MalformedWeb("web has vertices unreachable from the boundary")

    dart_key = {}
    for v in order:
        for pos, dd in enumerate(anchored(v)):
            dart_key[dd] = (new_id[v], pos)
    parts = [str(web.size)]
    for v in order:
        cells = [web.colors[v][0], str(label.get(v, 0))]
        for dd in anchored(v):
            tgt, pos = dart_key[dd ^ 1]
            cells.append(f"{tgt}.{pos}")
        parts.append(",".join(cells))
    return ";".join(parts).encode("ascii"), dart_key


def canonical_form(web: Web) -> bytes:
    return canonical_traversal(web)[0]


def chain_cycles(sigma) -> tuple[set[int], list[list[int]]]:
    """A-positions and the cycles of the chain map on the other positions."""
    m = len(sigma)
    inv = perm.inverse(sigma)
    a_pos = {i for i in range(1, m + 1) if inv[i - 1] > i}

    def nxt(i):
        j = sigma[i - 1]
        return j if j not in a_pos else sigma[j - 1]

    seen = set()
    cycles = []
    for i in range(1, m + 1):
        if i in a_pos or i in seen:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j)
            j = nxt(j)
        cycles.append(cyc)
    return a_pos, cycles


def recover_words(web: Web) -> set[str]:
    """Every Kreweras word whose web is ``web``."""
    sigma = trip_permutation_web(web)
    target = canonical_form(web)
    a_pos, cycles = chain_cycles(sigma)
    found = set()
    for starts in product((B, C), repeat=len(cycles)):
        letters = [A] * len(sigma)
        for cyc, first in zip(cycles, starts):
            other = C if first == B else B
            for k, i in enumerate(cyc):
                letters[i - 1] = first if k % 2 == 0 else other
        cand = "".join(letters)
        try:
            validate(cand)
        except ValueError:
            continue
        if canonical_form(web_from_word(cand)[0]) == target:
            found.add(cand)
    expected = 2 ** num_components(web)
    if len(found) != expected:
        raise RecoveryMismatch(f"recovered {len(found)} words, expected {expected}")
    return found


def component_choices(web: Web, w: str) -> tuple[str, ...]:
    """Per component, the letter of the left-turning path from its smallest label.

    That path follows the far arc leaving the opener.
    """
    label = web.label_of()
    d = bump.bump_diagram(w)
    out = []
    for comp in components(web):
        first = min(label[v] for v in comp if v in label)
        out.append(bump.far_arc(d, first).color)
    return tuple(out)


def color_web(web: Web, choice) -> EdgeColoring:
    """The coloring of the recovered word whose components start with ``choice``."""
    choice = tuple(choice)
    if len(choice) != num_components(web):
        raise ValueError(f"need one letter per component, got {len(choice)}")
    _, key = canonical_traversal(web)
    for w in sorted(recover_words(web)):
        if component_choices(web, w) != choice:
            continue
        built, coloring = web_from_word(w)
        _, built_key = canonical_traversal(built)
        by_key = {k: dd for dd, k in built_key.items()}
        colors = [coloring.colors[by_key[key[2 * e]] >> 1] for e in range(web.num_edges)]
        return EdgeColoring(tuple(colors))
    raise RecoveryMismatch(f"no recovered word matches choice {choice}")


def to_dict(web: Web, coloring: EdgeColoring | None = None) -> dict:
    out = {
        "n": web.size // 3,
        "colors": list(web.colors),
        "boundary": list(web.boundary),
        "edges": [list(e) for e in web.edges()],
        "rotation": [[dd >> 1 for dd in r] for r in web.rotation],
    }
    if coloring is not None:
        out["edge_colors"] = list(coloring.colors)
    return out


def from_dict(data: dict) -> tuple[Web, EdgeColoring | None]:
    """Inverse of :func:`to_dict`; rotation lists give edge indices ccw."""
    try:
        colors = tuple(data["colors"])
        boundary = tuple(int(v) for v in data["boundary"])
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
        tails = []
        for u, v in edges:
            if u == v:
                raise MalformedWeb(f"loop at {u}")
            tails += [u, v]
        rotation = []
        for v, rot in enumerate(data["rotation"]):
            darts = []
            for e in rot:
                u, x = edges[e]
                if v not in (u, x):
                    raise MalformedWeb(f"edge {e} is not incident to vertex {v}")
                darts.append(2 * e if u == v else 2 * e + 1)
            rotation.append(tuple(darts))
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise MalformedWeb(f"bad web JSON: {exc}") from exc
    web = Web(colors, boundary, tuple(tails), tuple(rotation))
    validate_web(web)
    coloring = None
    if data.get("edge_colors") is not None:
        coloring = EdgeColoring(tuple(data["edge_colors"]))
    return web, coloring
