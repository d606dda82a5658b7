"""Kreweras bump diagrams and their trip permutations.

Arc (i, j) is drawn as the upper semicircle with centre (i + j)/2 and radius
(j - i)/2.  Crossing points are exact: ``x`` is a :class:`~fractions.Fraction`
and the height is kept squared.  Each semicircle is x-monotone, so the
crossings met along an arc are ordered by ``x``; the crossing of the two arcs
leaving a common opener sits at the opener itself and comes first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from . import perm
from .errors import IndexOutOfRange, InvalidReconstruction, TripError
from .words import A, B, C, negate, validate

INTERIOR = "interior"
BOUNDARY = "boundary"


@dataclass(frozen=True, order=True)
class Arc:
    opener: int
    closer: int
    color: str  # "B" (blue, solid) or "C" (crimson, dashed)

    def __post_init__(self):
        if not self.opener < self.closer:
            raise ValueError(f"arc needs opener < closer, got {self.opener}, {self.closer}")

    @property
    def center(self) -> Fraction:
        return Fraction(self.opener + self.closer, 2)

    @property
    def radius(self) -> Fraction:
        return Fraction(self.closer - self.opener, 2)

    def endpoints(self):
        return (self.opener, self.closer)


@dataclass(frozen=True)
class Crossing:
    """Two arcs (a, b), (c, d) with a <= c < b < d; ``outer`` is (a, b)."""

    outer: Arc
    inner: Arc
    kind: str
    x: Fraction
    y2: Fraction

    @property
    def arcs(self):
        return (self.outer, self.inner)


@dataclass(frozen=True)
class TripData:
    sigma: tuple[int, ...]
    epsilon: tuple[str, ...]

    def __iter__(self):
        return iter((self.sigma, self.epsilon))


@dataclass(frozen=True)
class BumpDiagram:
    word: str
    blue: tuple[Arc, ...]
    crimson: tuple[Arc, ...]
    crossings: tuple[Crossing, ...]
    per_arc_order: dict = field(compare=False, repr=False)
    _index: dict = field(compare=False, repr=False)
    _near: dict = field(compare=False, repr=False)
    _closing: dict = field(compare=False, repr=False)

    @property
    def arcs(self) -> tuple[Arc, ...]:
        return tuple(sorted(self.blue + self.crimson))

    def interior_crossings(self):
        return [x for x in self.crossings if x.kind == INTERIOR]

    def boundary_crossings(self):
        return [x for x in self.crossings if x.kind == BOUNDARY]


def _matching(w: str, eps: str) -> tuple[Arc, ...]:
    stack = []
    arcs = []
    for k, x in enumerate(w, start=1):
        if x == A:
            stack.append(k)
        elif x == eps:
            arcs.append(Arc(stack.pop(), k, eps))
    return tuple(sorted(arcs))


def matchings(w: str) -> tuple[tuple[Arc, ...], tuple[Arc, ...]]:
    """The blue (A-B) and crimson (A-C) noncrossing matchings of ``w``."""
    return _matching(w, B), _matching(w, C)


def forms_crossing(p: Arc, q: Arc) -> bool:
    (a, b), (c, d) = sorted([p.endpoints(), q.endpoints()])
    return a <= c < b < d


def is_noncrossing_matching(arcs, support) -> bool:
    used = [i for arc in arcs for i in arc.endpoints()]
    if sorted(used) != sorted(support):
        return False
    return not any(
        forms_crossing(p, q) for k, p in enumerate(arcs) for q in arcs[k + 1 :]
    )


def crossing_point(p: Arc, q: Arc) -> tuple[Fraction, Fraction]:
    """Exact (x, y^2) of the intersection of two crossing semicircles."""
    if p.opener == q.opener:
        return Fraction(p.opener), Fraction(0)
    p1, p2 = p.center, q.center
    r1, r2 = p.radius, q.radius
    x = (p1 + p2) / 2 + (r1 * r1 - r2 * r2) / (2 * (p2 - p1))
    y2 = r1 * r1 - (x - p1) ** 2
    return x, y2


def _make_crossing(p: Arc, q: Arc) -> Crossing:
    outer, inner = sorted([p, q], key=lambda arc: arc.endpoints())
    kind = BOUNDARY if outer.opener == inner.opener else INTERIOR
    x, y2 = crossing_point(outer, inner)
    if kind == INTERIOR:
        # geometry sanity: a genuine interior intersection of both semicircles
        assert y2 > 0 and inner.opener < x < outer.closer, (outer, inner, x, y2)
    return Crossing(outer, inner, kind, x, y2)


def bump_diagram(w: str) -> BumpDiagram:
    blue, crimson = matchings(w)
    crossings = []
    for p, q in product(blue, crimson):
        if forms_crossing(p, q):
            crossings.append(_make_crossing(p, q))
    crossings.sort(key=lambda x: (x.outer.endpoints(), x.inner.endpoints()))

    per_arc = {arc: [] for arc in blue + crimson}
    for x in crossings:
        per_arc[x.outer].append(x)
        per_arc[x.inner].append(x)
    index = {}
    for arc, lst in per_arc.items():
        lst.sort(key=lambda x: (x.kind != BOUNDARY, x.x))
        xs = [x.x for x in lst]
        if len(set(xs)) != len(xs):
            raise AssertionError(f"tied crossings along {arc}")
        per_arc[arc] = tuple(lst)
        for k, x in enumerate(lst):
            index[arc, x] = k

    near = {}
    closing = {}
    for arc in blue + crimson:
        closing[arc.closer] = arc
        if arc.opener not in near or arc.closer < near[arc.opener].closer:
            near[arc.opener] = arc
    return BumpDiagram(w, blue, crimson, tuple(crossings), per_arc, index, near, closing)


def near_arc(d: BumpDiagram, opener: int) -> Arc:
    return d._near[opener]


def far_arc(d: BumpDiagram, opener: int) -> Arc:
    n = d._near[opener]
    for arc in d.blue + d.crimson:
        if arc.opener == opener and arc != n:
            return arc
    raise KeyError(opener)


def trip(d: BumpDiagram, i: int) -> int:
    """Terminal vertex of the trip starting at ``i`` under the rules of the road."""
    m = len(d.word)
    if not 1 <= i <= m:
        raise IndexOutOfRange(f"trip start {i} outside 1..{m}")
    if d.word[i - 1] == A:
        arc, to_closer = d._near[i], True
        pos = 0  # the boundary crossing at the opener is already behind us
    else:
        arc, to_closer = d._closing[i], False
        pos = len(d.per_arc_order[arc])
    seen = set()
    while True:
        seq = d.per_arc_order[arc]
        nxt = pos + 1 if to_closer else pos - 1
        if not 0 <= nxt < len(seq):
            return arc.closer if to_closer else arc.opener
        state = (arc, to_closer, nxt)
        if state in seen:
            raise TripError(f"trip from {i} revisited {state}")
        seen.add(state)
        x = seq[nxt]
        if arc == x.outer:
            if to_closer:  # from a: straight on to b
                new_arc, new_to_closer = x.outer, True
            else:  # from b: right turn towards d
                new_arc, new_to_closer = x.inner, True
        else:
            if to_closer:  # from c: left turn towards a
                new_arc, new_to_closer = x.outer, False
            else:  # from d: straight on to c
                new_arc, new_to_closer = x.inner, False
        arc, to_closer = new_arc, new_to_closer
        pos = d._index[arc, x]


def epsilon_from_sigma(w: str, sigma) -> tuple[str, ...]:
    out = []
    for i in range(1, len(w) + 1):
        j = sigma[i - 1]
        out.append(w[j - 1] if w[j - 1] != A else w[sigma[j - 1] - 1])
    return tuple(out)


def trip_permutation(w: str) -> TripData:
    d = bump_diagram(w)
    sigma = tuple(trip(d, i) for i in range(1, len(w) + 1))
    return TripData(sigma, epsilon_from_sigma(w, sigma))


def word_from_sigma_epsilon(sigma, epsilon) -> str:
    """Rebuild w: A where sigma^-1(i) > i, else epsilon(sigma^-1(i))."""
    m = len(sigma)
    if len(epsilon) != m or not perm.is_permutation(sigma):
        raise InvalidReconstruction("sigma must be a permutation of 1..m and epsilon of length m")
    if perm.fixed_points(sigma):
        raise InvalidReconstruction(f"sigma has fixed points {perm.fixed_points(sigma)}")
    inv = perm.inverse(sigma)
    letters = []
    for i in range(1, m + 1):
        j = inv[i - 1]
        letters.append(A if j > i else epsilon[j - 1])
    try:
        return validate(letters)
    except ValueError as exc:
        raise InvalidReconstruction(f"reconstructed {''.join(letters)!r}: {exc}") from exc


def shift_epsilon(epsilon) -> tuple[str, ...]:
    """[e(2), ..., e(m), -e(1)]."""
    if not epsilon:
        return ()
    return tuple(epsilon[1:]) + (negate(epsilon[0]),)


def reverse_negate_epsilon(epsilon) -> tuple[str, ...]:
    return tuple(negate(e) for e in reversed(epsilon))


def evac_from_sigma(w: str, sigma) -> str:
    """(w_{sigma(3n)}, ..., w_{sigma(1)})."""
    return "".join(w[j - 1] for j in reversed(sigma))


def _fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def to_dict(d: BumpDiagram) -> dict:
    arcs = list(d.arcs)
    pos = {arc: k for k, arc in enumerate(arcs)}
    return {
        "n": len(d.word) // 3,
        "word": d.word,
        "arcs": [[arc.opener, arc.closer, arc.color] for arc in arcs],
        "crossings": [
            {
                "arcs": [pos[x.outer], pos[x.inner]],
                "kind": x.kind,
                "x": _fraction_str(x.x),
                "y2": _fraction_str(x.y2),
            }
            for x in d.crossings
        ],
        "per_arc_order": [
            [d.crossings.index(x) for x in d.per_arc_order[arc]] for arc in arcs
        ],
    }
