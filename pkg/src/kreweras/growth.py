"""Decorated growth diagrams of Kreweras words.

Points are ``(x, y)`` with ``-y - 3n <= x <= -y``, each labelled by an order
ideal ``(a, b, c)`` of counts.  The square in position ``(x, y)`` has corners
``(x, y)``, ``(x+1, y)``, ``(x, y+1)``, ``(x+1, y+1)``.  Row ``i`` is the set
of squares ``(x, -i)`` and column ``j`` the squares ``(j - 3n - 1, y)``.
Row 0 of points is the chain of the word; each later row is swept from the
one above with :func:`local_rule`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .bump import TripData
from .errors import MalformedCell
from .words import A, B, C, LETTERS, validate


class IdealTriple(NamedTuple):
    a: int
    b: int
    c: int

    def in_range(self, n: int) -> bool:
        return 0 <= self.b <= self.a <= n and 0 <= self.c <= self.a

    def plus(self, letter: str) -> "IdealTriple":
        a, b, c = self
        if letter == A:
            return IdealTriple(a + 1, b, c)
        if letter == B:
            return IdealTriple(a, b + 1, c)
        return IdealTriple(a, b, c + 1)

    def code(self) -> str:
        return f"{self.a}{self.b}{self.c}"


EMPTY = IdealTriple(0, 0, 0)


def step_letter(lo, hi) -> str:
    """The letter x with hi = lo + e_x, or MalformedCell."""
    diff = tuple(h - l for h, l in zip(hi, lo))
    for letter, unit in zip(LETTERS, ((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        if diff == unit:
            return letter
    raise MalformedCell(f"{tuple(lo)} -> {tuple(hi)} is not a unit step")


def local_rule(I, up, diag, n: int):
    """Label of the lower-right corner, plus the fill letter or None.

    ``I`` is the lower-left corner, ``up = I + e_i`` the upper-left and
    ``diag = up + e_j`` the upper-right.
    """
    I, up, diag = IdealTriple(*I), IdealTriple(*up), IdealTriple(*diag)
    step_letter(I, up)
    j = step_letter(up, diag)
    for t in (I, up, diag):
        if not t.in_range(n):
            raise MalformedCell(f"{tuple(t)} is not an ideal for n={n}")
    cand = I.plus(j)
    if cand.in_range(n):
        return cand, None
    return up, j


def chain(w: str) -> list[IdealTriple]:
    out = [EMPTY]
    for x in w:
        out.append(out[-1].plus(x))
    return out


def word_of_chain(ch) -> str:
    return "".join(step_letter(lo, hi) for lo, hi in zip(ch, ch[1:]))


@dataclass
class GrowthWindow:
    """Rows 0..k of points of the decorated growth diagram of ``word``."""

    word: str
    n: int
    k: int
    labels: dict = field(repr=False)
    fills: dict = field(repr=False)

    @property
    def size(self) -> int:
        return 3 * self.n

    def label(self, x: int, y: int) -> IdealTriple:
        return self.labels[x, y]

    def row_points(self, i: int) -> list[IdealTriple]:
        return [self.labels[x, -i] for x in range(i - self.size, i + 1)]

    def row_word(self, i: int) -> str:
        return word_of_chain(self.row_points(i))

    def column_index(self, x: int) -> int:
        return x + self.size + 1

    def row_fill(self, i: int) -> tuple[int, str]:
        """(column, letter) of the unique filled square in row i >= 1."""
        found = [(x, e) for (x, y), e in self.fills.items() if y == -i]
        if len(found) != 1:
            raise AssertionError(f"row {i} has {len(found)} filled squares")
        x, e = found[0]
        return self.column_index(x), e

    def column_complete(self, j: int) -> bool:
        return 1 <= j - self.size + 1 and j - 1 <= self.k

    def column_fill(self, j: int) -> tuple[int, str]:
        """(row, letter) of the unique filled square in column j."""
        if not self.column_complete(j):
            raise ValueError(f"column {j} is not complete in a window of {self.k} rows")
        x = j - self.size - 1
        found = [(-y, e) for (xx, y), e in self.fills.items() if xx == x]
        if len(found) != 1:
            raise AssertionError(f"column {j} has {len(found)} filled squares")
        return found[0]

    def column_word(self, x: int, y_lo: int, y_hi: int) -> str:
        return word_of_chain([self.labels[x, y] for y in range(y_lo, y_hi + 1)])

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "word": self.word,
            "rows": self.k,
            "labels": [
                {"row": i, "x0": i - self.size, "points": [t.code() for t in self.row_points(i)]}
                for i in range(self.k + 1)
            ],
            "fills": [
                {"x": x, "y": y, "row": -y, "column": self.column_index(x), "letter": e}
                for (x, y), e in sorted(self.fills.items(), key=lambda kv: (-kv[0][1], kv[0][0]))
            ],
        }

    def to_text(self) -> str:
        """Rows of 3-digit triples, with each filled square's letter between its rows."""
        m = self.size
        width = 4
        lo = -m
        lines = []
        for i in range(self.k + 1):
            cells = [" " * width] * (self.k + m + 1)
            for x in range(i - m, i + 1):
                cells[x - lo] = self.labels[x, -i].code().ljust(width)
            lines.append(f"{-i:>4} | " + "".join(cells).rstrip())
            if i < self.k:
                marks = [" "] * ((self.k + m + 1) * width)
                for (x, y), e in self.fills.items():
                    if y == -(i + 1):
                        marks[(x - lo) * width + width // 2 + 1] = e
                lines.append("     | " + "".join(marks).rstrip())
        return "\n".join(lines)


def growth_window(w: str, k: int | None = None) -> GrowthWindow:
    """Sweep the local rule for rows 1..k (default 3n)."""
    w = validate(w)
    m = len(w)
    n = m // 3
    if k is None:
        k = m
    if k < 1:
        raise ValueError("growth window needs at least one row")
    full = IdealTriple(n, n, n)
    labels = {}
    fills = {}
    for pos, t in enumerate(chain(w)):
        labels[pos - m, 0] = t
    for i in range(1, k + 1):
        y = -i
        labels[i - m, y] = EMPTY
        for x in range(i - m, i - 1):
            out, fill = local_rule(labels[x, y], labels[x, y + 1], labels[x + 1, y + 1], n)
            labels[x + 1, y] = out
            if fill is not None:
                fills[x, y] = fill
        if m:
            step_letter(labels[i - 1, y], full)
        labels[i, y] = full
    return GrowthWindow(w, n, k, labels, fills)


def sigma_eps_from_growth(w: str) -> TripData:
    g = growth_window(w)
    m = g.size
    sigma, eps = [], []
    for i in range(1, m + 1):
        j, e = g.row_fill(i)
        sigma.append((j - 1) % m + 1)
        eps.append(e)
    return TripData(tuple(sigma), tuple(eps))


def evac_from_growth(w: str) -> str:
    """Read the chain up the column of points x = 0 from y = -3n to 0."""
    w = validate(w)
    if not w:
        return w
    g = growth_window(w)
    return g.column_word(0, -g.size, 0)
