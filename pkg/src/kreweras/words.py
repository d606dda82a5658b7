"""Kreweras words and the promotion/evacuation actions on them.

A word is a plain ``str`` over ``"ABC"``.  Every reported index is 1-based.
Operations other than :func:`validate` assume their input is already a
Kreweras word; validate untrusted input first.
"""

from __future__ import annotations

import json
import random
from functools import lru_cache
from typing import Iterator

from . import kernels
from .errors import (
    EmptyWord,
    IndexOutOfRange,
    InvalidLetter,
    NotBalanced,
    PrefixViolation,
)

A, B, C = "A", "B", "C"
LETTERS = (A, B, C)

_NEGATE = {B: C, C: B}
_SWAP_BC = str.maketrans("BC", "CB")


def negate(letter: str) -> str:
    """-B = C and -C = B; A has no negative."""
    try:
        return _NEGATE[letter]
    except KeyError:
        raise InvalidLetter(letter, None) from None


def validate(letters) -> str:
    """Return ``letters`` as a word string, or raise on the first defect.

    Prefix violations are reported before an unequal final count.
    """
    w = "".join(letters)
    a = b = c = 0
    for k, x in enumerate(w, start=1):
        if x == A:
            a += 1
        elif x == B:
            b += 1
        elif x == C:
            c += 1
        else:
            raise InvalidLetter(x, k)
        if b > a or c > a:
            raise PrefixViolation(k)
    if not a == b == c:
        raise NotBalanced((a, b, c))
    return w


def is_kreweras(w: str) -> bool:
    return kernels.is_kreweras(w)


def size(w: str) -> int:
    """The n of a word of length 3n."""
    return len(w) // 3


def iota(w: str) -> int:
    """Smallest prefix length with as many A's as B's, or as many A's as C's."""
    if not w:
        raise EmptyWord("iota")
    return kernels.iota(w)


def promote(w: str) -> str:
    if not w:
        raise EmptyWord("promote")
    return kernels.promote(w)


def promote_inverse(w: str) -> str:
    if not w:
        raise EmptyWord("promote_inverse")
    return kernels.promote_inverse(w)


def promote_power(w: str, k: int) -> str:
    """pro^k(w); negative ``k`` applies the inverse."""
    if k == 0:
        return w
    if not w:
        raise EmptyWord("promote")
    if k > 0:
        return kernels.promote_power(w, k)
    for _ in range(-k):
        w = kernels.promote_inverse(w)
    return w


def tau(w: str, i: int) -> str:
    """Swap positions i and i+1 when the result is still a Kreweras word."""
    if not 1 <= i <= len(w) - 1:
        raise IndexOutOfRange(f"tau index {i} outside 1..{len(w) - 1}")
    x, y = w[i - 1], w[i]
    if x == y:
        return w
    prefix = w[: i - 1]
    a = prefix.count(A)
    if y == B and prefix.count(B) >= a:
        return w
    if y == C and prefix.count(C) >= a:
        return w
    return w[: i - 1] + y + x + w[i + 1 :]


def promote_by_taus(w: str) -> str:
    """tau_{3n-1} o ... o tau_1, each tau applied through :func:`tau`."""
    for i in range(1, len(w)):
        w = tau(w, i)
    return w


def evacuate_by_taus(w: str) -> str:
    """Evacuation as the nested tau composition, one :func:`tau` at a time."""
    for k in range(len(w) - 1, 0, -1):
        for i in range(1, k + 1):
            w = tau(w, i)
    return w


def evacuate(w: str) -> str:
    return kernels.evacuate(w)


def dual_evacuate(w: str) -> str:
    return kernels.dual_evacuate(w)


def swap_bc(w: str) -> str:
    return w.translate(_SWAP_BC)


def is_connected(w: str) -> bool:
    """True iff no proper nonempty factor of ``w`` is itself a Kreweras word."""
    if not w:
        raise EmptyWord("is_connected")
    return kernels.is_connected(w)


def enumerate_words(n: int) -> Iterator[str]:
    """Yield every Kreweras word of length 3n, lexicographically (A < B < C)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    yield from kernels.enumerate_words(n)


def orbit(w: str) -> list[str]:
    """The promotion orbit of ``w``, starting at ``w``."""
    if not w:
        return [w]
    out = [w]
    u = kernels.promote(w)
    while u != w:
        out.append(u)
        u = kernels.promote(u)
    return out


def orbit_size(w: str) -> int:
    return kernels.orbit_size(w)


@lru_cache(maxsize=None)
def _completions(n: int):
    # table[(a, b, c)] = number of ways to finish a valid prefix with these counts
    table = {}
    for a in range(n, -1, -1):
        for b in range(a, -1, -1):
            for c in range(a, -1, -1):
                if a == b == c == n:
                    table[a, b, c] = 1
                    continue
                t = 0
                if a < n:
                    t += table[a + 1, b, c]
                if b < a:
                    t += table[a, b + 1, c]
                if c < a:
                    t += table[a, b, c + 1]
                table[a, b, c] = t
    return table


def random_word(n: int, rng: random.Random | None = None) -> str:
    """A uniformly random Kreweras word of length 3n."""
    rng = rng or random.Random()
    table = _completions(n)
    a = b = c = 0
    out = []
    for _ in range(3 * n):
        r = rng.randrange(table[a, b, c])
        if a < n:
            t = table[a + 1, b, c]
            if r < t:
                out.append(A)
                a += 1
                continue
            r -= t
        if b < a:
            t = table[a, b + 1, c]
            if r < t:
                out.append(B)
                b += 1
                continue
        out.append(C)
        c += 1
    return "".join(out)


def word_to_json(w: str) -> str:
    return json.dumps({"n": size(w), "word": w})


def word_from_json(text: str) -> str:
    data = json.loads(text)
    w = validate(data["word"])
    if size(w) != data["n"]:
        raise ValueError(f"n={data['n']} does not match word of length {len(w)}")
    return w
