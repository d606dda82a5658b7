"""Permutations in one-line notation as 1-based tuples.

``p[i - 1]`` is the image of ``i``; composition is right to left,
``compose(p, q)(i) == p(q(i))``.
"""

from __future__ import annotations


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def identity(m: int) -> tuple[int, ...]:
    return tuple(range(1, m + 1))


def compose(p, q) -> tuple[int, ...]:
    return tuple(p[j - 1] for j in q)


def inverse(p) -> tuple[int, ...]:
    out = [0] * len(p)
    for i, j in enumerate(p, start=1):
        out[j - 1] = i
    return tuple(out)


def long_cycle(m: int) -> tuple[int, ...]:
    """The cycle (1, 2, ..., m)."""
    return tuple(range(2, m + 1)) + (1,) if m else ()


def longest_element(m: int) -> tuple[int, ...]:
    return tuple(range(m, 0, -1))


def rot(p) -> tuple[int, ...]:
    """Conjugate by the long cycle c: c^-1 o p o c."""
    m = len(p)
    return tuple((p[i % m] - 2) % m + 1 for i in range(1, m + 1))


def rc(p) -> tuple[int, ...]:
    """Reverse-complement: conjugate by w0 = [m, ..., 1]."""
    m = len(p)
    return tuple(m + 1 - p[m - i] for i in range(1, m + 1))


def fixed_points(p) -> list[int]:
    return [i for i, j in enumerate(p, start=1) if i == j]


def cycles(p) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i)
            i = p[i - 1]
        out.append(tuple(cyc))
    return out
