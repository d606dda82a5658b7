"""Exact counting: closed forms, power series, cyclic sieving, evacuation
fixed points and the order polynomial of the Kreweras poset."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from math import comb, factorial, prod

from . import words
from .errors import DomainError, NegativeCoefficient, NotPolynomial, OrbitSizeError


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def kreweras_count(n: int) -> int:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return _exact_div(4**n * comb(3 * n, n), (n + 1) * (2 * n + 1))


def _connected_base(n: int) -> int:
    if n < 1:
        raise DomainError("connected counts are defined for n >= 1")
    return _exact_div(2**n * factorial(4 * n - 3), factorial(3 * n - 1) * factorial(n))


def connected_count(n: int) -> int:
    return 2 * _connected_base(n)


def connected_web_count(n: int) -> int:
    return _connected_base(n)


class PowerSeries:
    """Integer power series truncated to degrees < ``order``."""

    def __init__(self, coeffs, order: int):
        coeffs = list(coeffs)[:order]
        self.order = order
        self.coeffs = coeffs + [0] * (order - len(coeffs))

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < self.order else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({self.coeffs}, order={self.order})"

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries([self[k] + other[k] for k in range(order)], order)

    def __mul__(self, other) -> "PowerSeries":
        if isinstance(other, int):
            return PowerSeries([c * other for c in self.coeffs], self.order)
        order = min(self.order, other.order)
        out = [0] * order
        for i, a in enumerate(self.coeffs[:order]):
            if a:
                for j in range(order - i):
                    out[i + j] += a * other.coeffs[j]
        return PowerSeries(out, order)

    __rmul__ = __mul__

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls([0, 1], order)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(x)); ``inner`` must have zero constant term."""
        if inner[0] != 0:
            raise ValueError("inner series must have zero constant term")
        order = min(self.order, inner.order)
        out = PowerSeries([0], order)
        power = PowerSeries.one(order)
        for k in range(order):
            if self[k]:
                out = out + power * self[k]
            power = power * inner
        return out


def _series_in_cubes(values: dict[int, int], order: int) -> PowerSeries:
    coeffs = [0] * order
    for n, v in values.items():
        if 3 * n < order:
            coeffs[3 * n] = v
    return PowerSeries(coeffs, order)


@dataclass
class SeriesReport:
    n_max: int
    k_identity: bool
    w_identity: bool
    web_counts: list[int]
    k_counts: list[int]

    @property
    def passed(self) -> bool:
        return self.k_identity and self.w_identity


def series_identity_check(n_max: int) -> SeriesReport:
    """Check K = 1 + K^c(xK) and solve W = 1 + W^c(xW) for the web counts."""
    if n_max < 1:
        raise DomainError("n_max must be at least 1")
    order = 3 * n_max + 1
    x = PowerSeries.x(order)
    K = _series_in_cubes({n: kreweras_count(n) for n in range(n_max + 1)}, order)
    Kc = _series_in_cubes({n: connected_count(n) for n in range(1, n_max + 1)}, order)
    Wc = _series_in_cubes({n: connected_web_count(n) for n in range(1, n_max + 1)}, order)
    one = PowerSeries.one(order)
    k_ok = K == one + Kc.compose(x * K)

    W = one
    for _ in range(order):
        nxt = one + Wc.compose(x * W)
        if nxt == W:
            break
        W = nxt
    w_ok = W == one + Wc.compose(x * W) and all(W[k] == 0 for k in range(order) if k % 3)
    return SeriesReport(
        n_max,
        k_ok,
        w_ok,
        [W[3 * n] for n in range(n_max + 1)],
        [K[3 * n] for n in range(n_max + 1)],
    )


class IntPolynomial:
    """Polynomial in q with integer coefficients, lowest degree first."""

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __call__(self, q):
        out = 0
        for c in reversed(self.coeffs):
            out = out * q + c
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        k = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(k))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def divmod(self, other: "IntPolynomial"):
        """Long division; the divisor's leading coefficient must be +-1."""
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead not in (1, -1):
            raise NotPolynomial("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * lead
            if c:
                quot[k - dq] = c
                for i, b in enumerate(other.coeffs):
                    rem[k - dq + i] -= c * b
        return IntPolynomial(quot), IntPolynomial(rem)

    def exact_div(self, other: "IntPolynomial") -> "IntPolynomial":
        quot, rem = self.divmod(other)
        if rem.coeffs:
            raise NotPolynomial(f"nonzero remainder {rem}")
        return quot

    def reduce_mod_cyclic(self, period: int) -> "IntPolynomial":
        """Reduce modulo q^period - 1."""
        out = [0] * period
        for k, c in enumerate(self.coeffs):
            out[k % period] += c
        return IntPolynomial(out)

    def __str__(self):
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                terms.append(str(c))
            else:
                terms.append(f"{c}·q^{d}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _one_minus_q_pow(k: int) -> IntPolynomial:
    return IntPolynomial([1] + [0] * (k - 1) + [-1])


def csp_polynomial(n: int) -> IntPolynomial:
    if n < 1:
        raise DomainError("n must be at least 1")
    num = IntPolynomial([1])
    for j in range(1, 3 * n + 1):
        num = num * _one_minus_q_pow(2 * j)
    den = IntPolynomial([1])
    for j in range(2, 2 * n + 2):
        den = den * _one_minus_q_pow(j)
    for j in range(2, n + 2):
        den = den * _one_minus_q_pow(2 * j)
    f = num.exact_div(den)
    if any(c < 0 for c in f.coeffs):
        raise NegativeCoefficient(f"negative coefficient in {f}")
    if f(1) != kreweras_count(n):
        raise AssertionError(f"f(1) = {f(1)} but K_{n} = {kreweras_count(n)}")
    return f


def promotion_orbits(n: int) -> list[list[str]]:
    seen = set()
    orbits = []
    for w in words.enumerate_words(n):
        if w in seen:
            continue
        orb = words.orbit(w)
        seen.update(orb)
        orbits.append(orb)
    return orbits


@dataclass
class CspReport:
    n: int
    period: int
    passed: bool
    orbit_sizes: dict[int, int]
    f: IntPolynomial
    orbit_sum: IntPolynomial = field(repr=False)


def csp_check(n: int, max_n: int = 6) -> CspReport:
    """Compare f mod q^6n - 1 with the promotion orbit generating sum."""
    if n < 1:
        raise DomainError("n must be at least 1")
    if n > max_n:
        raise DomainError(f"n = {n} exceeds the enumeration guard {max_n}")
    period = 6 * n
    f = csp_polynomial(n)
    coeffs = [0] * period
    sizes = Counter()
    for orb in promotion_orbits(n):
        s = len(orb)
        if period % s:
            raise OrbitSizeError(f"orbit of size {s} does not divide {period}")
        sizes[s] += 1
        step = period // s
        for t in range(s):
            coeffs[t * step] += 1
    orbit_sum = IntPolynomial(coeffs)
    passed = f.reduce_mod_cyclic(period) == orbit_sum
    return CspReport(n, period, passed, dict(sorted(sizes.items())), f, orbit_sum)


def evac_fixed_formula(n: int) -> int:
    if n < 1:
        raise DomainError("n must be at least 1")
    lo, hi = n // 2, (n + 1) // 2
    num = 3**lo * 4**hi
    num *= prod(3 * j - 1 for j in range(1, lo + 1))
    num *= prod(3 * j - 2 for j in range(1, hi + 1))
    return _exact_div(num, factorial(n + 1))


@dataclass
class EvacReport:
    n: int
    formula: int
    dual_evac_fixed: int
    evac_fixed: int

    @property
    def passed(self) -> bool:
        expected_evac = self.formula if self.n % 2 == 0 else 0
        return self.dual_evac_fixed == self.formula and self.evac_fixed == expected_evac


def evac_fixed_check(n: int) -> EvacReport:
    dual = fixed = 0
    for w in words.enumerate_words(n):
        dual += words.dual_evacuate(w) == w
        fixed += words.evacuate(w) == w
    return EvacReport(n, evac_fixed_formula(n), dual, fixed)


def order_polynomial(n: int, m: int) -> int:
    if n < 1 or m < 0:
        raise DomainError("need n >= 1 and m >= 0")
    num = prod(m + 1 + i for i in range(1, n + 1)) * prod(2 * m + i + 1 for i in range(1, 2 * n + 1))
    return _exact_div(num, factorial(n + 1) * factorial(2 * n + 1))


def ppartition_count(n: int, m: int) -> int:
    """Weakly order-preserving maps to {0..m}, counted rank by rank.

    The state is the value triple on (A_k, B_k, C_k), which needs a <= b,
    a <= c and each coordinate nondecreasing in k.
    """
    if n < 1 or m < 0:
        raise DomainError("need n >= 1 and m >= 0")
    vals = range(m + 1)
    states = [(a, b, c) for a, b, c in product(vals, repeat=3) if a <= b and a <= c]
    counts = {s: 1 for s in states}
    for _ in range(n - 1):
        # cum[a][b][c] = sum of counts over states dominated by (a, b, c)
        cum = [[[0] * (m + 2) for _ in range(m + 2)] for _ in range(m + 2)]
        for a, b, c in product(vals, repeat=3):
            cum[a + 1][b + 1][c + 1] = (
                counts.get((a, b, c), 0)
                + cum[a][b + 1][c + 1] + cum[a + 1][b][c + 1] + cum[a + 1][b + 1][c]
                - cum[a][b][c + 1] - cum[a][b + 1][c] - cum[a + 1][b][c]
                + cum[a][b][c]
            )
        counts = {(a, b, c): cum[a + 1][b + 1][c + 1] for a, b, c in states}
    return sum(counts.values())


def finite_difference(values: list[int], order: int) -> list[int]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def linear_extension_count_from_order_polynomial(n: int) -> int:
    """The 3n-th finite difference of m -> Omega(m), a constant for degree 3n."""
    vals = [order_polynomial(n, m) for m in range(3 * n + 2)]
    diffs = finite_difference(vals, 3 * n)
    if len(set(diffs)) != 1:
        raise AssertionError("order polynomial has degree above 3n")
    return diffs[0]
