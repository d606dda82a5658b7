"""Verification suites shared by the CLI and the acceptance tests.

Each suite checks its identities exhaustively for n <= max_n and on random
samples for the larger sizes up to 5.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import bump, enumeration, growth, perm, web, words


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))

    def lines(self) -> list[str]:
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.name}"]
        for c in self.checks:
            extra = f" ({c.detail})" if c.detail else ""
            out.append(f"    {'ok  ' if c.passed else 'FAIL'} {c.name}{extra}")
        return out

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def word_corpus(max_n: int, samples: int, seed: int, top: int = 5):
    """(n, words, exhaustive?) for n = 1..max_n exhaustively, then sampled up to ``top``."""
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        yield n, list(words.enumerate_words(n)), True
    for n in range(max_n + 1, top + 1):
        if samples > 0:
            yield n, [words.random_word(n, rng) for _ in range(samples)], False


def _first_failure(ws: Iterable[str], pred: Callable[[str], bool]):
    for w in ws:
        if not pred(w):
            return w
    return None


def _run(result: SuiteResult, label: str, corpus, pred) -> None:
    for n, ws, exhaustive in corpus:
        bad = _first_failure(ws, pred)
        how = "all" if exhaustive else "sampled"
        detail = f"n={n}, {how} {len(ws)} words"
        if bad is not None:
            detail += f", first failure {bad}"
        result.add(f"{label} n={n}", bad is None, detail)


def suite_promotion(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("promotion")
    corpus = list(word_corpus(max_n, samples, seed))

    def period_and_swap(w):
        n = len(w) // 3
        return words.promote_power(w, 3 * n) == words.swap_bc(w) and words.promote_power(w, 6 * n) == w

    def taus(w):
        return (
            words.promote_by_taus(w) == words.promote(w)
            and words.evacuate_by_taus(w) == words.evacuate(w)
            and words.promote_inverse(words.promote(w)) == w
        )

    def evac_basics(w):
        n = len(w) // 3
        ev = words.evacuate
        return (
            ev(ev(w)) == w
            and words.dual_evacuate(words.dual_evacuate(w)) == w
            and ev(words.promote(w)) == words.promote_inverse(ev(w))
            and words.promote_power(w, 3 * n) == words.dual_evacuate(ev(w))
        )

    _run(res, "pro^3n = swap_bc and pro^6n = id", corpus, period_and_swap)
    _run(res, "tau compositions", [c for c in corpus if c[0] <= max_n], taus)
    _run(res, "evacuation identities", [c for c in corpus if c[0] <= max_n], evac_basics)
    return res


def suite_trips(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("trips")
    corpus = list(word_corpus(max_n, samples, seed))

    def basic(w):
        sigma, eps = bump.trip_permutation(w)
        if not perm.is_permutation(sigma) or perm.fixed_points(sigma):
            return False
        inv = perm.inverse(sigma)
        for i, x in enumerate(w, start=1):
            y = w[sigma[i - 1] - 1]
            if (inv[i - 1] > i) != (x == words.A):
                return False
            if x == words.A and y == words.A:
                return False
            if x != words.A:
                z = w[sigma[sigma[i - 1] - 1] - 1]
                if not (y == words.negate(x) or (y == words.A and z == words.negate(x))):
                    return False
        return bump.word_from_sigma_epsilon(sigma, eps) == w

    def key(w):
        t = bump.trip_permutation(w)
        p = bump.trip_permutation(words.promote(w))
        return p.sigma == perm.rot(t.sigma) and p.epsilon == bump.shift_epsilon(t.epsilon)

    def evac(w):
        t = bump.trip_permutation(w)
        e = bump.trip_permutation(words.evacuate(w))
        return (
            e.sigma == perm.rc(perm.inverse(t.sigma))
            and e.epsilon == bump.reverse_negate_epsilon(t.epsilon)
            and bump.evac_from_sigma(w, t.sigma) == words.evacuate(w)
        )

    _run(res, "basic permutation properties", corpus, basic)
    _run(res, "promotion rotates sigma", corpus, key)
    _run(res, "evacuation reverse-complements sigma", corpus, evac)
    return res


def suite_growth(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("growth")
    corpus = list(word_corpus(max_n, samples, seed))

    def oracle(w):
        return growth.sigma_eps_from_growth(w) == bump.trip_permutation(w)

    def evac(w):
        return growth.evac_from_growth(w) == words.evacuate(w)

    def rows(w):
        g = growth.growth_window(w)
        cur = w
        for i in range(1, len(w) + 1):
            if g.row_word(i - 1) != cur:
                return False
            k = words.iota(cur)
            if g.row_fill(i) != (k + i - 1, cur[k - 1]):
                return False
            cur = words.promote(cur)
        return True

    _run(res, "growth sigma/epsilon equal bump trips", corpus, oracle)
    _run(res, "column read equals evacuation", corpus, evac)
    _run(res, "rows are promotions with one fill", corpus, rows)
    return res


def web_census(n: int) -> dict[bytes, web.Web]:
    forms = {}
    for w in words.enumerate_words(n):
        W, _ = web.web_from_word(w)
        forms.setdefault(web.canonical_form(W), W)
    return forms


def suite_webs(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("webs")
    corpus = list(word_corpus(max_n, samples, seed))

    def trips(w):
        W, _ = web.web_from_word(w)
        return web.trip_permutation_web(W) == bump.trip_permutation(w).sigma and web.is_kreweras_web(W)

    def symmetry(w):
        form = lambda x: web.canonical_form(web.web_from_word(x)[0])  # noqa: E731
        W, _ = web.web_from_word(w)
        return (
            web.canonical_form(web.rotate_web(W)) == form(words.promote(w))
            and web.canonical_form(web.flip_web(W)) == form(words.evacuate(w))
        )

    def recovery(w):
        W, _ = web.web_from_word(w)
        return w in web.recover_words(W)

    _run(res, "web trips equal bump trips", corpus, trips)
    _run(res, "rotation and flip", corpus, symmetry)
    _run(res, "word recovered from its web", corpus, recovery)

    series = enumeration.series_identity_check(max(max_n, 1))
    for n in range(1, max_n + 1):
        forms = web_census(n)
        kappas = [web.num_components(W) for W in forms.values()]
        connected = sum(1 for k in kappas if k == 1)
        weighted = sum(2**k for k in kappas)
        res.add(f"web census n={n}", len(forms) == series.web_counts[n], f"{len(forms)} webs")
        res.add(
            f"connected webs n={n}",
            connected == enumeration.connected_web_count(n),
            f"{connected} connected",
        )
        res.add(
            f"sum of 2^components n={n}",
            weighted == enumeration.kreweras_count(n),
            f"{weighted}",
        )
    return res


def suite_enumeration(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("enumeration")
    for n in range(1, max_n + 1):
        ws = list(words.enumerate_words(n))
        res.add(f"word count n={n}", len(ws) == enumeration.kreweras_count(n), f"{len(ws)}")
        conn = sum(1 for w in ws if words.is_connected(w))
        res.add(f"connected count n={n}", conn == enumeration.connected_count(n), f"{conn}")
    series = enumeration.series_identity_check(max(2 * max_n, 5))
    res.add("K = 1 + K^c(xK)", series.k_identity, f"through n={series.n_max}")
    res.add("W = 1 + W^c(xW) solved", series.w_identity, f"W = {series.web_counts}")
    for n in range(1, max_n + 1):
        bad = [
            m for m in range(7) if enumeration.order_polynomial(n, m) != enumeration.ppartition_count(n, m)
        ]
        res.add(f"order polynomial n={n}, m<=6", not bad, f"mismatch at m={bad}" if bad else "")
        lead = enumeration.linear_extension_count_from_order_polynomial(n)
        res.add(f"leading coefficient n={n}", lead == enumeration.kreweras_count(n), f"{lead}")
    return res


def suite_csp(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("csp")
    for n in range(1, max_n + 1):
        rep = enumeration.csp_check(n)
        res.add(f"cyclic sieving n={n}", rep.passed, f"orbit sizes {rep.orbit_sizes}")
    for n in range(1, max(max_n, 6) + 1):
        f = enumeration.csp_polynomial(n)
        res.add(f"f is a nonnegative polynomial n={n}", f(1) == enumeration.kreweras_count(n), f"degree {f.degree}")
    return res


def suite_evac(max_n=3, samples=200, seed=0) -> SuiteResult:
    res = SuiteResult("evac")
    for n in range(1, max(max_n, 1) + 1):
        rep = enumeration.evac_fixed_check(n)
        res.add(
            f"evacuation fixed points n={n}",
            rep.passed,
            f"formula {rep.formula}, dual {rep.dual_evac_fixed}, evac {rep.evac_fixed}",
        )
    return res


SUITES = {
    "promotion": suite_promotion,
    "trips": suite_trips,
    "growth": suite_growth,
    "webs": suite_webs,
    "enumeration": suite_enumeration,
    "csp": suite_csp,
    "evac": suite_evac,
}


def run_suites(name: str, max_n=3, samples=200, seed=0) -> list[SuiteResult]:
    names = list(SUITES) if name == "all" else [name]
    return [SUITES[k](max_n=max_n, samples=samples, seed=seed) for k in names]
