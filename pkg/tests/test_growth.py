import random

import pytest

from kreweras import bump, growth, words
from kreweras.errors import MalformedCell
from kreweras.growth import IdealTriple as T

W = "AABBCACCB"


def test_local_rule_examples():
    assert growth.local_rule((0, 0, 0), (1, 0, 0), (1, 1, 0), 3) == (T(1, 0, 0), "B")
    assert growth.local_rule((1, 0, 0), (1, 1, 0), (2, 1, 0), 3) == (T(2, 0, 0), None)
    out, fill = growth.local_rule((1, 1, 1), (2, 1, 1), (2, 2, 1), 3)
    assert T(1, 2, 1).in_range(3) is False
    assert (out, fill) == (T(2, 1, 1), "B")


def test_local_rule_malformed():
    with pytest.raises(MalformedCell):
        growth.local_rule((0, 0, 0), (1, 1, 0), (2, 1, 0), 3)
    with pytest.raises(MalformedCell):
        growth.local_rule((0, 0, 0), (1, 0, 0), (1, 0, 0), 3)
    with pytest.raises(MalformedCell):
        growth.local_rule((3, 0, 0), (4, 0, 0), (4, 1, 0), 3)


def test_rows_follow_the_orbit():
    g = growth.growth_window(W, 9)
    orb = words.orbit(W)
    assert [g.row_word(i) for i in range(10)] == orb[:10]
    g = growth.growth_window("ABC", 2)
    assert g.row_word(1) == "ACB" and g.row_word(2) == "ABC"


def test_row_sweep_is_promotion_sampled():
    rng = random.Random(11)
    for _ in range(100):
        w = words.random_word(4, rng)
        assert growth.growth_window(w, 1).row_word(1) == words.promote(w)


def test_boundary_diagonals():
    g = growth.growth_window(W, 9)
    for i in range(10):
        assert g.label(i - 9, -i) == (0, 0, 0)
        assert g.label(i, -i) == (3, 3, 3)


def test_sigma_eps_examples():
    assert growth.sigma_eps_from_growth(W) == bump.TripData((4, 3, 8, 5, 2, 7, 1, 9, 6), tuple("BBCCBCBBC"))
    assert growth.sigma_eps_from_growth("ABACACCBB") == bump.trip_permutation("ABACACCBB")
    assert growth.sigma_eps_from_growth("ABC") == bump.TripData((2, 3, 1), ("B", "C", "B"))


def test_oracle_agreement_exhaustive():
    for n in range(1, 4):
        for w in words.enumerate_words(n):
            assert growth.sigma_eps_from_growth(w) == bump.trip_permutation(w)
            assert growth.evac_from_growth(w) == words.evacuate(w)


def test_evac_examples():
    assert growth.evac_from_growth(W) == "ABACACCBB"
    assert growth.evac_from_growth("ABC") == "ACB"


def test_filled_rows_exhaustive():
    for n in range(1, 4):
        for w in words.enumerate_words(n):
            g = growth.growth_window(w)
            cur = w
            for i in range(1, 3 * n + 1):
                k = words.iota(cur)
                assert g.row_fill(i) == (k + i - 1, cur[k - 1])
                cur = words.promote(cur)


def _translation_ok(w):
    m = len(w)
    g = growth.growth_window(w, 2 * m)
    gp = growth.growth_window(words.promote(w), 2 * m - 1)
    for (x, y), t in gp.labels.items():
        if g.labels[x + 1, y - 1] != t:
            return False
    for x, y in gp.labels:
        if y < 0:
            if gp.fills.get((x, y)) != g.fills.get((x + 1, y - 1)):
                return False
    return True


def test_translation_symmetry():
    for n in (1, 2):
        for w in words.enumerate_words(n):
            assert _translation_ok(w)
    rng = random.Random(3)
    for _ in range(40):
        assert _translation_ok(words.random_word(3, rng))


def test_reflection_symmetry():
    for n in (1, 2):
        for w in words.enumerate_words(n):
            m = 3 * n
            g = growth.growth_window(w, m)
            ge = growth.growth_window(words.evacuate(w), m)
            shared = [(x, y) for (x, y) in ge.labels if (y, x) in g.labels]
            assert shared
            for x, y in shared:
                assert ge.labels[x, y] == g.labels[y, x]
            for (x, y), e in ge.fills.items():
                corners = [(y, x), (y + 1, x), (y, x + 1), (y + 1, x + 1)]
                if all(c in g.labels for c in corners):
                    assert g.fills.get((y, x)) == e


def test_periodicity_and_row_column_flip():
    for n in range(1, 4):
        m = 3 * n
        for w in words.enumerate_words(n):
            g = growth.growth_window(w, 2 * m)
            for (x, y), e in g.fills.items():
                if -y <= m:
                    assert g.fills[x + m, y - m] == words.negate(e)
            for i in range(m, 2 * m + 1):
                assert g.row_fill(i)[1] == words.negate(g.column_fill(i)[1])


def test_dumps():
    g = growth.growth_window(W, 9)
    text = g.to_text()
    assert text.splitlines()[0].split("|")[1].split()[0] == "000"
    assert "333" in text and "B" in text
    data = g.to_dict()
    assert data["rows"] == 9 and len(data["fills"]) == 9
    assert data["fills"][0] == {"x": -6, "y": -1, "row": 1, "column": 4, "letter": "B"}


def test_window_needs_rows():
    with pytest.raises(ValueError):
        growth.growth_window(W, 0)
