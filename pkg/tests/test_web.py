import json
import random

import pytest

from kreweras import bump, enumeration, web, words
from kreweras.errors import MalformedEmbedding, MalformedWeb, RecoveryMismatch
from kreweras.web import BLACK, WHITE, Web

from webfixtures import polygon_web

W = "AABBCACCB"


def form(w):
    return web.canonical_form(web.web_from_word(w)[0])


def relabel_vertices(W0: Web, seed: int) -> Web:
    """Same embedded web with shuffled vertex and edge numbering."""
    rng = random.Random(seed)
    nv, ne = W0.num_vertices, W0.num_edges
    vperm = list(range(nv))
    rng.shuffle(vperm)
    eperm = list(range(ne))
    rng.shuffle(eperm)
    flips = [rng.random() < 0.5 for _ in range(ne)]

    def dmap(d):
        e, side = d >> 1, d & 1
        return 2 * eperm[e] + (side ^ flips[e])

    tails = [0] * (2 * ne)
    for d in range(2 * ne):
        tails[dmap(d)] = vperm[W0.tails[d]]
    colors = [None] * nv
    rotation = [None] * nv
    for v in range(nv):
        colors[vperm[v]] = W0.colors[v]
        rot = [dmap(d) for d in W0.rotation[v]]
        k = rng.randrange(len(rot))
        rotation[vperm[v]] = tuple(rot[k:] + rot[:k])
    return Web(tuple(colors), tuple(vperm[v] for v in W0.boundary), tuple(tails), tuple(rotation))


def test_example_web():
    Wb, col = web.web_from_word(W)
    assert Wb.size == 9
    assert Wb.census() == {BLACK: 5, WHITE: 2}
    assert web.num_components(Wb) == 1
    assert web.word_from_coloring(Wb, col) == W
    assert col.is_proper(Wb)
    assert web.trip_permutation_web(Wb) == (4, 3, 8, 5, 2, 7, 1, 9, 6)


def test_abc_web_is_a_star():
    Wb, col = web.web_from_word("ABC")
    assert Wb.size == 3
    assert Wb.census() == {BLACK: 1}
    (k,) = Wb.internal_vertices()
    assert sorted(Wb.head(d) for d in Wb.rotation[k]) == sorted(Wb.boundary)
    assert [f.kind for f in web.faces(Wb)] == ["outer"]
    assert web.trip_permutation_web(Wb) == bump.trip_permutation("ABC").sigma


def test_boundary_letters_read_back():
    for w in words.enumerate_words(3):
        Wb, col = web.web_from_word(w)
        assert web.word_from_coloring(Wb, col) == w
        assert col.is_proper(Wb)


def test_trip_examples():
    assert web.trip_permutation_web(web.web_from_word("ABACACCBB")[0]) == (2, 7, 4, 1, 6, 9, 8, 5, 3)


def test_trips_agree_exhaustive():
    for n in range(1, 5):
        for w in words.enumerate_words(n):
            Wb, _ = web.web_from_word(w)
            assert web.trip_permutation_web(Wb) == bump.trip_permutation(w).sigma


def test_faces_of_word_webs():
    for n in range(1, 4):
        for w in words.enumerate_words(n):
            Wb, _ = web.web_from_word(w)
            assert web.is_irreducible(Wb)
            assert web.is_kreweras_web(Wb)
            for f in web.internal_faces(Wb):
                assert f.sides >= 6 and f.sides % 4 == 2


def test_euler_on_random_words():
    rng = random.Random(4)
    for _ in range(100):
        Wb, _ = web.web_from_word(words.random_word(4, rng))
        fs = web.faces(Wb)
        assert sum(f.kind == "outer" for f in fs) == web.num_components(Wb)


def test_square_and_octagon_fixtures():
    sq = polygon_web(2)
    assert [f.sides for f in web.internal_faces(sq)] == [4]
    assert not web.is_irreducible(sq)
    octo = polygon_web(4)
    assert [f.sides for f in web.internal_faces(octo)] == [8]
    assert web.is_irreducible(octo)
    assert not web.is_kreweras_web(octo)
    with pytest.raises(RecoveryMismatch):
        web.recover_words(octo)


def test_hexagon_fixture_recovers():
    hexa = polygon_web(3)
    assert web.is_kreweras_web(hexa)
    assert web.recover_words(hexa) == {"AAABBBCCC", "AAACCCBBB"}


def test_broken_rotation_is_rejected():
    Wb, _ = web.web_from_word("AAABBBCCC")
    v = next(v for v in Wb.internal_vertices() if Wb.colors[v] == WHITE)
    rotation = list(Wb.rotation)
    rotation[v] = tuple(reversed(rotation[v]))
    with pytest.raises(MalformedEmbedding):
        web.faces(Web(Wb.colors, Wb.boundary, Wb.tails, tuple(rotation)))


def test_structure_errors():
    Wb, _ = web.web_from_word("ABC")
    bad_colors = tuple(WHITE for _ in Wb.colors)
    with pytest.raises(MalformedWeb):
        web.validate_web(Web(bad_colors, Wb.boundary, Wb.tails, Wb.rotation))
    with pytest.raises(MalformedWeb):
        web.validate_web(Web(Wb.colors, Wb.boundary[:2] + Wb.boundary[:1], Wb.tails, Wb.rotation))


def test_rotate_and_flip_example():
    Wb, _ = web.web_from_word(W)
    assert web.canonical_form(web.rotate_web(Wb)) == form("ABACACCBB")
    assert web.canonical_form(web.flip_web(Wb)) == form(words.evacuate(W))


def test_rotate_and_flip_exhaustive():
    for n in range(1, 4):
        for w in words.enumerate_words(n):
            Wb, _ = web.web_from_word(w)
            assert web.canonical_form(web.rotate_web(Wb)) == form(words.promote(w))
            assert web.canonical_form(web.flip_web(Wb)) == form(words.evacuate(w))
            R = Wb
            for _ in range(3 * n):
                R = web.rotate_web(R)
            assert web.canonical_form(R) == web.canonical_form(Wb)


def test_components():
    assert web.num_components(web.web_from_word(W)[0]) == 1
    assert web.num_components(web.web_from_word("ABCABC")[0]) == 2


def test_canonical_form_ignores_numbering():
    for w in [W, "ABCABC", "AAABBBCCC", "AAAABBBBCCCC"]:
        Wb, _ = web.web_from_word(w)
        for seed in range(5):
            assert web.canonical_form(relabel_vertices(Wb, seed)) == web.canonical_form(Wb)


def test_canonical_form_separates():
    forms = {form(w) for w in words.enumerate_words(2)}
    assert len(forms) == 5


def test_recover_examples():
    assert web.recover_words(web.web_from_word(W)[0]) == {"AABBCACCB", "AACCBABBC"}
    assert web.recover_words(web.web_from_word("ABC")[0]) == {"ABC", "ACB"}
    assert len(web.recover_words(web.web_from_word("ABCABC")[0])) == 4


def test_census_counts():
    expected = {1: (1, 1), 2: (5, 2), 3: (42, 12), 4: (459, 104)}
    for n, (total, connected) in expected.items():
        forms = {}
        for w in words.enumerate_words(n):
            Wb, _ = web.web_from_word(w)
            forms.setdefault(web.canonical_form(Wb), Wb)
        kappas = [web.num_components(x) for x in forms.values()]
        assert len(forms) == total
        assert kappas.count(1) == connected == enumeration.connected_web_count(n)
        assert sum(2**k for k in kappas) == enumeration.kreweras_count(n)


def test_recovery_round_trip_exhaustive():
    for n in range(1, 4):
        for w in words.enumerate_words(n):
            Wb, _ = web.web_from_word(w)
            found = web.recover_words(Wb)
            assert w in found
            assert len(found) == 2 ** web.num_components(Wb)


def test_identical_trips_mean_identical_webs():
    by_sigma = {}
    for n in range(1, 4):
        for w in words.enumerate_words(n):
            Wb, _ = web.web_from_word(w)
            by_sigma.setdefault(web.trip_permutation_web(Wb), set()).add(web.canonical_form(Wb))
    assert all(len(v) == 1 for v in by_sigma.values())


def test_color_web_example():
    Wb, col = web.web_from_word(W)
    assert web.color_web(Wb, "C") == col
    other = web.color_web(Wb, "B")
    swap = {web.BLUE: web.CRIMSON, web.CRIMSON: web.BLUE, web.AVOCADO: web.AVOCADO}
    assert other.colors == tuple(swap[c] for c in col.colors)
    assert web.word_from_coloring(Wb, other) == words.swap_bc(W)


def test_color_web_on_shuffled_web():
    Wb, _ = web.web_from_word("ABCABC")
    shuffled = relabel_vertices(Wb, 7)
    for choice in ["BB", "BC", "CB", "CC"]:
        col = web.color_web(shuffled, choice)
        assert col.is_proper(shuffled)
        w = web.word_from_coloring(shuffled, col)
        assert words.is_kreweras(w)
        assert web.component_choices(shuffled, w) == tuple(choice)


def test_color_web_succeeds_exhaustive():
    for n in range(1, 4):
        seen = set()
        for w in words.enumerate_words(n):
            Wb, col = web.web_from_word(w)
            f = web.canonical_form(Wb)
            if f in seen:
                continue
            seen.add(f)
            choice = web.component_choices(Wb, w)
            assert web.color_web(Wb, choice) == col


def test_color_web_needs_one_letter_per_component():
    Wb, _ = web.web_from_word("ABCABC")
    with pytest.raises(ValueError):
        web.color_web(Wb, "B")


def test_json_round_trip():
    Wb, col = web.web_from_word(W)
    data = json.loads(json.dumps(web.to_dict(Wb, col)))
    back, col2 = web.from_dict(data)
    assert back == Wb and col2 == col


def test_json_rejects_garbage():
    with pytest.raises(MalformedWeb):
        web.from_dict({"colors": ["white"]})
    Wb, _ = web.web_from_word("ABC")
    data = web.to_dict(Wb)
    data["rotation"][0] = [1]
    with pytest.raises(MalformedWeb):
        web.from_dict(data)
