import itertools

import pytest

from kreweras import perm

SIGMA = (4, 3, 8, 5, 2, 7, 1, 9, 6)


def test_rot_example():
    assert perm.rot(SIGMA) == (2, 7, 4, 1, 6, 9, 8, 5, 3)
    assert perm.rot(perm.identity(5)) == perm.identity(5)


def test_rot_is_conjugation_by_long_cycle():
    c = perm.long_cycle(9)
    assert perm.rot(SIGMA) == perm.compose(perm.inverse(c), perm.compose(SIGMA, c))
    p = SIGMA
    for _ in range(9):
        p = perm.rot(p)
    assert p == SIGMA


def test_rc():
    w0 = perm.longest_element(9)
    assert perm.rc(SIGMA) == perm.compose(w0, perm.compose(SIGMA, w0))
    assert perm.rc(perm.rc(SIGMA)) == SIGMA


@pytest.mark.parametrize("p", list(itertools.permutations(range(1, 5))))
def test_rc_commutes_with_inverse(p):
    assert perm.rc(perm.inverse(p)) == perm.inverse(perm.rc(p))
    assert perm.compose(p, perm.inverse(p)) == perm.identity(4)


def test_cycles_and_fixed_points():
    assert perm.fixed_points(SIGMA) == []
    assert perm.fixed_points((1, 3, 2)) == [1]
    cyc = perm.cycles(SIGMA)
    assert sorted(x for c in cyc for x in c) == list(range(1, 10))


def test_is_permutation():
    assert perm.is_permutation(SIGMA)
    assert not perm.is_permutation((1, 1, 2))
    assert not perm.is_permutation((0, 1))
