from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from symcoh import classification as cls
from symcoh.ce_model import thurston, torus

THURSTON = cls.from_ce_model(thurston())
PUNCTURED = cls.puncture(THURSTON)
T4 = cls.from_ce_model(torus(2))


def compact_data():
    return [cls.sphere(), *(cls.surface(g) for g in range(4)), THURSTON,
            *(cls.from_ce_model(torus(n)) for n in (1, 2, 3)),
            *(cls.torus_direct(n) for n in (1, 2, 3))]


def test_thurston_pairing():
    assert THURSTON.labels == ("x*", "p*", "z*")
    x, p, z = range(3)
    assert THURSTON.P[x][p] == 0 and THURSTON.P[x][z] == 0 and THURSTON.P[z][p] == 1
    assert all(v == 0 for a in THURSTON.Q for b in a for c in b for v in c)


def test_torus_pairing():
    assert T4.P[0][1] == 1 and T4.P[2][3] == 1
    assert T4.P[0][2] == T4.P[0][3] == T4.P[1][2] == T4.P[1][3] == 0
    assert T4.q(0, 1, 2, 3) == 1 and T4.q(1, 0, 2, 3) == -1


def test_direct_torus_matches_ce_model():
    for n in (1, 2, 3):
        a, b = cls.from_ce_model(torus(n)), cls.torus_direct(n)
        assert (a.P, a.Q, a.vol, a.b_top_minus_1) == (b.P, b.Q, b.vol, b.b_top_minus_1)
        for alg in cls.H2_ALGEBRAS:
            assert cls.h2(a, alg) == cls.h2(b, alg)


def test_direct_data_examples_and_errors():
    assert cls.sphere().b1 == 0
    s2 = cls.surface(2)
    assert s2.b1 == 4
    from symcoh import linalg
    assert linalg.rank(s2.P) == 4
    assert cls.surface(1).b1 == 2
    with pytest.raises(cls.DataError):
        cls.direct_data("bad", [[0, 1], [1, 0]])
    with pytest.raises(cls.DataError):
        cls.direct_data("bad", [[0] * 4] * 4, Q=[[[[1] * 4] * 4] * 4] * 4)
    with pytest.raises(cls.DataError):
        cls.direct_data("bad", [[0, 1], [-1, 0]], vol=0)


def test_puncture():
    assert PUNCTURED.P == THURSTON.P and PUNCTURED.Q == THURSTON.Q
    assert not PUNCTURED.compact
    sp = cls.puncture(cls.sphere())
    assert sp.b1 == 0 and not sp.compact
    with pytest.raises(cls.DataError):
        cls.puncture(PUNCTURED)


def test_transgression_examples():
    assert cls.transgression(T4, [1, 0, 0, 0]) == {}
    s2 = cls.surface(2, vol=3)
    assert cls.transgression(s2, [1, 0, 0, 0]) == {(1, 2, 3): Fraction(-1, 3)}
    assert cls.transgression(PUNCTURED, [1, 0, 0]) == {}
    with pytest.raises(cls.DomainError):
        cls.transgression(PUNCTURED, [0, 1, 0])


def test_kernels():
    assert cls.ker_T(THURSTON) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert cls.ker_B(PUNCTURED) == [[1, 0, 0]]
    assert cls.ker_T(cls.surface(2)) == []


def test_h2_examples():
    rep = cls.h2(THURSTON, "sp")
    assert rep.total == 6
    assert [(c.label, c.dim) for c in rep.components] == [("Λ²H¹*", 3), ("Ker T", 3)]
    rep = cls.h2(PUNCTURED, "sp")
    assert [(c.label, c.dim) for c in rep.components] == [("Λ²H¹*", 3), ("KS", 1),
                                                          ("Ker B ∩ Ker T", 1)]
    assert cls.h2(cls.surface(2), "sp").total == 6
    with pytest.raises(KeyError):
        cls.h2(THURSTON, "nope")


def test_h1_and_center():
    for data in (THURSTON, PUNCTURED, T4):
        assert cls.h1(data, "ham").dim == 0
        assert cls.h1(data, "poisson_c0").dim == 0
        assert cls.h1(data, "poisson_c").dim == 1
    assert cls.h1(THURSTON, "poisson").dim == 1
    assert cls.h1(PUNCTURED, "poisson").dim == 0
    assert cls.center_dim(THURSTON) == 3
    assert cls.center_dim(PUNCTURED) == 4
    assert cls.center_dim(T4) == 4


@pytest.mark.parametrize("data", compact_data(), ids=lambda d: d.name)
def test_small_betti_kills_transgression(data):
    if data.b1 >= 4:
        return
    for i in range(data.b1):
        assert cls.transgression(data, [int(j == i) for j in range(data.b1)]) == {}
    assert cls.h2(data, "sp").total == comb(data.b1, 2) + data.b1


@pytest.mark.parametrize("data", compact_data(), ids=lambda d: d.name)
def test_ham_versus_poisson(data):
    assert cls.h2(data, "ham").total == cls.h2(data, "poisson").total
    punctured = cls.puncture(data)
    assert cls.h2(punctured, "ham").total == cls.h2(punctured, "poisson").total + 1


@given(st.integers(0, 5), st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_surfaces(g, vol):
    s = cls.surface(g, vol=vol)
    expected_kernel = 2 if g == 1 else 0  # b1 < 4 only for g <= 1
    assert len(cls.ker_T(s)) == expected_kernel
    assert cls.h2(s, "sp").total == comb(2 * g, 2) + expected_kernel


@given(st.lists(st.integers(-2, 2), min_size=6, max_size=6))
def test_transgression_is_linear_and_alternating(coeffs):
    data = cls.from_ce_model(torus(3))
    a, b = coeffs[:6], [1, 0, 2, 0, 0, -1]
    ta, tb = cls.transgression(data, a), cls.transgression(data, b)
    tab = cls.transgression(data, [x + y for x, y in zip(a, b)])
    for key in combinations(range(6), 3):
        assert tab.get(key, 0) == ta.get(key, 0) + tb.get(key, 0)
