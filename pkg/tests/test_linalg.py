from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from symcoh import linalg

small = st.integers(-4, 4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@given(matrices())
def test_nullspace_is_kernel_of_right_dimension(m):
    ncols = len(m[0])
    basis = linalg.nullspace(m, ncols)
    assert len(basis) == ncols - sympy.Matrix(m).rank()
    for v in basis:
        assert all(sum(Fraction(a) * x for a, x in zip(row, v)) == 0 for row in m)
    if basis:
        assert linalg.rank(basis) == len(basis)


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_inverse_matches_sympy(m):
    sm = sympy.Matrix(m)
    if sm.det() == 0:
        try:
            linalg.inverse(m)
        except ZeroDivisionError:
            return
        raise AssertionError("singular matrix inverted")
    inv = linalg.inverse(m)
    assert sympy.Matrix(inv) == sm.inv()
    assert linalg.matmul(inv, m) == linalg.identity(len(m))


def test_nullspace_of_zero_rows_is_everything():
    assert linalg.nullspace([], 3) == linalg.identity(3)


def test_rref_pivots():
    r, piv = linalg.rref([[0, 2, 4], [1, 1, 1]], 3)
    assert piv == [0, 1]
    assert r[0] == [1, 0, -1] and r[1] == [0, 1, 2]
