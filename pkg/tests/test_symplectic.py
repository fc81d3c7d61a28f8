import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

import oracle2d as o
from symcoh.ce_model import thurston, torus
from symcoh.darboux import DarbouxChart
from symcoh.exterior import DegreeError, ExteriorAlgebra, wedge_all
from symcoh.symplectic import SymplecticContext, canonical_betti, delta_op, hodge_star, liouville

seeds = st.integers(0, 10**9)
CHART1, CHART2 = DarbouxChart(1), DarbouxChart(2)


def to_oracle(chart, a):
    """Convert a 2-dimensional polynomial form to the oracle's 4-tuple."""
    def s(poly):
        return sum(sympy.Rational(c.numerator, c.denominator) * o.q**m[0] * o.p**m[1]
                   for m, c in poly.terms.items())
    get = lambda key: s(a.terms[key]) if key in a.terms else 0
    return (get(()), get((0,)), get((1,)), get((0, 1)))


def test_liouville_examples():
    m = thurston()
    assert liouville(m.context).terms == {(0, 1, 2, 3): 1}
    assert CHART1.liouville() == CHART1.alg.monomial(1, 0, 1)
    t = torus(2)
    assert liouville(t.context) == t.alg.monomial(1, 0, 1, 2, 3)


def test_thurston_liouville_with_reordered_generators():
    names = ["z*", "p*", "h*", "x*"]
    alg = ExteriorAlgebra(names)
    omega = alg.monomial(1, "h*", "x*") + alg.monomial(1, "z*", "p*")
    ctx = SymplecticContext(alg, omega, lambda a: a)
    assert ctx.liouville_form == alg.monomial(1, "z*", "p*", "h*", "x*")


def test_star_examples_in_two_dimensions():
    c = CHART1
    dq, dp = c.alg.gen(0), c.alg.gen(1)
    assert c.star(c.alg.one()) == c.liouville()
    assert c.star(c.liouville()) == c.alg.one()
    assert c.star(dq) == dq and c.star(dp) == dp


def test_delta_examples():
    c = CHART1
    q, p = c.q(), c.p()
    assert c.delta(c.alg.gen(1) * q) == c.alg.one()
    assert c.delta(c.function(q * p)).is_zero()


def test_star_rejects_inhomogeneous():
    c = CHART1
    with pytest.raises(DegreeError):
        c.star(c.alg.one() + c.alg.gen(0))


def test_degenerate_omega_rejected():
    alg = ExteriorAlgebra(["a", "b", "c", "d"])
    with pytest.raises(ValueError):
        SymplecticContext(alg, alg.monomial(1, "a", "b"), lambda x: x)


def test_raised_matrix_inverts_omega():
    for ctx in (thurston().context, torus(3).context, CHART2.ctx):
        g = len(ctx.matrix)
        for mu in range(g):
            for s in range(g):
                assert sum(ctx.inverse[mu][nu] * ctx.matrix[nu][s] for nu in range(g)) == (mu == s)


@given(seeds)
def test_star_and_delta_agree_with_oracle(seed):
    rng = random.Random(seed)
    c = CHART1
    for k in range(3):
        a = c.random_form(rng, k)
        oa = to_oracle(c, a)
        assert o.is_zero(o.add(to_oracle(c, c.star(a)), o.scale(-1, o.star(oa))))
        assert o.is_zero(o.add(to_oracle(c, c.d(a)), o.scale(-1, o.d(oa))))
        if k:
            assert o.is_zero(o.add(to_oracle(c, c.delta(a)), o.scale(-1, o.delta(oa, k))))


@settings(max_examples=500)
@given(seeds, st.sampled_from([CHART1, CHART2]))
def test_star_squared_is_identity(seed, chart):
    rng = random.Random(seed)
    a = chart.random_form(rng, rng.randint(0, chart.dim))
    assert chart.star(chart.star(a)) == a


@settings(max_examples=500)
@given(seeds)
def test_star_squared_on_models(seed):
    rng = random.Random(seed)
    m = thurston()
    key = rng.choice([k for d in range(5) for k in m.alg.basis(d)])
    a = m.alg.form({key: rng.randint(1, 3)})
    assert hodge_star(m.context, hodge_star(m.context, a)) == a


@given(seeds, st.sampled_from([CHART1, CHART2]))
def test_delta_squares_to_zero(seed, chart):
    rng = random.Random(seed)
    a = chart.random_form(rng, rng.randint(2, chart.dim))
    assert chart.delta(chart.delta(a)).is_zero()


def _exactness_witness(chart, f):
    return -chart.star(chart.omega_power(chart.n - 1) * f)


def test_exactness_witness_sign_bootstrap():
    """In 2n = 2 the oracle fixes delta(-*(f omega^{n-1}/(n-1)!)) = df."""
    f = o.q**2 * o.p + 3 * o.p
    lhs = o.delta(o.scale(-1, o.star(o.function(f))), 2)
    assert o.is_zero(o.add(lhs, o.scale(-1, o.d(o.function(f)))))


@given(seeds, st.sampled_from([CHART1, CHART2]))
def test_exact_functions_are_canonical_boundaries(seed, chart):
    rng = random.Random(seed)
    f = chart.random_poly(rng)
    assert chart.delta(_exactness_witness(chart, f)) == chart.df(f)


def test_canonical_betti_examples():
    th, t4 = thurston(), torus(2)
    assert canonical_betti(th.context, 3) == 3
    assert canonical_betti(t4.context, 2) == 6
    for m in (th, t4, torus(1), torus(3)):
        assert canonical_betti(m.context, m.dim) == 1


def test_delta_of_functions_vanishes():
    assert delta_op(CHART2.ctx, CHART2.function(CHART2.q(1) * CHART2.p(2))).is_zero()


def test_commutator_example():
    c = CHART1
    lhs = c.liouville() * c.poisson(c.q(), c.p())
    assert lhs == wedge_all([c.df(c.q()), c.df(c.p()), c.omega_power(0)])
