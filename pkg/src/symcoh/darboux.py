"""Polynomial differential forms on a Darboux chart R^{2n}.

Coordinates are interleaved ``(q1, p1, q2, p2, ...)`` and
``omega = sum_i dq_i ^ dp_i``, so ``omega^n/n!`` is ``+dq1^dp1^...``.
Hamiltonian vector fields follow ``df = -i_{X_f} omega`` and
``{f, g} = omega(X_f, X_g)``, which gives ``{q, p} = 1``.

Nothing here integrates: every identity is checked as an exact equality of
forms, which is stronger than the integrated statements it stands in for.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Sequence

from .exterior import DegreeError, ExteriorAlgebra, Form, accumulate, interior, wedge, wedge_all
from .poly import Poly, PolyRing
from .symplectic import SymplecticContext, delta_op, hodge_star, interior_bivector

DEFAULT_SEED = 0xC0FFEE


class PolyVectorField:
    """Vector field with polynomial components in the coordinate basis."""

    __slots__ = ("components",)

    def __init__(self, components: Sequence[Poly]):
        self.components = tuple(components)

    def __eq__(self, other):
        return isinstance(other, PolyVectorField) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"PolyVectorField({list(self.components)!r})"

    def __add__(self, other):
        return PolyVectorField([a + b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return PolyVectorField([-a for a in self.components])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return PolyVectorField([a * c for a in self.components])

    __rmul__ = __mul__

    def apply(self, f: Poly) -> Poly:
        """Directional derivative ``v(f)``."""
        total = Poly(f.nvars)
        for i, vi in enumerate(self.components):
            if vi:
                total = total + vi * f.diff(i)
        return total

    def bracket(self, other: "PolyVectorField") -> "PolyVectorField":
        """Lie bracket ``[v, w]^mu = v(w^mu) - w(v^mu)``."""
        return PolyVectorField(
            [self.apply(wm) - other.apply(vm) for vm, wm in zip(self.components, other.components)]
        )

    def is_zero(self) -> bool:
        return not any(self.components)


class DarbouxChart:
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("chart dimension must be positive")
        self.n = n
        names = []
        for i in range(1, n + 1):
            names += [f"q{i}", f"p{i}"]
        self.coords = tuple(names)
        self.ring = PolyRing(names)
        self.alg = ExteriorAlgebra([f"d{x}" for x in names], self.ring)
        omega = self.alg.zero()
        for i in range(n):
            omega = omega + self.alg.monomial(1, 2 * i, 2 * i + 1)
        self.omega = omega
        self.ctx = SymplecticContext(self.alg, omega, self.d)

    def __repr__(self):
        return f"DarbouxChart(n={self.n})"

    @property
    def dim(self) -> int:
        return 2 * self.n

    # -- scalars ---------------------------------------------------------------
    def var(self, name: str | int) -> Poly:
        return self.ring.var(name)

    def q(self, i: int = 1) -> Poly:
        return self.ring.var(2 * (i - 1))

    def p(self, i: int = 1) -> Poly:
        return self.ring.var(2 * (i - 1) + 1)

    def const(self, c) -> Poly:
        return self.ring.coerce(c)

    def function(self, f) -> Form:
        """A polynomial as a 0-form."""
        return self.alg.scalar(f)

    # -- calculus --------------------------------------------------------------
    def d(self, a: Form) -> Form:
        return d_poly(a)

    def df(self, f: Poly) -> Form:
        return d_poly(self.alg.scalar(f))

    def star(self, a: Form) -> Form:
        return hodge_star(self.ctx, a)

    def delta(self, a: Form) -> Form:
        return delta_op(self.ctx, a)

    def i_pi(self, a: Form) -> Form:
        return interior_bivector(self.ctx, a)

    def omega_power(self, k: int) -> Form:
        return self.ctx.omega_power(k)

    def liouville(self) -> Form:
        return self.ctx.liouville_form

    def ham_vf(self, f: Poly) -> PolyVectorField:
        """X_f with ``df + i_{X_f} omega = 0``; X_f = sum_i -f_{p_i} d_{q_i} + f_{q_i} d_{p_i}."""
        comps = [None] * self.dim
        for i in range(self.n):
            qi, pi = 2 * i, 2 * i + 1
            comps[qi] = -f.diff(pi)
            comps[pi] = f.diff(qi)
        return PolyVectorField(comps)

    def omega_eval(self, v: PolyVectorField, w: PolyVectorField) -> Poly:
        return self.ctx.pairing(v.components, w.components)

    def poisson(self, f: Poly, g: Poly) -> Poly:
        return self.omega_eval(self.ham_vf(f), self.ham_vf(g))

    def contract(self, v: PolyVectorField, a: Form) -> Form:
        return interior(v.components, a)

    def one_form(self, components: Sequence) -> Form:
        return self.alg.form({(i,): c for i, c in enumerate(components)})

    def evaluate(self, alpha: Form, v: PolyVectorField) -> Poly:
        """``alpha(v)`` for a 1-form alpha."""
        return self.ring.coerce(interior(v.components, alpha).terms.get((), self.ring.zero))

    def ext_bracket(self, alpha: Form, beta: Form) -> Form:
        """Representative ``delta(alpha) * d(delta(beta))`` of the extension bracket."""
        for x in (alpha, beta):
            if not x.is_homogeneous(1):
                raise DegreeError("the extension bracket takes 1-forms")
        da = self.delta(alpha)
        ddb = self.d(self.delta(beta))
        return ddb * _scalar(da, self.ring)

    # -- random inputs --------------------------------------------------------
    def random_poly(self, rng: random.Random, max_degree: int = 3) -> Poly:
        return self.ring.random(rng, max_degree=max_degree)

    def random_form(self, rng: random.Random, k: int, max_degree: int = 3,
                    max_terms: int = 3) -> Form:
        basis = self.alg.basis(k)
        out: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            key = basis[rng.randrange(len(basis))]
            accumulate(out, key, self.random_poly(rng, max_degree))
        return Form(self.alg, out)

    def random_vector_field(self, rng: random.Random, max_degree: int = 2) -> PolyVectorField:
        return PolyVectorField(
            [self.random_poly(rng, max_degree) if rng.random() < 0.7 else self.ring.zero
             for _ in range(self.dim)]
        )

    def random_closed_one_form(self, rng: random.Random) -> Form:
        """``dh`` plus a constant 1-form: closed by construction."""
        consts = [self.const(rng.randint(-3, 3)) for _ in range(self.dim)]
        return self.df(self.random_poly(rng)) + self.one_form(consts)


def _scalar(a: Form, ring) -> Poly:
    if any(len(k) for k in a.terms):
        raise DegreeError("expected a 0-form")
    return a.terms.get((), ring.zero)


def d_poly(a: Form) -> Form:
    """Coefficient-wise exterior derivative on a polynomial chart."""
    alg = a.alg
    out: dict = {}
    for key, c in a.terms.items():
        for mu in range(alg.size):
            if mu in key:
                continue
            dc = c.diff(mu)
            if not dc:
                continue
            pos = sum(1 for i in key if i < mu)
            new = key[:pos] + (mu,) + key[pos:]
            accumulate(out, new, -dc if pos & 1 else dc)
    return Form(alg, out)


# -- identity registry ---------------------------------------------------------


@dataclass
class IdentityResult:
    name: str
    defect: Form
    inputs: dict

    @property
    def ok(self) -> bool:
        return self.defect.is_zero()


def _scalar_form(chart: DarbouxChart, f: Poly) -> Form:
    return chart.function(f)


def _star_formula(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    k = rng.randint(0, min(2, chart.dim))
    fs = [chart.random_poly(rng) for _ in range(k + 1)]
    lhs_form = wedge_all([chart.df(f) for f in fs[1:]], chart.alg) * fs[0]
    lhs = chart.star(lhs_form)
    rhs = chart.liouville()
    for f in fs[1:]:
        rhs = chart.contract(chart.ham_vf(f), rhs)
    rhs = rhs * fs[0]
    if k % 2:
        rhs = -rhs
    return IdentityResult("star-formula", lhs - rhs, {"k": k, "f": fs})


def _delta_k1(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    f0, f1 = chart.random_poly(rng), chart.random_poly(rng)
    lhs = chart.delta(chart.df(f1) * f0)
    return IdentityResult("delta-k1", lhs - _scalar_form(chart, chart.poisson(f0, f1)),
                          {"f": [f0, f1]})


def _delta_k2(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    f0, f1, f2 = (chart.random_poly(rng) for _ in range(3))
    lhs = chart.delta(wedge(chart.df(f1), chart.df(f2)) * f0)
    rhs = (chart.df(f2) * chart.poisson(f0, f1)
           - chart.df(f1) * chart.poisson(f0, f2)
           - chart.df(chart.poisson(f1, f2)) * f0)
    return IdentityResult("delta-k2", lhs - rhs, {"f": [f0, f1, f2]})


def _delta_pi(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    k = rng.randint(0, chart.dim)
    a = chart.random_form(rng, k)
    rhs = chart.i_pi(chart.d(a)) - chart.d(chart.i_pi(a))
    return IdentityResult("delta-pi", chart.delta(a) - rhs, {"k": k, "a": a})


def _bracket_antisym(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    a, b = chart.random_form(rng, 1), chart.random_form(rng, 1)
    prod = _scalar(chart.delta(a), chart.ring) * _scalar(chart.delta(b), chart.ring)
    defect = chart.ext_bracket(a, b) + chart.ext_bracket(b, a) - chart.df(prod)
    return IdentityResult("bracket-antisym", defect, {"alpha": a, "beta": b})


# Relative signs of the two exact correction terms; pinned against an
# independent 2-dimensional expansion in the test suite.
JACOBI_DELTA_SIGN = -1
JACOBI_EXACT_SIGN = -1


def jacobi_defect(chart: DarbouxChart, alphas: Sequence[Form], delta_sign: int = JACOBI_DELTA_SIGN,
                  exact_sign: int = JACOBI_EXACT_SIGN) -> Form:
    a1, a2, a3 = alphas
    f1, f2, f3 = (_scalar(chart.delta(a), chart.ring) for a in alphas)
    cyc = (chart.ext_bracket(chart.ext_bracket(a1, a2), a3)
           + chart.ext_bracket(chart.ext_bracket(a2, a3), a1)
           + chart.ext_bracket(chart.ext_bracket(a3, a1), a2))
    corr_delta = chart.delta(wedge(chart.df(f2), chart.df(f3)) * f1)
    corr_exact = chart.df(f1 * chart.poisson(f2, f3))
    return cyc + corr_delta * delta_sign + corr_exact * exact_sign


def _bracket_jacobi(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    alphas = [chart.random_form(rng, 1, max_degree=2) for _ in range(3)]
    return IdentityResult("bracket-jacobi", jacobi_defect(chart, alphas), {"alpha": alphas})


def _cyclic_4term(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    alpha = chart.random_form(rng, 1)
    v, v1, v2, v3 = (chart.random_vector_field(rng, 1) for _ in range(4))
    top = chart.liouville()
    first = (top * chart.evaluate(alpha, v)
             - wedge_all([alpha, chart.contract(v, chart.omega), chart.omega_power(chart.n - 1)]))
    cyc = chart.ring.zero
    for a, b, c in ((v1, v2, v3), (v2, v3, v1), (v3, v1, v2)):
        cyc = cyc + chart.evaluate(alpha, a) * chart.omega_eval(b, c)
    iw = [chart.contract(x, chart.omega) for x in (v1, v2, v3)]
    second = top * cyc - wedge_all([alpha, *iw, chart.omega_power(chart.n - 2)])
    return IdentityResult("cyclic-4term", first + second,
                          {"alpha": alpha, "v": [v, v1, v2, v3]})


def _commutator_exact(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    g, h = chart.random_poly(rng), chart.random_poly(rng)
    lhs = chart.liouville() * chart.poisson(g, h)
    rhs = wedge_all([chart.df(g), chart.df(h), chart.omega_power(chart.n - 1)])
    return IdentityResult("commutator-exact", lhs - rhs, {"g": g, "h": h})


# Sign of the exact term in  alpha ^ *delta(F) + s * d(alpha ^ *F) = 0  for closed alpha;
# pinned by the 2-dimensional bootstrap in the test suite.
CLOSED_ALPHA_SIGN = -1


def closed_alpha_defect(chart: DarbouxChart, alpha: Form, F: Form,
                        sign: int = CLOSED_ALPHA_SIGN) -> Form:
    lhs = wedge(alpha, chart.star(chart.delta(F)))
    exact = chart.d(wedge(alpha, chart.star(F)))
    return lhs + exact * sign


def _closed_alpha(chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    alpha = chart.random_closed_one_form(rng)
    F = chart.random_form(rng, 2)
    return IdentityResult("closed-alpha-exactness", closed_alpha_defect(chart, alpha, F),
                          {"alpha": alpha, "F": F})


IDENTITIES: dict[str, Callable[[DarbouxChart, random.Random], IdentityResult]] = {
    "star-formula": _star_formula,
    "delta-k1": _delta_k1,
    "delta-k2": _delta_k2,
    "delta-pi": _delta_pi,
    "bracket-antisym": _bracket_antisym,
    "bracket-jacobi": _bracket_jacobi,
    "cyclic-4term": _cyclic_4term,
    "commutator-exact": _commutator_exact,
    "closed-alpha-exactness": _closed_alpha,
}

ALIASES = dict(zip("abcdefghi", IDENTITIES))


def case_rng(seed: int, name: str, dim: int, case: int) -> random.Random:
    """Independent, reproducible stream per (seed, identity, dimension, case)."""
    return random.Random(f"{seed}:{name}:{dim}:{case}")


def verify_identity(name: str, chart: DarbouxChart, rng: random.Random) -> IdentityResult:
    """Evaluate one registered identity on random inputs drawn from ``rng``; ok iff defect is 0."""
    name = ALIASES.get(name, name)
    try:
        fn = IDENTITIES[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: {sorted(IDENTITIES)}") from None
    return fn(chart, rng)
