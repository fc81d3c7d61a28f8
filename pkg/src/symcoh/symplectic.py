"""Symplectic Hodge star, canonical homology operator and canonical homology.

Works over any context with a constant symplectic form: a Chevalley-Eilenberg
model (left-invariant frame, rational coefficients) or a Darboux chart
(polynomial or trigonometric coefficients).  The differential of the context
is passed in as a callable.

Conventions (all checked in the test suite rather than assumed):

* ``omega = sum_{mu<nu} W[mu][nu] e_mu ^ e_nu`` and ``omega(v, w) = v^T W w``;
* the raised form ``Winv`` is the matrix inverse, ``Winv @ W = 1``;
* the star of a basis form ``e_{i1} ^ ... ^ e_{ik}`` is
  ``i_{w_ik} ... i_{w_i1} (omega^n / n!)`` with ``w_i = sum_nu Winv[i][nu] d_nu``;
  this is the index-raising contraction with the 1/k! already cancelled
  against the k! equal permutation terms;
* the Poisson bivector is ``pi^{mu nu} = {x^mu, x^nu} = Winv[nu][mu]``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from . import linalg
from .exterior import DegreeError, ExteriorAlgebra, Form, accumulate, divided_power, interior


class SymplecticContext:
    def __init__(self, alg: ExteriorAlgebra, omega: Form, d: Callable[[Form], Form]):
        if alg.size % 2:
            raise ValueError("a symplectic context needs an even number of generators")
        if not omega.is_homogeneous(2):
            raise DegreeError("omega must be a 2-form")
        self.alg = alg
        self.omega = omega
        self.d = d
        self.n = alg.size // 2
        ring = alg.ring
        g = alg.size
        w = [[Fraction(0)] * g for _ in range(g)]
        for (i, j), c in omega.terms.items():
            c = ring.to_rational(c)
            w[i][j] = c
            w[j][i] = -c
        self.matrix = w
        try:
            self.inverse = linalg.inverse(w)
        except ZeroDivisionError:
            raise ValueError("omega is degenerate") from None
        self.liouville_form = divided_power(omega, self.n)
        if self.liouville_form.is_zero():
            raise ValueError("omega^n/n! vanishes")
        self._raised = [
            [ring.coerce(self.inverse[mu][nu]) for nu in range(g)] for mu in range(g)
        ]
        self._star_cache: dict[tuple[int, ...], Form] = {}
        self._powers: dict[int, Form] = {}

    # -- basic tensors -------------------------------------------------------
    def raised(self, mu: int) -> list:
        """Components of ``w_mu = Winv[mu][nu] d_nu`` as ring scalars."""
        return self._raised[mu]

    def bivector(self, mu: int, nu: int) -> Fraction:
        return self.inverse[nu][mu]

    def omega_power(self, k: int) -> Form:
        """``omega^k / k!`` (zero for negative k)."""
        if k not in self._powers:
            self._powers[k] = divided_power(self.omega, k)
        return self._powers[k]

    def pairing(self, v, w):
        """``omega(v, w)`` for vectors given as component sequences."""
        g = self.alg.size
        total = self.alg.ring.zero
        for mu in range(g):
            if v[mu] == 0:
                continue
            for nu in range(g):
                c = self.matrix[mu][nu]
                if c and w[nu] != 0:
                    total = total + v[mu] * w[nu] * c
        return total

    def star_basis(self, key: tuple[int, ...]) -> Form:
        cached = self._star_cache.get(key)
        if cached is None:
            cached = self.liouville_form
            for mu in key:
                cached = interior(self._raised[mu], cached)
            self._star_cache[key] = cached
        return cached


def liouville(ctx: SymplecticContext) -> Form:
    return ctx.liouville_form


def _require_degree(a: Form, k: int | None) -> int:
    if a.is_zero():
        return -1 if k is None else k
    deg = a.degree()
    if k is not None and deg != k:
        raise DegreeError(f"expected a {k}-form, got degree {deg}")
    return deg


def hodge_star(ctx: SymplecticContext, a: Form) -> Form:
    """Symplectic Hodge star of a homogeneous form; coefficients pass through."""
    _require_degree(a, None)
    out: dict = {}
    for key, c in a.terms.items():
        for k2, s in ctx.star_basis(key).terms.items():
            accumulate(out, k2, s * c)
    return Form(ctx.alg, out)


def delta_op(ctx: SymplecticContext, a: Form) -> Form:
    """Canonical homology operator ``(-1)^(k+1) * d *`` on a homogeneous k-form."""
    k = _require_degree(a, None)
    if k <= 0:
        return ctx.alg.zero()
    out = hodge_star(ctx, ctx.d(hodge_star(ctx, a)))
    return out if k % 2 else -out


def interior_bivector(ctx: SymplecticContext, a: Form) -> Form:
    """``i_pi a = sum_{mu<nu} pi^{mu nu} i_{d_nu} i_{d_mu} a``, so ``i_pi(df ^ dg) = {f, g}``."""
    g = ctx.alg.size
    out = ctx.alg.zero()
    for mu in range(g):
        inner = interior(mu, a)
        if inner.is_zero():
            continue
        for nu in range(mu + 1, g):
            c = ctx.bivector(mu, nu)
            if c:
                out = out + interior(nu, inner) * c
    return out


def operator_matrix(ctx_alg: ExteriorAlgebra, op: Callable[[Form], Form], k_from: int,
                    k_to: int) -> list[list[Fraction]]:
    """Matrix (rows = target basis, cols = source basis) of a rational linear map on forms."""
    src = ctx_alg.basis(k_from) if 0 <= k_from <= ctx_alg.size else []
    dst = ctx_alg.basis(k_to) if 0 <= k_to <= ctx_alg.size else []
    row_of = {key: i for i, key in enumerate(dst)}
    m = [[Fraction(0)] * len(src) for _ in dst]
    ring = ctx_alg.ring
    for j, key in enumerate(src):
        image = op(Form(ctx_alg, {key: ring.one}))
        for k2, c in image.terms.items():
            m[row_of[k2]][j] = ring.to_rational(c)
    return m


def homology_dim(alg: ExteriorAlgebra, op: Callable[[Form], Form], k: int, step: int) -> int:
    """dim ker(op on degree k) - rank(op from degree k - step), with op of degree ``step``."""
    if not 0 <= k <= alg.size:
        return 0
    n_k = len(alg.basis(k))
    out_mat = operator_matrix(alg, op, k, k + step)
    ker = n_k - (linalg.rank(out_mat) if out_mat and out_mat[0] else 0)
    in_mat = operator_matrix(alg, op, k - step, k)
    im = linalg.rank(in_mat) if in_mat and in_mat[0] else 0
    return ker - im


def canonical_betti(ctx: SymplecticContext, k: int) -> int:
    """dim ker(delta on k-forms) - dim im(delta from (k+1)-forms), exactly."""
    return homology_dim(ctx.alg, lambda a: delta_op(ctx, a), k, -1)
