"""Function calculus and 2-cocycles on the standard torus T^{2n} = R^{2n}/(tau Z)^{2n}.

Angles are interleaved ``(q1, p1, q2, p2, ...)`` with ``omega = sum dq_i ^ dp_i``,
the same convention as :mod:`symcoh.darboux`, so ``{q, p} = 1`` and
``X_g = sum -g_{p_i} d_{q_i} + g_{q_i} d_{p_i}``.  Integrals are exact values
in ``Q * tau^m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .exterior import ExteriorAlgebra, coefficient_of, divided_power, interior, wedge
from .trig import TauValue, Trig, TrigRing

Cochain2 = Callable[[Trig, Trig], object]
Cochain1 = Callable[[Trig], object]


def _check_dim(dim: int) -> int:
    if dim < 2 or dim % 2:
        raise ValueError(f"torus dimension must be even and positive, got {dim}")
    return dim


def coordinate_names(dim: int) -> list[str]:
    names = []
    for i in range(1, dim // 2 + 1):
        names += [f"q{i}", f"p{i}"]
    return names


def tbracket(f: Trig, g: Trig) -> Trig:
    """Poisson bracket ``sum_i f_{q_i} g_{p_i} - f_{p_i} g_{q_i}``."""
    if f.dim != g.dim:
        raise ValueError(f"torus dimension mismatch: {f.dim} vs {g.dim}")
    _check_dim(f.dim)
    out = Trig(f.dim)
    for i in range(0, f.dim, 2):
        out = out + f.diff(i) * g.diff(i + 1) - f.diff(i + 1) * g.diff(i)
    return out


def hamiltonian_components(g: Trig) -> list[Trig]:
    comps = []
    for i in range(0, g.dim, 2):
        comps += [-g.diff(i + 1), g.diff(i)]
    return comps


def integrate(f: Trig) -> TauValue:
    """``integral of f omega^n/n!``: constant Fourier coefficient times tau^{2n}."""
    return TauValue(f.constant_term(), f.dim)


def volume(dim: int) -> TauValue:
    return TauValue(1, dim)


def character(f: Trig) -> TauValue:
    return integrate(f)


def normalized_character(f: Trig) -> Fraction:
    """``(1/vol) * integral of f``; the tau powers cancel."""
    return (integrate(f) / volume(f.dim)).as_rational() if f.constant_term() else Fraction(0)


@dataclass(frozen=True)
class ConstantOneForm:
    """``alpha = sum a_mu dtheta^mu`` with rational components (always closed)."""

    components: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(Fraction(c) for c in self.components))
        _check_dim(len(self.components))

    @property
    def dim(self) -> int:
        return len(self.components)

    def on_vector(self, v: Sequence) -> object:
        """``alpha(v)`` for a vector field given by components (rational or trig)."""
        total = 0
        for a, vi in zip(self.components, v):
            if a:
                total = vi * a + total
        return total

    def on_hamiltonian(self, g: Trig) -> Trig:
        out = Trig(g.dim)
        for a, c in zip(self.components, hamiltonian_components(g)):
            if a:
                out = out + c * a
        return out

    @classmethod
    def random(cls, rng, dim: int, coeff_range: int = 3) -> "ConstantOneForm":
        return cls(tuple(rng.randint(-coeff_range, coeff_range) for _ in range(dim)))

    @classmethod
    def basis(cls, dim: int, mu: int) -> "ConstantOneForm":
        return cls(tuple(1 if i == mu else 0 for i in range(dim)))


# -- cocycles -----------------------------------------------------------------


def roger_cocycle(alpha: ConstantOneForm, f: Trig, g: Trig) -> TauValue:
    """``psi_alpha(X_f, X_g) = integral of f * alpha(X_g) omega^n/n!``."""
    if alpha.dim != f.dim:
        raise ValueError("one-form and functions live on different tori")
    return integrate(f * alpha.on_hamiltonian(g))


def exact_roger_cocycle(h: Trig, f: Trig, g: Trig) -> TauValue:
    """``psi_{dh}(X_f, X_g) = integral of f * dh(X_g) = integral of f {g, h}``."""
    return integrate(f * tbracket(g, h))


def ks_cocycle(f: Trig, g: Trig) -> Fraction:
    """Kostant-Souriau cocycle ``{f, g}`` evaluated at the basepoint theta = 0."""
    return tbracket(f, g).at_origin()


@lru_cache(maxsize=None)
def _torus_forms(dim: int):
    alg = ExteriorAlgebra([f"d{x}" for x in coordinate_names(dim)], TrigRing(dim))
    omega = alg.zero()
    for i in range(0, dim, 2):
        omega = omega + alg.monomial(1, i, i + 1)
    n = dim // 2
    return alg, divided_power(omega, n - 1), divided_power(omega, n)


def singular_cocycle(j: int, c, f: Trig, g: Trig) -> TauValue:
    """``psi_N(X_f, X_g) = integral over N of f dg ^ omega^{n-1}/(n-1)!`` for N = {theta_j = c*tau}.

    ``N`` carries the orientation of ``i_{d_j}(omega^n/n!)``; only ``c`` in
    {0, 1/2} is supported so that the restriction stays rational.
    """
    dim = _check_dim(f.dim)
    if not 0 <= j < dim:
        raise IndexError(f"coordinate index {j} out of range 0..{dim - 1}")
    c = Fraction(c)
    if c not in (0, Fraction(1, 2)):
        raise ValueError(f"unsupported slice angle {c}*tau (only 0 and tau/2)")
    alg, omega_pow, liouville = _torus_forms(dim)
    dg = alg.form({(mu,): g.diff(mu) for mu in range(dim)})
    integrand = wedge(dg, omega_pow) * f
    rest = tuple(mu for mu in range(dim) if mu != j)
    orient = coefficient_of(interior(j, liouville), rest).constant_term()
    coeff = coefficient_of(integrand, rest)
    if not coeff:
        return TauValue(0)
    return TauValue(coeff.restrict(j, c).constant_term() / orient, dim - 1)


# -- cochain calculus ---------------------------------------------------------


def cochain_differential(psi: Cochain2, f: Trig, g: Trig, h: Trig):
    """``dpsi(f, g, h) = -psi({f,g}, h) + psi({f,h}, g) - psi({g,h}, f)``."""
    return (-psi(tbracket(f, g), h) + psi(tbracket(f, h), g)) - psi(tbracket(g, h), f)


def coboundary(chi: Cochain1) -> Cochain2:
    """Differential of a 1-cochain: ``(dchi)(f, g) = -chi({f, g})``."""
    return lambda f, g: -chi(tbracket(f, g))


def ks_primitive(f: Trig) -> Fraction:
    """``chi(X_f) = f(0) - <f>``; its coboundary is ``-psi_KS`` on the compact torus."""
    return f.at_origin() - normalized_character(f)


KS_TRIVIALITY_SIGN = 1


def exact_primitive(h: Trig) -> Cochain1:
    """``chi_h(X_f) = integral of (f(0) - f) h omega^n/n!``."""
    return lambda f: integrate((Trig.const(f.dim, f.at_origin()) - f) * h)


def theta(alpha: ConstantOneForm, v: Sequence[Fraction]) -> Cochain1:
    """``theta_alpha(v)(X_f) = integral of alpha(v) (f - f(0)) omega^n/n!`` for constant v."""
    av = Fraction(alpha.on_vector([Fraction(x) for x in v]))
    return lambda f: integrate((f - Trig.const(f.dim, f.at_origin())) * av)


def directional(v: Sequence[Fraction], f: Trig) -> Trig:
    out = Trig(f.dim)
    for mu, c in enumerate(v):
        if c:
            out = out + f.diff(mu) * Fraction(c)
    return out


def lie_derivative(alpha: ConstantOneForm, v: Sequence[Fraction]) -> Cochain2:
    """``(L_v psi_alpha)(f, g) = -psi_alpha(v.f, g) - psi_alpha(f, v.g)``."""
    return lambda f, g: (-roger_cocycle(alpha, directional(v, f), g)
                         - roger_cocycle(alpha, f, directional(v, g)))


# -- defects checked by the cocycle suite -------------------------------------


def ks_triviality_defect(f: Trig, g: Trig, sign: int = KS_TRIVIALITY_SIGN):
    return ks_cocycle(f, g) + coboundary(ks_primitive)(f, g) * sign


def exact_collapse_defect(h: Trig, f: Trig, g: Trig) -> TauValue:
    """``psi_dh - dchi_h - <h> psi_KS`` with ``<h> = integral of h omega^n/n!``."""
    return (exact_roger_cocycle(h, f, g) - coboundary(exact_primitive(h))(f, g)
            - integrate(h) * ks_cocycle(f, g))


def symplectic_action_defect(alpha: ConstantOneForm, v: Sequence[Fraction], f: Trig,
                             g: Trig) -> TauValue:
    """``dtheta_alpha(v) - <alpha(v)> psi_KS - L_v psi_alpha``."""
    av = Fraction(alpha.on_vector([Fraction(x) for x in v]))
    mean = volume(f.dim) * av
    return (coboundary(theta(alpha, v))(f, g) - mean * ks_cocycle(f, g)
            - lie_derivative(alpha, v)(f, g))
