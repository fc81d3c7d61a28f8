"""Finite Chevalley-Eilenberg models of compact symplectic manifolds.

A model is the exterior algebra on the dual of a nilpotent Lie algebra,
viewed as left-invariant forms on a compact quotient: a differential on the
degree-1 generators, a closed nondegenerate 2-form ``omega``, and the
orientation ``mu = e_1 ^ ... ^ e_2n`` (generators in declaration order) with
``integral(mu) = vol / liouville_coefficient`` so that ``omega^n/n!``
integrates to ``vol``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import linalg
from .exterior import ContextError, ExteriorAlgebra, Form, accumulate, coefficient_of, divided_power, wedge
from .symplectic import SymplecticContext, canonical_betti as _canonical_betti, homology_dim


class ModelError(ValueError):
    """A CE model violates one of its invariants."""

    def __init__(self, report: "ValidationReport"):
        super().__init__("; ".join(f"{f.invariant}: {f.witness}" for f in report.failures))
        self.report = report


@dataclass(frozen=True)
class Failure:
    invariant: str
    witness: str


@dataclass(frozen=True)
class ValidationReport:
    model: str
    failures: tuple[Failure, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.failures


class CEModel:
    """Immutable CE model; ``d`` maps generator names to their (degree-2) differentials."""

    def __init__(self, name: str, generators: Sequence[str], d: Mapping[str, Form],
                 omega: Form, vol=None):
        self.name = name
        self.alg = ExteriorAlgebra(generators)
        self.generators = self.alg.names
        table = []
        for g in self.generators:
            img = d.get(g)
            if img is None:
                img = self.alg.zero()
            elif img.alg != self.alg:
                raise ContextError(f"d({g}) is not over the model's generators")
            table.append(img)
        unknown = set(d) - set(self.generators)
        if unknown:
            raise KeyError(f"differential given for unknown generators {sorted(unknown)}")
        self.d_table = tuple(table)
        if omega.alg != self.alg:
            raise ContextError("omega is not over the model's generators")
        self.omega = omega
        self._vol = None if vol is None else Fraction(vol)

    def __repr__(self):
        return f"CEModel({self.name!r}, {list(self.generators)})"

    @property
    def dim(self) -> int:
        return self.alg.size

    @property
    def n(self) -> int:
        return self.alg.size // 2

    @property
    def orientation(self) -> tuple[int, ...]:
        return tuple(range(self.alg.size))

    @cached_property
    def liouville_coefficient(self) -> Fraction:
        return coefficient_of(divided_power(self.omega, self.n), self.orientation)

    @property
    def vol(self) -> Fraction:
        return self.liouville_coefficient if self._vol is None else self._vol

    @property
    def declared_vol(self) -> Fraction | None:
        return self._vol

    def integrate(self, top: Form) -> Fraction:
        """Integral of a top-degree invariant form; ``omega^n/n!`` integrates to ``vol``."""
        c = coefficient_of(top, self.orientation)
        if not c:
            return Fraction(0)
        return c * self.vol / self.liouville_coefficient

    @cached_property
    def context(self) -> SymplecticContext:
        return SymplecticContext(self.alg, self.omega, lambda a: d_ce(self, a))

    def d(self, a: Form) -> Form:
        return d_ce(self, a)


def d_ce(model: CEModel, a: Form) -> Form:
    """The degree +1 derivation extending the differential table (zero on constants)."""
    if a.alg != model.alg:
        raise ContextError("form is not over the model's generators")
    out: dict = {}
    for key, c in a.terms.items():
        for pos, i in enumerate(key):
            img = model.d_table[i]
            if img.is_zero():
                continue
            left = Form(model.alg, {key[:pos]: model.alg.ring.one})
            right = Form(model.alg, {key[pos + 1:]: model.alg.ring.one})
            # d(g) has even degree, so it commutes past the left factor; only
            # the Koszul sign of moving d past pos generators appears
            term = wedge(wedge(left, img), right)
            sign = -1 if pos & 1 else 1
            for k2, v in term.terms.items():
                accumulate(out, k2, v * c * sign)
    return Form(model.alg, out)


def validate(model: CEModel) -> ValidationReport:
    failures = []
    for g, img in zip(model.generators, model.d_table):
        if not img.is_homogeneous(2):
            failures.append(Failure("d-degree", f"d({g}) is not a 2-form"))
            continue
        dd = d_ce(model, img)
        if not dd.is_zero():
            failures.append(Failure("d^2=0", f"d(d({g})) = {dd!r}"))
    if not model.omega.is_homogeneous(2) or model.omega.is_zero():
        failures.append(Failure("omega-degree", "omega is not a nonzero 2-form"))
    else:
        dw = d_ce(model, model.omega)
        if not dw.is_zero():
            failures.append(Failure("closed", f"d(omega) = {dw!r}"))
    if model.dim % 2:
        failures.append(Failure("even-dimension", f"{model.dim} generators"))
    c = model.liouville_coefficient if model.dim % 2 == 0 else Fraction(0)
    if not c:
        failures.append(Failure("nondegenerate", "omega^n/n! = 0"))
    elif c < 0:
        failures.append(Failure("orientation",
                                f"omega^n/n! = {c} * mu; reorder generators so the coefficient is positive"))
    if model.declared_vol is not None and model.declared_vol <= 0:
        failures.append(Failure("vol>0", f"vol = {model.declared_vol}"))
    return ValidationReport(model.name, tuple(failures))


def check(model: CEModel) -> CEModel:
    report = validate(model)
    if not report.ok:
        raise ModelError(report)
    return model


def d_matrix(model: CEModel, k: int) -> list[list[Fraction]]:
    from .symplectic import operator_matrix

    return operator_matrix(model.alg, model.d, k, k + 1)


def betti(model: CEModel, k: int) -> int:
    return homology_dim(model.alg, model.d, k, +1)


def betti_numbers(model: CEModel) -> tuple[int, ...]:
    return tuple(betti(model, k) for k in range(model.dim + 1))


def canonical_betti(model: CEModel, k: int) -> int:
    return _canonical_betti(model.context, k)


def h1_basis(model: CEModel) -> list[Form]:
    """Closed 1-forms representing H^1 (degree-1 exact forms vanish in a CE model)."""
    m = d_matrix(model, 1)
    vectors = linalg.nullspace(m, model.dim) if m else linalg.identity(model.dim)
    return [model.alg.form({(i,): c for i, c in enumerate(v) if c}) for v in vectors]


def form_label(form: Form) -> str:
    if len(form.terms) == 1:
        (key, c), = form.terms.items()
        if c == 1 and len(key) == 1:
            return form.alg.names[key[0]]
    return repr(form)


# -- catalog -------------------------------------------------------------


def torus(n: int) -> CEModel:
    """Abelian model of T^{2n}, omega = e1^e2 + e3^e4 + ..."""
    names = [f"e{i + 1}" for i in range(2 * n)]
    alg = ExteriorAlgebra(names)
    omega = alg.zero()
    for i in range(n):
        omega = omega + alg.monomial(1, 2 * i, 2 * i + 1)
    return CEModel(f"torus{n}", names, {}, omega)


def thurston() -> CEModel:
    """Kodaira-Thurston nilmanifold: dh* = -x*^p*, omega = h*^x* + z*^p*.

    Generators are declared as (x*, p*, z*, h*), for which omega^2/2 is +1
    times the orientation form and H^1 comes out as (x*, p*, z*).
    """
    names = ["x*", "p*", "z*", "h*"]
    alg = ExteriorAlgebra(names)
    d = {"h*": alg.monomial(-1, "x*", "p*")}
    omega = alg.monomial(1, "h*", "x*") + alg.monomial(1, "z*", "p*")
    return CEModel("thurston", names, d, omega, vol=1)


CATALOG = {
    "torus1": lambda: torus(1),
    "torus2": lambda: torus(2),
    "torus3": lambda: torus(3),
    "thurston": thurston,
}
