"""H^1 and H^2 of the Poisson, hamiltonian and symplectic Lie algebras from cohomology data.

The input is a :class:`CohomologyData`: the first Betti number, the pairing
``P[i][j] = integral of a_i ^ a_j ^ omega^{n-1}/(n-1)!`` and the 4-form
``Q[i][j][k][l] = integral of a_i ^ a_j ^ a_k ^ a_l ^ omega^{n-2}/(n-2)!`` on a
basis ``a_i`` of H^1, the volume, and whether the manifold is compact or a
compact manifold with one point removed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Sequence

from . import linalg
from .ce_model import CEModel, betti, check, form_label, h1_basis
from .exterior import divided_power, sort_sign, wedge_all


class Compactness(str, Enum):
    COMPACT = "compact"
    PUNCTURED = "punctured"


class DataError(ValueError):
    """Cohomology data violates an invariant."""


class DomainError(ValueError):
    """An argument lies outside the domain of a map."""


H2_ALGEBRAS = ("poisson_c", "poisson", "ham", "sp")
H1_ALGEBRAS = ("poisson_c0", "poisson_c", "poisson", "ham")

Matrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class CohomologyData:
    name: str
    b1: int
    labels: tuple[str, ...]
    vol: Fraction
    P: Matrix
    Q: tuple  # nested b1 x b1 x b1 x b1 tuple
    compactness: Compactness = Compactness.COMPACT
    b_top_minus_1: int | None = None
    B: Matrix | None = None  # pairing restricted to H^1_c x H^1 when given independently

    @property
    def compact(self) -> bool:
        return self.compactness is Compactness.COMPACT

    def q(self, i: int, j: int, k: int, l: int) -> Fraction:
        return self.Q[i][j][k][l]


def _zero_q(b: int) -> tuple:
    return tuple(tuple(tuple(tuple(Fraction(0) for _ in range(b)) for _ in range(b))
                       for _ in range(b)) for _ in range(b))


def _q_from_values(b: int, values) -> tuple:
    """Full alternating tensor from a callable on increasing index 4-tuples."""
    base = {idx: Fraction(values(idx)) for idx in combinations(range(b), 4)}
    q = [[[[Fraction(0)] * b for _ in range(b)] for _ in range(b)] for _ in range(b)]
    for idx, v in base.items():
        if not v:
            continue
        for perm in permutations(idx):
            sign, _ = sort_sign(perm)
            i, j, k, l = perm
            q[i][j][k][l] = v * sign
    return tuple(tuple(tuple(tuple(r) for r in m) for m in t) for t in q)


def validate_data(data: CohomologyData) -> CohomologyData:
    b = data.b1
    if b < 0:
        raise DataError("b1 must be nonnegative")
    if len(data.labels) != b:
        raise DataError(f"{len(data.labels)} labels for b1 = {b}")
    if data.vol <= 0:
        raise DataError(f"vol must be positive, got {data.vol}")
    if len(data.P) != b or any(len(r) != b for r in data.P):
        raise DataError("P must be b1 x b1")
    for i in range(b):
        for j in range(b):
            if data.P[i][j] != -data.P[j][i]:
                raise DataError(f"P is not antisymmetric at ({i}, {j})")
    try:
        for i in range(b):
            for j in range(b):
                for k in range(b):
                    for l in range(b):
                        v = data.Q[i][j][k][l]
                        # transpositions of adjacent slots flip the sign, repeats vanish
                        if (v != -data.Q[j][i][k][l] or v != -data.Q[i][k][j][l]
                                or v != -data.Q[i][j][l][k]):
                            raise DataError(f"Q is not alternating at {(i, j, k, l)}")
    except (IndexError, TypeError):
        raise DataError("Q must be a b1 x b1 x b1 x b1 tensor") from None
    if data.B is not None and (len(data.B) != b or any(len(r) != b for r in data.B)):
        raise DataError("B must be b1 x b1")
    return data


def _matrix(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def direct_data(name: str, P: Sequence[Sequence], vol=1, Q=None, labels=None,
                compactness: Compactness = Compactness.COMPACT, b_top_minus_1=None,
                B=None) -> CohomologyData:
    """Cohomology data entered by hand; ``Q`` may be a full tensor or a dict on increasing 4-tuples."""
    Pm = _matrix(P)
    b = len(Pm)
    if Q is None:
        Qt = _zero_q(b)
    elif isinstance(Q, dict):
        Qt = _q_from_values(b, lambda idx: Q.get(idx, 0))
    else:
        Qt = tuple(tuple(tuple(tuple(Fraction(x) for x in r) for r in m) for m in t) for t in Q)
    data = CohomologyData(
        name=name,
        b1=b,
        labels=tuple(labels) if labels is not None else tuple(f"a{i + 1}" for i in range(b)),
        vol=Fraction(vol),
        P=Pm,
        Q=Qt,
        compactness=compactness,
        b_top_minus_1=b if b_top_minus_1 is None and compactness is Compactness.COMPACT
        else b_top_minus_1,
        B=None if B is None else _matrix(B),
    )
    return validate_data(data)


def from_ce_model(model: CEModel) -> CohomologyData:
    check(model)
    basis = h1_basis(model)
    b = len(basis)
    n = model.n
    w1 = divided_power(model.omega, n - 1)
    w2 = divided_power(model.omega, n - 2)
    P = [[model.integrate(wedge_all([basis[i], basis[j], w1])) for j in range(b)]
         for i in range(b)]
    Q = _q_from_values(b, lambda idx: model.integrate(
        wedge_all([basis[k] for k in idx] + [w2])))
    return validate_data(CohomologyData(
        name=model.name,
        b1=b,
        labels=tuple(form_label(a) for a in basis),
        vol=model.vol,
        P=_matrix(P),
        Q=Q,
        compactness=Compactness.COMPACT,
        b_top_minus_1=betti(model, model.dim - 1),
    ))


def sphere(vol=1) -> CohomologyData:
    return direct_data("sphere", [], vol=vol, b_top_minus_1=0)


def surface(g: int, vol=1) -> CohomologyData:
    """Closed orientable surface of genus g, basis (a1, b1, a2, b2, ...) with P(a_i, b_i) = 1."""
    if g < 0:
        raise ValueError("genus must be nonnegative")
    b = 2 * g
    P = [[0] * b for _ in range(b)]
    labels = []
    for i in range(g):
        P[2 * i][2 * i + 1] = 1
        P[2 * i + 1][2 * i] = -1
        labels += [f"a{i + 1}", f"b{i + 1}"]
    return direct_data(f"surface{g}", P, vol=vol, labels=labels, b_top_minus_1=b)


def torus_direct(n: int) -> CohomologyData:
    """T^{2n} with omega = sum e_{2i-1} ^ e_{2i} and vol = 1, entered without a CE model.

    Pairings follow from the Liouville expansion: a_i ^ a_j ^ omega^{n-1}/(n-1)!
    is the top form iff {i, j} is one symplectic pair, and likewise Q is
    nonzero exactly on two distinct pairs.
    """
    b = 2 * n
    P = [[0] * b for _ in range(b)]
    for i in range(n):
        P[2 * i][2 * i + 1] = 1
        P[2 * i + 1][2 * i] = -1

    def qval(idx):
        i, j, k, l = idx
        pairs = (i % 2 == 0 and j == i + 1) and (k % 2 == 0 and l == k + 1)
        return 1 if pairs else 0

    return direct_data(f"torus{n}", P, vol=1, Q=_q_from_values(b, qval) if n >= 2 else None,
                       labels=[f"e{i + 1}" for i in range(b)], b_top_minus_1=b)


def puncture(data: CohomologyData) -> CohomologyData:
    if not data.compact:
        raise DataError(f"{data.name} is already punctured")
    return replace(data, name=f"{data.name}-punctured", compactness=Compactness.PUNCTURED)


# -- transgression ------------------------------------------------------------


def _b_matrix(data: CohomologyData) -> Matrix:
    return data.B if data.B is not None else data.P


def ker_B(data: CohomologyData) -> list[list[Fraction]]:
    """Classes ``a`` with ``(a, b) = 0`` for every b."""
    B = _b_matrix(data)
    b = data.b1
    rows = [[B[i][j] for i in range(b)] for j in range(b)]
    return linalg.nullspace(rows, b) if b else []


def _in_span(vec: Sequence[Fraction], basis: list[list[Fraction]]) -> bool:
    if not any(vec):
        return True
    if not basis:
        return False
    return linalg.rank(basis + [list(vec)]) == linalg.rank(basis)


def _transgression_linear(data: CohomologyData):
    """Coefficients T_i(j, k, l) so that T(a)(b_j, b_k, b_l) = sum_i a_i T_i(j, k, l)."""
    P = data.P
    inv = 1 / data.vol
    compact = data.compact

    def t(i, j, k, l):
        v = data.Q[i][j][k][l]
        if compact:
            v -= inv * (P[i][j] * P[k][l] + P[i][k] * P[l][j] + P[i][l] * P[j][k])
        return v

    return t


def transgression(data: CohomologyData, a: Sequence) -> dict[tuple[int, int, int], Fraction]:
    """The alternating 3-tensor T(a) on increasing index triples (zero entries omitted)."""
    a = [Fraction(x) for x in a]
    if len(a) != data.b1:
        raise DomainError(f"class has {len(a)} coordinates, b1 = {data.b1}")
    if not data.compact and not _in_span(a, ker_B(data)):
        raise DomainError("on a punctured manifold the transgression is defined only on Ker B")
    t = _transgression_linear(data)
    out = {}
    for j, k, l in combinations(range(data.b1), 3):
        v = sum((ai * t(i, j, k, l) for i, ai in enumerate(a) if ai), Fraction(0))
        if v:
            out[(j, k, l)] = v
    return out


def transgression_parts(data: CohomologyData, a: Sequence) -> tuple[dict, dict]:
    """The Q term and the cyclic (1/vol) P.P term of the compact formula, separately."""
    a = [Fraction(x) for x in a]
    P = data.P
    q_part, p_part = {}, {}
    for j, k, l in combinations(range(data.b1), 3):
        qv = sum((ai * data.Q[i][j][k][l] for i, ai in enumerate(a)), Fraction(0))
        pv = sum((ai * (P[i][j] * P[k][l] + P[i][k] * P[l][j] + P[i][l] * P[j][k])
                  for i, ai in enumerate(a)), Fraction(0)) / data.vol
        if qv:
            q_part[(j, k, l)] = qv
        if pv:
            p_part[(j, k, l)] = pv
    return q_part, p_part


def ker_T(data: CohomologyData) -> list[list[Fraction]]:
    """Kernel of a -> T(a); for punctured data it is computed inside Ker B."""
    b = data.b1
    t = _transgression_linear(data)
    rows = [[t(i, j, k, l) for i in range(b)] for j, k, l in combinations(range(b), 3)]
    if not data.compact:
        B = _b_matrix(data)
        rows += [[B[i][j] for i in range(b)] for j in range(b)]
    if not b:
        return []
    return linalg.nullspace(rows, b) if rows else linalg.identity(b)


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    label: str
    dim: int
    basis: tuple[tuple[Fraction, ...], ...] = ()


@dataclass(frozen=True)
class H2Report:
    algebra: str
    components: tuple[Component, ...] = field(default_factory=tuple)

    @property
    def total(self) -> int:
        return sum(c.dim for c in self.components)


@dataclass(frozen=True)
class H1Report:
    algebra: str
    dim: int


def _basis(vectors) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(v) for v in vectors)


def _unit_basis(b: int) -> tuple[tuple[Fraction, ...], ...]:
    return _basis(linalg.identity(b))


def h2(data: CohomologyData, algebra: str) -> H2Report:
    if algebra not in H2_ALGEBRAS:
        raise KeyError(f"unknown algebra {algebra!r}; known: {list(H2_ALGEBRAS)}")
    b = data.b1
    h1_label = "H¹_dR" if data.compact else "H¹_dR,c"
    if algebra in ("poisson_c", "poisson"):
        # on a punctured manifold both H^1_dR and H^1_dR,c are identified with the parent's H^1
        label = "H¹_dR" if algebra == "poisson_c" else h1_label
        return H2Report(algebra, (Component(label, b, _unit_basis(b)),))
    if algebra == "ham":
        comps = [Component(h1_label, b, _unit_basis(b))]
        if not data.compact:
            comps.append(Component("KS", 1))
        return H2Report(algebra, tuple(comps))
    comps = [Component("Λ²H¹*", comb(b, 2))]
    kt = ker_T(data)
    if data.compact:
        comps.append(Component("Ker T", len(kt), _basis(kt)))
    else:
        comps.append(Component("KS", 1))
        comps.append(Component("Ker B ∩ Ker T", len(kt), _basis(kt)))
    return H2Report(algebra, tuple(comps))


def h1(data: CohomologyData, algebra: str) -> H1Report:
    if algebra not in H1_ALGEBRAS:
        raise KeyError(f"unknown algebra {algebra!r}; known: {list(H1_ALGEBRAS)}")
    dims = {
        "poisson_c0": 0,
        "poisson_c": 1,
        "poisson": 1 if data.compact else 0,
        "ham": 0,
    }
    return H1Report(algebra, dims[algebra])


def center_dim(data: CohomologyData) -> int:
    if data.b_top_minus_1 is None:
        raise DataError(f"{data.name} does not record dim H^(2n-1)")
    return data.b_top_minus_1 + (0 if data.compact else 1)
