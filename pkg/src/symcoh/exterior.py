"""Sparse exterior algebra over ordered generators with exact coefficients.

A :class:`Form` maps strictly increasing index tuples to nonzero scalars of a
single coefficient ring.  The ring is anything with exact ``+ - *`` and
equality against ``0`` (``Fraction``, :class:`symcoh.poly.Poly`,
:class:`symcoh.trig.Trig`); the owning :class:`ExteriorAlgebra` records which
one is in use.  Indices are 0-based.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence


class ContextError(ValueError):
    """Forms from different generator contexts were combined."""


class DegreeError(ValueError):
    """An operation needed a homogeneous form of a given degree."""


class Rationals:
    """The coefficient ring QQ, realised by :class:`fractions.Fraction`."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x) -> Fraction:
        return Fraction(x)

    def to_rational(self, x) -> Fraction:
        return Fraction(x)

    def __repr__(self):
        return "QQ"


QQ = Rationals()


def sort_sign(seq: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on repeats."""
    s = list(seq)
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(s)):
        j = i
        while j > 0 and s[j - 1] > s[j]:
            s[j - 1], s[j] = s[j], s[j - 1]
            sign = -sign
            j -= 1
        if j > 0 and s[j - 1] == s[j]:
            return 0, ()
    return sign, tuple(s)


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """(-1)^(number of pairs i in a, j in b with i > j); 0 if they share an index."""
    inv = 0
    j = 0
    for i in a:
        while j < len(b) and b[j] < i:
            j += 1
        if j < len(b) and b[j] == i:
            return 0
        inv += j
    return -1 if inv & 1 else 1


class ExteriorAlgebra:
    """Generator context: names of the degree-1 generators and a coefficient ring."""

    def __init__(self, names: Sequence[str], ring=QQ):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        self.ring = ring
        self.size = len(self.names)

    def __repr__(self):
        return f"ExteriorAlgebra({list(self.names)!r}, {self.ring!r})"

    def __eq__(self, other):
        return (
            isinstance(other, ExteriorAlgebra)
            and self.names == other.names
            and self.ring == other.ring
        )

    def __hash__(self):
        return hash((self.names, repr(self.ring)))

    def index(self, g: int | str) -> int:
        if isinstance(g, str):
            try:
                return self.names.index(g)
            except ValueError:
                raise KeyError(f"unknown generator {g!r}") from None
        if not 0 <= g < self.size:
            raise IndexError(f"generator index {g} out of range 0..{self.size - 1}")
        return g

    def basis(self, k: int) -> list[tuple[int, ...]]:
        """Canonical basis of degree k, in lexicographic order."""
        return list(combinations(range(self.size), k))

    def zero(self) -> "Form":
        return Form(self, {})

    def scalar(self, c) -> "Form":
        c = self.ring.coerce(c)
        return Form(self, {(): c} if c != 0 else {})

    def one(self) -> "Form":
        return self.scalar(1)

    def gen(self, g: int | str) -> "Form":
        return Form(self, {(self.index(g),): self.ring.one})

    def monomial(self, coeff, *gens: int | str) -> "Form":
        """``coeff * g1 ^ g2 ^ ...``; the generators may be given in any order."""
        idx = [self.index(g) for g in gens]
        sign, key = sort_sign(idx)
        if sign == 0:
            return self.zero()
        c = self.ring.coerce(coeff) * sign
        return Form(self, {key: c} if c != 0 else {})

    def form(self, terms: Mapping[Sequence[int | str], object] | Iterable) -> "Form":
        """Build a form from ``{indices: coeff}`` (indices in any order, names allowed)."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[tuple[int, ...], object] = {}
        for idx, c in items:
            sign, key = sort_sign([self.index(g) for g in idx])
            if sign == 0:
                continue
            c = self.ring.coerce(c) * sign
            accumulate(out, key, c)
        return Form(self, out)

    def label(self, key: tuple[int, ...]) -> str:
        return "^".join(self.names[i] for i in key) if key else "1"


def accumulate(out: dict, key, c) -> None:
    if key in out:
        s = out[key] + c
        if s == 0:
            del out[key]
        else:
            out[key] = s
    elif c != 0:
        out[key] = c


class Form:
    """Element of an exterior algebra.  Immutable by convention."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: ExteriorAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    # -- inspection -------------------------------------------------------
    def degrees(self) -> set[int]:
        return {len(k) for k in self.terms}

    def degree(self) -> int:
        """The degree of a nonzero homogeneous form."""
        ds = self.degrees()
        if len(ds) != 1:
            raise DegreeError(f"form is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def is_homogeneous(self, k: int) -> bool:
        return all(len(key) == k for key in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, idx: Sequence[int | str]):
        return coefficient_of(self, idx)

    def part(self, k: int) -> "Form":
        return Form(self.alg, {key: c for key, c in self.terms.items() if len(key) == k})

    def map_coefficients(self, fn) -> "Form":
        out = {}
        for key, c in self.terms.items():
            v = fn(c)
            if v != 0:
                out[key] = v
        return Form(self.alg, out)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Form"):
        if not isinstance(other, Form):
            raise TypeError(f"expected Form, got {type(other).__name__}")
        if other.alg is not self.alg and other.alg != self.alg:
            raise ContextError("forms live in different generator contexts")

    def __add__(self, other):
        if not isinstance(other, Form):
            if other == 0:
                return self
            return self + self.alg.scalar(other)
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            accumulate(out, key, c)
        return Form(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Form(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, s):
        if isinstance(s, Form):
            return wedge(self, s)
        if s == 0:
            return self.alg.zero()
        return self.map_coefficients(lambda c: c * s)

    def __rmul__(self, s):
        if isinstance(s, Form):
            return wedge(s, self)
        if s == 0:
            return self.alg.zero()
        return self.map_coefficients(lambda c: s * c)

    def __truediv__(self, s):
        return self * (Fraction(1) / Fraction(s))

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.alg == other.alg and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"({c})*{self.alg.label(k)}" for k, c in sorted(self.terms.items())]
        return " + ".join(parts)


def wedge(a: Form, b: Form) -> Form:
    a._check(b)
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            sign = _merge_sign(ka, kb)
            if sign == 0:
                continue
            key = tuple(sorted(ka + kb))
            c = ca * cb
            accumulate(out, key, c if sign > 0 else -c)
    return Form(a.alg, out)


def wedge_all(forms: Iterable[Form], alg: ExteriorAlgebra | None = None) -> Form:
    it = iter(forms)
    try:
        acc = next(it)
    except StopIteration:
        if alg is None:
            raise ValueError("empty wedge needs an algebra") from None
        return alg.one()
    for f in it:
        acc = wedge(acc, f)
    return acc


def interior(v, a: Form) -> Form:
    """Contraction ``i_v a``.

    ``v`` is a generator index/name (the coordinate direction dual to it) or a
    sequence of one ring scalar per generator.
    """
    alg = a.alg
    if isinstance(v, (int, str)):
        j = alg.index(v)
        out: dict = {}
        for key, c in a.terms.items():
            for pos, i in enumerate(key):
                if i == j:
                    new = key[:pos] + key[pos + 1:]
                    accumulate(out, new, -c if pos & 1 else c)
                    break
        return Form(alg, out)
    comps = list(v)
    if len(comps) != alg.size:
        raise ContextError(f"vector has {len(comps)} components, context has {alg.size}")
    out = {}
    for key, c in a.terms.items():
        for pos, i in enumerate(key):
            vi = comps[i]
            if vi == 0:
                continue
            new = key[:pos] + key[pos + 1:]
            t = vi * c
            accumulate(out, new, -t if pos & 1 else t)
    return Form(alg, out)


def coefficient_of(a: Form, idx: Sequence[int | str]):
    """Coefficient of the basis element ``idx`` (which must be strictly increasing)."""
    key = tuple(a.alg.index(g) for g in idx)
    if any(x >= y for x, y in zip(key, key[1:])):
        raise ValueError(f"multi-index {key} is not strictly increasing")
    return a.terms.get(key, a.alg.ring.zero)


def power(a: Form, k: int) -> Form:
    """``a^k`` (wedge power); ``a^0`` is the unit form."""
    if k < 0:
        raise ValueError("negative wedge power")
    acc = a.alg.one()
    for _ in range(k):
        acc = wedge(acc, a)
    return acc


def divided_power(a: Form, k: int) -> Form:
    """``a^k / k!``; zero for ``k < 0`` so that formulas with ``omega^(n-2)`` degrade cleanly."""
    if k < 0:
        return a.alg.zero()
    f = 1
    for i in range(2, k + 1):
        f *= i
    return power(a, k) * Fraction(1, f)
