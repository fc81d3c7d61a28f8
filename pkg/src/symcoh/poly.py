"""Multivariate polynomials with rational coefficients.

Monomials are exponent tuples of fixed length ``nvars``; zero coefficients
are never stored.  Arithmetic accepts ``int`` and ``Fraction`` operands.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Sequence


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    @classmethod
    def const(cls, nvars: int, c) -> "Poly":
        c = Fraction(c)
        return cls(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): Fraction(1)})

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials in different numbers of variables")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly(self.nvars)
            return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        acc = Poly.const(self.nvars, 1)
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: Fraction(other)}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def diff(self, i: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return Poly(self.nvars, out)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self.terms.get((0,) * self.nvars, Fraction(0))

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= Fraction(x) ** e
            total += t
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(m) if e)
            out.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(out)


class PolyRing:
    """Coefficient ring of polynomials in ``names`` (used as an exterior-algebra ring)."""

    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)
        self.nvars = len(self.names)
        self.zero = Poly(self.nvars)
        self.one = Poly.const(self.nvars, 1)

    def __repr__(self):
        return f"QQ[{','.join(self.names)}]"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def coerce(self, x) -> Poly:
        if isinstance(x, Poly):
            return x
        return Poly.const(self.nvars, x)

    def to_rational(self, x) -> Fraction:
        return self.coerce(x).constant_value()

    def var(self, i: int | str) -> Poly:
        if isinstance(i, str):
            i = self.names.index(i)
        return Poly.var(self.nvars, i)

    def monomials(self, max_degree: int) -> list[tuple[int, ...]]:
        out = []
        for d in range(max_degree + 1):
            for combo in combinations_with_replacement(range(self.nvars), d):
                e = [0] * self.nvars
                for i in combo:
                    e[i] += 1
                out.append(tuple(e))
        return out

    def random(self, rng, max_degree: int = 3, max_terms: int = 4, coeff_range: int = 3) -> Poly:
        """A sparse random polynomial: up to ``max_terms`` monomials, coefficients in ``[-r, r]``."""
        monos = self.monomials(max_degree)
        out: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            m = monos[rng.randrange(len(monos))]
            c = rng.randint(-coeff_range, coeff_range)
            s = out.get(m, 0) + c
            if s:
                out[m] = Fraction(s)
            else:
                out.pop(m, None)
        return Poly(self.nvars, out)
