"""Exact trigonometric polynomials on the torus R^d / (tau Z)^d, tau = 2*pi.

A :class:`Trig` is a finite sum of ``c * cos(k.theta)`` and ``s * sin(k.theta)``
with rational coefficients and integer wave vectors ``k``.  Canonical form:
every stored ``k`` is zero or lexicographically positive, and there is no
``sin`` term at ``k = 0``.  Values of integrals carry the formal period
through :class:`TauValue`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

COS, SIN = 0, 1


def _canon(k: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Return (sign, k') with k' = +-k lexicographically nonnegative."""
    for x in k:
        if x > 0:
            return 1, k
        if x < 0:
            return -1, tuple(-y for y in k)
    return 0, k


def _add_term(out: dict, kind: int, k: tuple[int, ...], c) -> None:
    if not c:
        return
    sign, kk = _canon(k)
    if sign == 0:
        if kind == SIN:
            return
    elif sign < 0 and kind == SIN:
        c = -c
    key = (kind, kk)
    s = out.get(key, 0) + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class Trig:
    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: dict | None = None):
        self.dim = dim
        self.terms = terms if terms is not None else {}

    # -- constructors ------------------------------------------------------
    @classmethod
    def const(cls, dim: int, c) -> "Trig":
        out: dict = {}
        _add_term(out, COS, (0,) * dim, Fraction(c))
        return cls(dim, out)

    @classmethod
    def cos(cls, k: Sequence[int], c=1) -> "Trig":
        out: dict = {}
        _add_term(out, COS, tuple(k), Fraction(c))
        return cls(len(k), out)

    @classmethod
    def sin(cls, k: Sequence[int], c=1) -> "Trig":
        out: dict = {}
        _add_term(out, SIN, tuple(k), Fraction(c))
        return cls(len(k), out)

    # -- ring structure ------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Trig):
            if other.dim != self.dim:
                raise ValueError(f"torus dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, (int, Fraction)):
            return Trig.const(self.dim, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return Trig(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return Trig(self.dim, {key: -c for key, c in self.terms.items()})

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
                return Trig(self.dim)
            return Trig(self.dim, {key: c * other for key, c in self.terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        half = Fraction(1, 2)
        for (ka, a), ca in self.terms.items():
            for (kb, b), cb in other.terms.items():
                c = ca * cb * half
                plus = tuple(x + y for x, y in zip(a, b))
                minus = tuple(x - y for x, y in zip(a, b))
                if ka == COS and kb == COS:
                    _add_term(out, COS, minus, c)
                    _add_term(out, COS, plus, c)
                elif ka == SIN and kb == SIN:
                    _add_term(out, COS, minus, c)
                    _add_term(out, COS, plus, -c)
                elif ka == SIN:  # sin a cos b
                    _add_term(out, SIN, plus, c)
                    _add_term(out, SIN, minus, c)
                else:  # cos a sin b
                    _add_term(out, SIN, plus, c)
                    _add_term(out, SIN, minus, -c)
        return Trig(self.dim, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Trig):
            return self.dim == other.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Trig.const(self.dim, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus ----------------------------------------------------------
    def diff(self, j: int) -> "Trig":
        out: dict = {}
        for (kind, k), c in self.terms.items():
            if not k[j]:
                continue
            if kind == COS:
                _add_term(out, SIN, k, -c * k[j])
            else:
                _add_term(out, COS, k, c * k[j])
        return Trig(self.dim, out)

    def constant_term(self) -> Fraction:
        return self.terms.get((COS, (0,) * self.dim), Fraction(0))

    def at_origin(self) -> Fraction:
        """Value at theta = 0 (every cos is 1, every sin is 0)."""
        return sum((c for (kind, _), c in self.terms.items() if kind == COS), Fraction(0))

    def restrict(self, j: int, angle: Fraction) -> "Trig":
        """Substitute ``theta_j = angle * tau`` for ``angle`` in {0, 1/2}.

        The result no longer depends on ``theta_j``.
        """
        angle = Fraction(angle)
        if angle not in (0, Fraction(1, 2)):
            raise ValueError(f"unsupported slice angle {angle}*tau (only 0 and tau/2)")
        out: dict = {}
        for (kind, k), c in self.terms.items():
            if angle and k[j] % 2:
                c = -c
            kk = list(k)
            kk[j] = 0
            _add_term(out, kind, tuple(kk), c)
        return Trig(self.dim, out)

    def wave_vectors(self) -> set[tuple[int, ...]]:
        return {k for _, k in self.terms}

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for (kind, k), c in sorted(self.terms.items()):
            if not any(k):
                out.append(f"{c}")
            else:
                out.append(f"{c}*{'cos' if kind == COS else 'sin'}{list(k)}")
        return " + ".join(out)


class TrigRing:
    """Coefficient ring of trig polynomials in ``dim`` angles."""

    def __init__(self, dim: int):
        self.dim = dim
        self.zero = Trig(dim)
        self.one = Trig.const(dim, 1)

    def __repr__(self):
        return f"Trig[{self.dim}]"

    def __eq__(self, other):
        return isinstance(other, TrigRing) and other.dim == self.dim

    def __hash__(self):
        return hash(("trig", self.dim))

    def coerce(self, x) -> Trig:
        if isinstance(x, Trig):
            return x
        return Trig.const(self.dim, x)

    def to_rational(self, x) -> Fraction:
        t = self.coerce(x)
        if any(any(k) for _, k in t.terms):
            raise ValueError(f"{t!r} is not constant")
        return t.constant_term()

    def random(self, rng, max_terms: int = 3, max_freq: int = 2, coeff_range: int = 3,
               constant: bool = True) -> Trig:
        out: dict = {}
        for _ in range(rng.randint(1, max_terms)):
            k = tuple(rng.randint(-max_freq, max_freq) for _ in range(self.dim))
            kind = rng.choice((COS, SIN))
            _add_term(out, kind, k, Fraction(rng.randint(-coeff_range, coeff_range)))
        if constant:
            _add_term(out, COS, (0,) * self.dim, Fraction(rng.randint(-coeff_range, coeff_range)))
        return Trig(self.dim, out)


@dataclass(frozen=True)
class TauValue:
    """``coeff * tau**exp`` with tau = 2*pi treated as a formal symbol.

    Addition requires equal exponents unless one side is zero.
    """

    coeff: Fraction
    exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if not self.coeff:
            object.__setattr__(self, "exp", 0)

    @staticmethod
    def _lift(x) -> "TauValue":
        if isinstance(x, TauValue):
            return x
        if isinstance(x, (int, Fraction)):
            return TauValue(Fraction(x), 0)
        raise TypeError(f"cannot combine TauValue with {type(x).__name__}")

    def __add__(self, other):
        other = self._lift(other)
        if not other.coeff:
            return self
        if not self.coeff:
            return other
        if other.exp != self.exp:
            raise ValueError(f"adding tau^{self.exp} and tau^{other.exp} values")
        return TauValue(self.coeff + other.coeff, self.exp)

    __radd__ = __add__

    def __neg__(self):
        return TauValue(-self.coeff, self.exp)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return TauValue(self.coeff * other.coeff, self.exp + other.exp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return TauValue(self.coeff / other.coeff, self.exp - other.exp)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TauValue(Fraction(other))
        if not isinstance(other, TauValue):
            return NotImplemented
        return self.coeff == other.coeff and self.exp == other.exp

    def __hash__(self):
        return hash((self.coeff, self.exp))

    def __bool__(self):
        return bool(self.coeff)

    def __str__(self):
        if not self.coeff or not self.exp:
            return str(self.coeff)
        return f"{self.coeff}*tau^{self.exp}"

    def as_rational(self) -> Fraction:
        if self.exp:
            raise ValueError(f"{self} carries a power of tau")
        return self.coeff
