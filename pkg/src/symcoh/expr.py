"""Parse trigonometric polynomials such as ``"cos(q1)*sin(p1 - 2*q2) + 3/2"``.

sympy does the parsing; the tree is then converted term by term into an exact
:class:`symcoh.trig.Trig`.  Arguments of sin/cos must be integer linear
combinations of the angles, so every value stays rational.
"""

from __future__ import annotations

from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import parse_expr

from .torus import coordinate_names
from .trig import Trig


class ExpressionError(ValueError):
    """Text is not a trigonometric polynomial on the requested torus."""


def _symbols(dim: int) -> dict[str, sympy.Symbol]:
    names = coordinate_names(dim)
    syms = {name: sympy.Symbol(name, real=True) for name in names}
    if dim == 2:
        syms["q"], syms["p"] = syms["q1"], syms["p1"]
    return syms


def _wave_vector(arg, order: list[sympy.Symbol]) -> tuple[int, ...]:
    poly = sympy.Poly(arg, *order) if arg.free_symbols else None
    if poly is None or poly.total_degree() > 1:
        raise ExpressionError(f"sin/cos argument {arg} is not linear in the angles")
    k = []
    for s in order:
        c = poly.coeff_monomial(s)
        if not (c.is_Integer):
            raise ExpressionError(f"sin/cos argument {arg} needs integer coefficients")
        k.append(int(c))
    if poly.coeff_monomial(1) != 0:
        raise ExpressionError(f"sin/cos argument {arg} has a constant phase")
    return tuple(k)


def _convert(e, order: list[sympy.Symbol], dim: int) -> Trig:
    if e.is_Rational:
        return Trig.const(dim, Fraction(int(e.p), int(e.q)))
    if e.is_Add:
        out = Trig(dim)
        for a in e.args:
            out = out + _convert(a, order, dim)
        return out
    if e.is_Mul:
        out = Trig.const(dim, 1)
        for a in e.args:
            out = out * _convert(a, order, dim)
        return out
    if e.is_Pow:
        base, ex = e.args
        if not (ex.is_Integer and ex >= 0):
            raise ExpressionError(f"only nonnegative integer powers are allowed: {e}")
        b = _convert(base, order, dim)
        out = Trig.const(dim, 1)
        for _ in range(int(ex)):
            out = out * b
        return out
    if isinstance(e, (sympy.sin, sympy.cos)):
        k = _wave_vector(e.args[0], order)
        return Trig.sin(k) if isinstance(e, sympy.sin) else Trig.cos(k)
    if e.is_Symbol:
        raise ExpressionError(f"bare angle {e} is not a function on the torus")
    raise ExpressionError(f"unsupported expression {e}")


def parse_trig(text: str, dim: int) -> Trig:
    syms = _symbols(dim)
    local = dict(syms)
    local.update({"sin": sympy.sin, "cos": sympy.cos})
    try:
        e = parse_expr(text, local_dict=local, global_dict={"Integer": sympy.Integer,
                                                            "Rational": sympy.Rational,
                                                            "Symbol": sympy.Symbol,
                                                            "Float": sympy.Float},
                       evaluate=True)
    except Exception as exc:  # sympy raises a variety of parse errors
        raise ExpressionError(f"cannot parse {text!r}: {exc}") from None
    if not isinstance(e, sympy.Expr):
        raise ExpressionError(f"{text!r} is not an expression")
    order = [syms[name] for name in coordinate_names(dim)]
    unknown = e.free_symbols - set(order)
    if unknown:
        raise ExpressionError(f"unknown symbols {sorted(map(str, unknown))}")
    if e.has(sympy.Float):
        raise ExpressionError("use exact rationals such as 3/2, not decimals")
    return _convert(e, order, dim)
