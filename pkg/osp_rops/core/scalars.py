# -*- coding: utf-8 -*-
"""Exact coefficient arithmetic over the Gaussian rationals.

Everything downstream shares one polynomial ring ``QQ_I[u, v, z, omega, x]``
and its fraction field.  Truncated power series in ``x`` are polynomials of
that ring whose ``x``-degree never exceeds the declared order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, Union

from sympy import sympify
from sympy.polys.domains import QQ, QQ_I
from sympy.polys.fields import FracElement
from sympy.polys.ring_series import rs_diff, rs_mul, rs_trunc
from sympy.polys.rings import PolyElement, ring

from .errors import ConfigurationError, DomainError


SYMBOLS = ("u", "v", "z", "omega", "x")
RING, U, V, Z, OMEGA, X = ring(",".join(SYMBOLS), QQ_I)
FIELD = RING.to_field()
POLY = RING.to_domain()

I_UNIT = QQ_I(0, 1)
ONE = QQ_I(1, 0)
ZERO = QQ_I(0, 0)

Scalar = Any  # element of QQ_I
MultiPoly = PolyElement
RationalFunction = FracElement
ScalarLike = Union[int, Fraction, str, Scalar]


def gaussian(re: ScalarLike = 0, im: ScalarLike = 0) -> Scalar:
    """Build ``re + i*im`` from ints, fractions or ``"p/q"`` strings."""
    return QQ_I(_rational(re), _rational(im))


def _rational(value: ScalarLike) -> Any:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        frac = Fraction(value.strip())
        return QQ(frac.numerator, frac.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def to_scalar(value: Any) -> Scalar:
    """Coerce ints, fractions, strings and domain elements into ``QQ_I``."""
    if isinstance(value, (int, Fraction)):
        return gaussian(value)
    if isinstance(value, str):
        return parse_scalar(value)
    return QQ_I.convert(value)


def parse_scalar(text: str) -> Scalar:
    """Parse ``"1/2"``, ``"-3"``, ``"I/2"`` or ``"1/2 + 3*I"`` exactly."""
    try:
        expr = sympify(str(text).strip(), rational=True)
        return QQ_I.from_sympy(expr)
    except Exception as exc:
        raise ConfigurationError(f"not an exact Gaussian rational: {text!r}") from exc


def _format_rational(q: Any) -> str:
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def format_scalar(c: Scalar) -> str:
    """Render an exact scalar as ``"p/q"`` or ``"p/q+r/s*I"``."""
    c = QQ_I.convert(c)
    re, im = c.x, c.y
    if not im:
        return _format_rational(re)
    imag = _format_rational(im) + "*I"
    if not re:
        return imag
    sign = "" if imag.startswith("-") else "+"
    return f"{_format_rational(re)}{sign}{imag}"


def format_poly(p: Any) -> str:
    """Render a polynomial or rational function with exact coefficients."""
    if isinstance(p, (PolyElement, FracElement)):
        return str(p.as_expr())
    return format_scalar(p)


def conjugate(c: Scalar) -> Scalar:
    c = QQ_I.convert(c)
    return QQ_I(c.x, -c.y)


def conjugate_poly(p: MultiPoly) -> MultiPoly:
    """Complex-conjugate the coefficients; the formal symbols are real."""
    return RING.from_dict({monom: conjugate(coeff) for monom, coeff in p.items()})


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """Exact ``add``/``sub``/``mul`` of two polynomials of one symbol table."""
    if a.ring != b.ring:
        raise ConfigurationError(
            f"mismatched symbol tables: {a.ring.symbols} vs {b.ring.symbols}"
        )
    ops: Dict[str, Callable[[MultiPoly, MultiPoly], MultiPoly]] = {
        "add": lambda p, q: p + q,
        "sub": lambda p, q: p - q,
        "mul": lambda p, q: p * q,
    }
    if op not in ops:
        raise ConfigurationError(f"unknown polynomial operation: {op}")
    return ops[op](a, b)


def ratfn(numer: Any, denom: Any = 1) -> RationalFunction:
    """Build a reduced rational function ``numer/denom``."""
    numer = RING(numer) if not isinstance(numer, PolyElement) else numer
    denom = RING(denom) if not isinstance(denom, PolyElement) else denom
    if not denom:
        raise DomainError("rational function with zero denominator")
    return FIELD.new(numer, denom)


def ratfn_reduce(r: RationalFunction) -> RationalFunction:
    """Return the canonical gcd-reduced form; idempotent."""
    return ratfn(r.numer, r.denom)


def ratfn_equal(a: RationalFunction, b: RationalFunction) -> bool:
    """Equality decided by cross-multiplication of reduced forms."""
    a, b = ratfn_reduce(FIELD.field_new(a)), ratfn_reduce(FIELD.field_new(b))
    return a.numer * b.denom == b.numer * a.denom


def evaluate_poly(p: MultiPoly, **values: Any) -> MultiPoly:
    """Substitute exact scalars for named symbols, keeping the ring."""
    result = p
    for name, value in values.items():
        gen = RING.gens[SYMBOLS.index(name)]
        result = result.subs(gen, to_scalar(value))
    return result


def ratfn_evaluate(r: RationalFunction, **values: Any) -> RationalFunction:
    numer = evaluate_poly(r.numer, **values)
    denom = evaluate_poly(r.denom, **values)
    return ratfn(numer, denom)


@dataclass(frozen=True)
class TruncSeries:
    """Power series in ``x`` truncated after ``x**order``."""

    order: int
    poly: MultiPoly

    @classmethod
    def from_poly(cls, poly: Any, order: int) -> "TruncSeries":
        return cls(order=order, poly=rs_trunc(RING(poly), X, order + 1))

    @classmethod
    def from_coefficients(cls, coeffs: Any, order: int) -> "TruncSeries":
        poly = RING.zero
        for k, c in enumerate(list(coeffs)[: order + 1]):
            poly += RING(c) * X**k
        return cls(order=order, poly=poly)

    def coefficient(self, k: int) -> MultiPoly:
        if k < 0 or k > self.order:
            return RING.zero
        return self.poly.coeff_wrt(X, k)

    def coefficients(self) -> list:
        return [self.coefficient(k) for k in range(self.order + 1)]

    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ConfigurationError(
                f"series order mismatch: {self.order} vs {other.order}"
            )
        if self.poly.ring != other.poly.ring:
            raise ConfigurationError("series over different symbol tables")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, self.poly + other.poly)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, self.poly - other.poly)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.order, rs_mul(self.poly, other.poly, X, self.order + 1))

    def scale(self, c: Any) -> "TruncSeries":
        return TruncSeries(self.order, self.poly * RING(c))

    def derive(self) -> "TruncSeries":
        """Termwise ``d/dx``; the result is known through ``x**(order-1)``."""
        return TruncSeries(self.order - 1, rs_diff(self.poly, X))

    def at_zero(self) -> MultiPoly:
        return self.coefficient(0)

    def shift_z(self, step: Any) -> "TruncSeries":
        """Substitute ``z -> z + step`` in every coefficient."""
        return TruncSeries(self.order, self.poly.compose(Z, Z + RING(step)))

    def restrict(self, order: int) -> "TruncSeries":
        return TruncSeries(order, rs_trunc(self.poly, X, order + 1))


def series_ops(s: TruncSeries, t: TruncSeries | None, op: str) -> TruncSeries:
    """Dispatch ``mul``/``derive``/``shift-eval`` on truncated series."""
    if op == "mul":
        if t is None:
            raise ConfigurationError("series product needs two operands")
        return s * t
    if op == "derive":
        return s.derive()
    if op == "shift-eval":
        return TruncSeries(s.order, RING(s.at_zero()))
    raise ConfigurationError(f"unknown series operation: {op}")


__all__ = [
    "FIELD",
    "I_UNIT",
    "MultiPoly",
    "OMEGA",
    "ONE",
    "POLY",
    "RING",
    "RationalFunction",
    "SYMBOLS",
    "TruncSeries",
    "U",
    "V",
    "X",
    "Z",
    "ZERO",
    "conjugate",
    "conjugate_poly",
    "evaluate_poly",
    "format_poly",
    "format_scalar",
    "gaussian",
    "parse_scalar",
    "poly_arith",
    "ratfn",
    "ratfn_equal",
    "ratfn_evaluate",
    "ratfn_reduce",
    "series_ops",
    "to_scalar",
]
