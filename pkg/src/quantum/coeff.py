"""The quantum coefficient field ℚ(q, q*) and its evaluations."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.fields import FracElement, xfield

from ..errors import DomainError

COEFF_FIELD, (Q, QS) = xfield(["q", "qs"], QQ)
ONE = COEFF_FIELD.one
ZERO = COEFF_FIELD.zero


def q_power(m: int, symbol: FracElement = Q) -> FracElement:
    return symbol**m


def coerce(value) -> FracElement:
    """Lift an int, Fraction or field element into ℚ(q, q*)."""
    if isinstance(value, FracElement):
        return value
    if isinstance(value, Fraction):
        return COEFF_FIELD(QQ(value.numerator, value.denominator))
    return COEFF_FIELD(value)


def _eval_poly(poly, q_value, qs_value):
    exact = isinstance(q_value, Fraction)
    total = 0
    for (mq, mqs), coeff in poly.terms():
        c = Fraction(int(coeff.numerator), int(coeff.denominator))
        total += (c if exact else float(c)) * q_value**mq * qs_value**mqs
    return total


def evaluate(c: FracElement, q_value: complex, qs_value: complex | None = None) -> complex:
    """Numerical value of a coefficient at q = q_value (and q* = qs_value)."""
    qs_value = q_value if qs_value is None else qs_value
    denom = _eval_poly(c.denom, q_value, qs_value)
    if denom == 0:
        raise DomainError(f"Coefficient {c.as_expr()} has a pole at q = {q_value}")
    return _eval_poly(c.numer, q_value, qs_value) / denom


def at_one(c: FracElement) -> Fraction:
    """Exact value at q = q* = 1.

    Raises:
        DomainError: If the coefficient has a pole at q = 1
    """
    one = Fraction(1)
    denom = _eval_poly(c.denom, one, one)
    if denom == 0:
        raise DomainError(f"Coefficient {c.as_expr()} has a pole at q = 1")
    return Fraction(_eval_poly(c.numer, one, one)) / denom


def substitute(c: FracElement, q_image: FracElement, qs_image: FracElement) -> FracElement:
    """Apply the field map q ↦ q_image, q* ↦ qs_image."""

    def image(poly) -> FracElement:
        total = ZERO
        for (mq, mqs), coeff in poly.terms():
            total += COEFF_FIELD(coeff) * q_image**mq * qs_image**mqs
        return total

    return image(c.numer) / image(c.denom)


def is_monomial(c: FracElement) -> bool:
    """Units of the Laurent ring: a single term c·q^m q*^n."""
    return len(c.numer.terms()) == 1 and len(c.denom.terms()) == 1
