"""Exact rational functions over ℚ in generators Z1..Zn, with a central ℓ marker."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from sympy import QQ
from sympy.polys.fields import FracElement, FracField, xfield

from ..errors import UsageError


@lru_cache(maxsize=None)
def generator_field(n: int) -> tuple[FracField, tuple[FracElement, ...]]:
    """The field ℚ(Z1, ..., Zn), shared by every RatExpr of rank n."""
    if n < 1:
        raise UsageError("A generator field needs at least one generator")
    return xfield([f"Z{i + 1}" for i in range(n)], QQ)


def to_fraction(coeff) -> Fraction:
    """Convert a ground-domain rational (PythonMPQ or gmpy mpq) to Fraction."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _monomial_str(monom: tuple[int, ...], names) -> str:
    parts = []
    for name, exp in zip(names, monom):
        if exp == 1:
            parts.append(name)
        elif exp:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def _poly_str(poly, names) -> str:
    terms = sorted(poly.terms(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))
    out = []
    for monom, coeff in terms:
        c = to_fraction(coeff)
        body = _monomial_str(monom, names)
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude}*{body}"
        out.append((sign, text))
    if not out:
        return "0"
    first_sign, first_text = out[0]
    result = ("-" if first_sign == "-" else "") + first_text
    for sign, text in out[1:]:
        result += sign + text
    return result


class RatExpr:
    """A reduced fraction in ℚ(Z1..Zn), optionally carrying one power of ℓ.

    ℓ is central and ℓ² = 0 for the marker, which only tracks the degree of
    Poisson-bracket outputs.
    """

    __slots__ = ("value", "ell")

    def __init__(self, value: FracElement, ell: int = 0):
        if ell not in (0, 1):
            raise UsageError(f"ℓ-degree must be 0 or 1, got {ell}")
        self.value = value
        self.ell = ell

    # -- construction -----------------------------------------------------

    @classmethod
    def generator(cls, i: int, n: int) -> RatExpr:
        _, gens = generator_field(n)
        return cls(gens[i])

    @classmethod
    def constant(cls, c, n: int) -> RatExpr:
        field, _ = generator_field(n)
        return cls(field(QQ(int(Fraction(c).numerator), int(Fraction(c).denominator))))

    @classmethod
    def monomial(cls, exponents, n: int | None = None) -> RatExpr:
        exponents = tuple(int(e) for e in exponents)
        n = n or len(exponents)
        field, gens = generator_field(n)
        value = field.one
        for g, e in zip(gens, exponents):
            value *= g**e
        return cls(value)

    # -- structure --------------------------------------------------------

    @property
    def n(self) -> int:
        return self.value.field.ngens

    @property
    def numer(self):
        return self.value.numer

    @property
    def denom(self):
        return self.value.denom

    def is_zero(self) -> bool:
        return not self.value

    def is_laurent(self) -> bool:
        """True when the reduced denominator is a single monomial."""
        return len(self.denom.terms()) == 1

    def _coerce(self, other) -> RatExpr:
        if isinstance(other, RatExpr):
            if other.n != self.n:
                raise UsageError(f"Generator sets differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return RatExpr.constant(other, self.n)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> RatExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.ell != other.ell:
            raise UsageError("Cannot add expressions of different ℓ-degree")
        return RatExpr(self.value + other.value, self.ell)

    __radd__ = __add__

    def __neg__(self) -> RatExpr:
        return RatExpr(-self.value, self.ell)

    def __sub__(self, other) -> RatExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> RatExpr:
        return (-self) + other

    def __mul__(self, other) -> RatExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        degree = self.ell + other.ell
        if degree > 1:
            field, _ = generator_field(self.n)
            return RatExpr(field.zero)
        return RatExpr(self.value * other.value, degree)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.ell:
            raise UsageError("Cannot divide by an ℓ-marked expression")
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero rational function")
        return RatExpr(self.value / other.value, self.ell)

    def __rtruediv__(self, other) -> RatExpr:
        return self._coerce(other) / self

    def __pow__(self, exponent: int) -> RatExpr:
        if self.ell and exponent != 1:
            raise UsageError("Powers of ℓ-marked expressions are not supported")
        return RatExpr(self.value**exponent, self.ell)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, RatExpr):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.ell == other.ell and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.ell, str(self)))

    # -- calculus and substitution ---------------------------------------

    def diff(self, i: int) -> RatExpr:
        _, gens = generator_field(self.n)
        return RatExpr(self.value.diff(gens[i]), self.ell)

    def substitute(self, images) -> RatExpr:
        """Replace Z_i by images[i] (RatExprs sharing one generator set)."""
        images = list(images)
        if len(images) != self.n:
            raise UsageError(f"Expected {self.n} images, got {len(images)}")
        target_n = images[0].n
        powers: dict[tuple[int, int], FracElement] = {}

        def power(i: int, e: int) -> FracElement:
            key = (i, e)
            if key not in powers:
                powers[key] = images[i].value ** e
            return powers[key]

        def evaluate(poly) -> FracElement:
            field, _ = generator_field(target_n)
            total = field.zero
            for monom, coeff in poly.terms():
                term = field(coeff)
                for i, e in enumerate(monom):
                    if e:
                        term *= power(i, e)
                total += term
            return total

        return RatExpr(evaluate(self.numer) / evaluate(self.denom), self.ell)

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        names = [f"Z{i + 1}" for i in range(self.n)]
        num = _poly_str(self.numer, names)
        den = _poly_str(self.denom, names)
        body = num if den == "1" else f"({num})/({den})"
        return f"ℓ*({body})" if self.ell else body

    def __repr__(self) -> str:
        return f"RatExpr({self})"
