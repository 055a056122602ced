"""Data models for generalized complex numbers R_Λ and their complexification C_Λ."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from numbers import Rational, Real

Scalar = Fraction | float


class Lambda(Enum):
    """Sign of the cosmological constant, selecting the ring R[ℓ]/(ℓ² + Λ)."""

    NEGATIVE = -1  # split-complex, R × R
    ZERO = 0  # dual numbers
    POSITIVE = 1  # complex numbers

    @classmethod
    def parse(cls, value: Lambda | int | str) -> Lambda:
        """Coerce an int, a numeric string or a member name into a Lambda."""
        if isinstance(value, Lambda):
            return value
        if isinstance(value, str):
            text = value.strip()
            if text.upper() in cls.__members__:
                return cls[text.upper()]
            value = int(text)
        try:
            return cls(int(value))
        except ValueError:
            raise ValueError(f"Lambda must be one of -1, 0, 1; got {value!r}") from None


def to_scalar(value) -> Scalar:
    """Normalise a real input: integers and rationals stay exact, others become float."""
    if isinstance(value, bool):
        raise TypeError("bool is not a valid scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, Real):
        return float(value)
    raise TypeError(f"Expected a real scalar, got {type(value).__name__}")


def is_exact(*values) -> bool:
    return all(isinstance(v, Fraction) for v in values)


@dataclass(frozen=True)
class GC:
    """A generalized complex number x + ℓy in R_Λ."""

    re: Scalar
    im: Scalar
    lam: Lambda

    def __post_init__(self):
        object.__setattr__(self, "re", to_scalar(self.re))
        object.__setattr__(self, "im", to_scalar(self.im))
        object.__setattr__(self, "lam", Lambda.parse(self.lam))

    @classmethod
    def one(cls, lam: Lambda | int) -> GC:
        return cls(Fraction(1), Fraction(0), lam)

    @classmethod
    def zero(cls, lam: Lambda | int) -> GC:
        return cls(Fraction(0), Fraction(0), lam)

    @classmethod
    def ell(cls, lam: Lambda | int) -> GC:
        return cls(Fraction(0), Fraction(1), lam)

    @property
    def exact(self) -> bool:
        return is_exact(self.re, self.im)

    def __add__(self, other: GC) -> GC:
        from .arithmetic import gc_add

        return gc_add(self, other)

    def __sub__(self, other: GC) -> GC:
        from .arithmetic import gc_sub

        return gc_sub(self, other)

    def __neg__(self) -> GC:
        return GC(-self.re, -self.im, self.lam)

    def __mul__(self, other: GC) -> GC:
        from .arithmetic import gc_mul

        return gc_mul(self, other)

    def __truediv__(self, other: GC) -> GC:
        from .arithmetic import gc_inv, gc_mul

        return gc_mul(self, gc_inv(other))

    def __pow__(self, exponent: int) -> GC:
        from .arithmetic import gc_pow

        return gc_pow(self, exponent)

    def __str__(self) -> str:
        return f"({self.re}) + ℓ({self.im}) [Λ={self.lam.value}]"


@dataclass(frozen=True)
class GCC:
    """An element a + ℓb (+ ℓ*b* when Λ = 0) of the complexified ring C_Λ.

    For Λ = 0 the ℓ and ℓ* sectors are stored independently; products that
    would need ℓ·ℓ* are refused.
    """

    re: complex
    im: complex
    lam: Lambda
    im_star: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "re", complex(self.re))
        object.__setattr__(self, "im", complex(self.im))
        object.__setattr__(self, "im_star", complex(self.im_star))
        object.__setattr__(self, "lam", Lambda.parse(self.lam))
        if self.lam is not Lambda.ZERO and self.im_star != 0:
            raise ValueError("The ℓ* sector only exists for Λ = 0")

    @classmethod
    def from_gc(cls, value: GC) -> GCC:
        return cls(complex(value.re), complex(value.im), value.lam)

    def __add__(self, other: GCC) -> GCC:
        from .arithmetic import gcc_add

        return gcc_add(self, other)

    def __mul__(self, other: GCC) -> GCC:
        from .arithmetic import gcc_mul

        return gcc_mul(self, other)


@dataclass(frozen=True)
class AdmissibleFn:
    """Branch data of a function admissible for the R_Λ functional calculus.

    Λ = −1 uses real branches (plus, minus) evaluated at x ± y; Λ = +1 uses
    complex branches evaluated at x ± iy; Λ = 0 uses f0 and its derivative df0.
    """

    lam: Lambda
    plus: Callable | None = None
    minus: Callable | None = None
    f0: Callable | None = None
    df0: Callable | None = None
    name: str = field(default="f", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lam", Lambda.parse(self.lam))
        if self.lam is Lambda.ZERO:
            if self.f0 is None or self.df0 is None:
                raise ValueError("Λ = 0 admissible functions need f0 and its derivative df0")
        elif self.plus is None or self.minus is None:
            raise ValueError("Λ = ±1 admissible functions need both branches")

    @classmethod
    def from_analytic(
        cls,
        lam: Lambda | int,
        func: Callable,
        derivative: Callable | None = None,
        name: str = "f",
    ) -> AdmissibleFn:
        """Build the admissible function induced by a single analytic function."""
        lam = Lambda.parse(lam)
        if lam is Lambda.ZERO:
            return cls(lam, f0=func, df0=derivative, name=name)
        return cls(lam, plus=func, minus=func, name=name)
