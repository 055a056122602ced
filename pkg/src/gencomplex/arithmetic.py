"""Arithmetic, matrix realisations and functional calculus on R_Λ and C_Λ."""

from __future__ import annotations

import cmath
import logging
import math
from fractions import Fraction

import numpy as np

from ..errors import DomainError, EvaluationError, UnsupportedCaseError, UsageError
from .models import GC, GCC, AdmissibleFn, Lambda, Scalar

logger = logging.getLogger(__name__)


def _check_tags(a, b) -> Lambda:
    if a.lam is not b.lam:
        raise UsageError(f"Mismatched Λ tags: {a.lam.value} and {b.lam.value}")
    return a.lam


# ---------------------------------------------------------------------------
# Ring operations
# ---------------------------------------------------------------------------


def gc_add(a: GC, b: GC) -> GC:
    lam = _check_tags(a, b)
    return GC(a.re + b.re, a.im + b.im, lam)


def gc_sub(a: GC, b: GC) -> GC:
    lam = _check_tags(a, b)
    return GC(a.re - b.re, a.im - b.im, lam)


def gc_neg(a: GC) -> GC:
    return GC(-a.re, -a.im, a.lam)


def gc_mul(a: GC, b: GC) -> GC:
    """Multiply using (x, y)·(u, v) = (xu − Λyv, xv + yu).

    Raises:
        UsageError: If the operands carry different Λ tags
    """
    lam = _check_tags(a, b)
    return GC(
        a.re * b.re - lam.value * a.im * b.im,
        a.re * b.im + a.im * b.re,
        lam,
    )


def gc_conj(a: GC) -> GC:
    """Λ-conjugation x + ℓy ↦ x − ℓy."""
    return GC(a.re, -a.im, a.lam)


def gc_norm(a: GC) -> Scalar:
    """The multiplicative norm z·conj(z) = x² + Λy²."""
    return a.re * a.re + a.lam.value * a.im * a.im


def gc_is_unit(a: GC, tol: float = 0.0) -> bool:
    norm = gc_norm(a)
    if a.exact:
        return norm != 0
    return abs(norm) > tol


def gc_inv(a: GC) -> GC:
    """Multiplicative inverse conj(z)/norm(z).

    Raises:
        EvaluationError: If a is a zero divisor (norm zero)
    """
    norm = gc_norm(a)
    if norm == 0:
        raise EvaluationError(f"{a} is not a unit of R_{a.lam.value}", argument=a)
    return GC(a.re / norm, -a.im / norm, a.lam)


def gc_pow(a: GC, exponent: int) -> GC:
    """Integer power by repeated squaring; negative exponents invert first."""
    if exponent < 0:
        return gc_pow(gc_inv(a), -exponent)
    result = GC.one(a.lam)
    base = a
    while exponent:
        if exponent & 1:
            result = gc_mul(result, base)
        base = gc_mul(base, base)
        exponent >>= 1
    return result


def gc_close(a: GC, b: GC, tol: float = 1e-12) -> bool:
    """Relative closeness of two values with matching tags."""
    _check_tags(a, b)
    scale = max(1.0, abs(float(a.re)), abs(float(a.im)))
    return abs(float(a.re - b.re)) <= tol * scale and abs(float(a.im - b.im)) <= tol * scale


# ---------------------------------------------------------------------------
# Matrix realisations
# ---------------------------------------------------------------------------


def gc_embed(a: GC) -> np.ndarray:
    """Return the 2×2 real matrix [[x, y], [−Λy, x]].

    Exact inputs produce an object array of Fractions so that products of
    embeddings can be compared exactly.
    """
    rows = [[a.re, a.im], [-a.lam.value * a.im, a.re]]
    if a.exact:
        return np.array(rows, dtype=object)
    return np.array(rows, dtype=float)


def ell_matrix(lam: Lambda | int) -> np.ndarray:
    """The operator ℓ̂ = [[0, 1], [−Λ, 0]] acting on C²."""
    lam = Lambda.parse(lam)
    return np.array([[0, 1], [-lam.value, 0]], dtype=complex)


def gc_diagonalize(a: GC) -> tuple:
    """Eigen-scalars of the matrix realisation.

    Returns:
        (x + y, x − y) for Λ = −1, (x + iy, x − iy) for Λ = +1

    Raises:
        UnsupportedCaseError: For Λ = 0, where the realisation is a Jordan block
    """
    if a.lam is Lambda.NEGATIVE:
        return a.re + a.im, a.re - a.im
    if a.lam is Lambda.POSITIVE:
        x, y = float(a.re), float(a.im)
        return complex(x, y), complex(x, -y)
    raise UnsupportedCaseError("Elements of R_0 cannot be diagonalized")


# ---------------------------------------------------------------------------
# Exponential and logarithm
# ---------------------------------------------------------------------------


def gc_exp(a: GC) -> GC:
    x, y = float(a.re), float(a.im)
    if a.lam is Lambda.NEGATIVE:
        u, v = math.exp(x + y), math.exp(x - y)
        return GC((u + v) / 2, (u - v) / 2, a.lam)
    if a.lam is Lambda.POSITIVE:
        ex = math.exp(x)
        return GC(ex * math.cos(y), ex * math.sin(y), a.lam)
    ex = math.exp(x)
    return GC(ex, ex * y, a.lam)


def gc_log(a: GC) -> GC:
    """Inverse of gc_exp on R_Λ^+.

    Λ = +1 uses the principal branch with imaginary part in (−π, π].

    Raises:
        DomainError: If a is not in the image of the exponential map
    """
    x, y = float(a.re), float(a.im)
    if a.lam is Lambda.NEGATIVE:
        u, v = x + y, x - y
        if u <= 0 or v <= 0:
            raise DomainError(f"{a} is outside R_-1^+ (eigen-scalars {u}, {v})")
        lu, lv = math.log(u), math.log(v)
        return GC((lu + lv) / 2, (lu - lv) / 2, a.lam)
    if a.lam is Lambda.POSITIVE:
        if x == 0 and y == 0:
            raise DomainError("log(0) is undefined in R_1")
        w = cmath.log(complex(x, y))
        im = w.imag
        if im <= -math.pi:
            im = math.pi
        return GC(w.real, im, a.lam)
    if x <= 0:
        raise DomainError(f"{a} is outside R_0^+ (real part must be positive)")
    return GC(math.log(x), y / x, a.lam)


# ---------------------------------------------------------------------------
# Complexified ring C_Λ
# ---------------------------------------------------------------------------


def gcc_add(a: GCC, b: GCC) -> GCC:
    lam = _check_tags(a, b)
    return GCC(a.re + b.re, a.im + b.im, lam, a.im_star + b.im_star)


def gcc_mul(a: GCC, b: GCC) -> GCC:
    """Product in C_Λ.

    Raises:
        UnsupportedCaseError: For Λ = 0 when the product needs ℓ·ℓ*
    """
    lam = _check_tags(a, b)
    if lam is Lambda.ZERO:
        mixed = a.im * b.im_star + a.im_star * b.im
        if mixed != 0:
            raise UnsupportedCaseError("The product ℓ·ℓ* is not defined in C_0")
        return GCC(
            a.re * b.re,
            a.re * b.im + a.im * b.re,
            lam,
            a.re * b.im_star + a.im_star * b.re,
        )
    return GCC(a.re * b.re - lam.value * a.im * b.im, a.re * b.im + a.im * b.re, lam)


def gcc_star(a: GCC) -> GCC:
    """Conjugate-linear star: ℓ ↦ −Λℓ for Λ = ±1 and ℓ ↔ ℓ* for Λ = 0."""
    if a.lam is Lambda.ZERO:
        return GCC(a.re.conjugate(), a.im_star.conjugate(), a.lam, a.im.conjugate())
    return GCC(a.re.conjugate(), -a.lam.value * a.im.conjugate(), a.lam)


def gcc_close(a: GCC, b: GCC, tol: float = 1e-12) -> bool:
    _check_tags(a, b)
    scale = max(1.0, abs(a.re), abs(a.im), abs(a.im_star))
    return (
        abs(a.re - b.re) <= tol * scale
        and abs(a.im - b.im) <= tol * scale
        and abs(a.im_star - b.im_star) <= tol * scale
    )


# ---------------------------------------------------------------------------
# Admissible functional calculus
# ---------------------------------------------------------------------------


def _call_branch(func, argument):
    try:
        value = complex(func(argument))
    except (ZeroDivisionError, OverflowError, ValueError) as e:
        raise EvaluationError(f"Branch function undefined at {argument}: {e}", argument=argument) from e
    if not cmath.isfinite(value):
        raise EvaluationError(f"Branch function has a pole at {argument}", argument=argument)
    return value


def apply_admissible(f: AdmissibleFn, a: GC) -> GCC:
    """Evaluate an admissible function at a point of R_Λ.

    Args:
        f: Branch data with the same Λ tag as a
        a: Argument x + ℓy

    Returns:
        The value in C_Λ, recombined from the branch values

    Raises:
        UsageError: If the Λ tags differ
        EvaluationError: If a branch is undefined at its argument
    """
    lam = _check_tags(f, a)
    x, y = float(a.re), float(a.im)
    if lam is Lambda.NEGATIVE:
        u = _call_branch(f.plus, x + y)
        v = _call_branch(f.minus, x - y)
        return GCC((u + v) / 2, (u - v) / 2, lam)
    if lam is Lambda.POSITIVE:
        u = _call_branch(f.plus, complex(x, y))
        v = _call_branch(f.minus, complex(x, -y))
        return GCC((u + v) / 2, (u - v) / 2j, lam)
    value = _call_branch(f.f0, x)
    slope = _call_branch(f.df0, x)
    return GCC(value, slope * y, lam)


# ---------------------------------------------------------------------------
# Serialisation
# ---------------------------------------------------------------------------


def _scalar_to_json(value: Scalar):
    if isinstance(value, Fraction):
        return str(value)
    return float(value)


def _scalar_from_json(value) -> Scalar:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, int):
        return Fraction(value)
    return float(value)


def gc_to_json(a: GC) -> dict:
    """Encode as {"lambda", "re", "im"}; exact parts become "p/q" strings."""
    return {"lambda": a.lam.value, "re": _scalar_to_json(a.re), "im": _scalar_to_json(a.im)}


def gc_from_json(data: dict) -> GC:
    try:
        return GC(_scalar_from_json(data["re"]), _scalar_from_json(data["im"]), data["lambda"])
    except KeyError as e:
        raise UsageError(f"GC JSON object is missing field {e.args[0]!r}") from e
