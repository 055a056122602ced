"""Evaluation of rational functions at R_Λ points and puncture constraints."""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence

from sympy import factor_list

from ..cluster import Tri, theta_from_punctures
from ..errors import EvaluationError, UsageError
from ..gencomplex import GC, gc_close, gc_inv, gc_is_unit, gc_mul, gc_pow
from .models import PunctureCheck
from .ratexpr import RatExpr, to_fraction

logger = logging.getLogger(__name__)


def _as_list(point: Mapping[int, GC] | Sequence[GC], n: int) -> list[GC]:
    if isinstance(point, Mapping):
        missing = [i for i in range(n) if i not in point]
        if missing:
            raise UsageError(f"Point is missing coordinates {missing}")
        coords = [point[i] for i in range(n)]
    else:
        coords = list(point)
    if len(coords) != n:
        raise UsageError(f"Expected {n} coordinates, got {len(coords)}")
    tags = {c.lam for c in coords}
    if len(tags) > 1:
        raise UsageError("Point coordinates carry different Λ tags")
    return coords


def _eval_poly(poly, coords: list[GC]) -> GC:
    lam = coords[0].lam
    total = GC.zero(lam)
    for monom, coeff in poly.terms():
        term = GC(to_fraction(coeff), 0, lam)
        for z, e in zip(coords, monom):
            if e:
                term = gc_mul(term, gc_pow(z, e))
        total = total + term
    return total


def _offending_factor(f: RatExpr, coords: list[GC]) -> str:
    denom_expr = f.denom.as_expr()
    _, factors = factor_list(denom_expr)
    ring = f.denom.ring
    for factor, _ in factors:
        value = _eval_poly(ring.from_expr(factor), coords)
        if not gc_is_unit(value):
            return str(factor)
    return str(denom_expr)


def eval_at_point(f: RatExpr, point: Mapping[int, GC] | Sequence[GC]) -> GC:
    """Evaluate f at a point of X(R_Λ) with gencomplex arithmetic.

    Args:
        f: Rational function in Z1..Zn
        point: Coordinates Z_i as GC values (mapping from 0-based index or a sequence)

    Returns:
        The value in R_Λ

    Raises:
        EvaluationError: If the denominator is not a unit; the message names
            the factor at fault
    """
    coords = _as_list(point, f.n)
    numer = _eval_poly(f.numer, coords)
    denom = _eval_poly(f.denom, coords)
    if not gc_is_unit(denom):
        factor = _offending_factor(f, coords)
        raise EvaluationError(
            f"Denominator factor {factor} is a zero divisor at the point", argument=factor
        )
    return gc_mul(numer, gc_inv(denom))


def check_puncture_constraint(
    tri: Tri,
    point: Mapping[int, GC] | Sequence[GC],
    tol: float = 1e-12,
) -> dict[str, PunctureCheck]:
    """Evaluate Z_p = Π Z_i^{θ_ip} for every puncture p and compare with 1."""
    coords = _as_list(point, len(tri.arcs))
    lam = coords[0].lam
    one = GC.one(lam)
    results = {}
    for theta in theta_from_punctures(tri):
        value = one
        for z, e in zip(coords, theta.coefficients):
            if e:
                value = gc_mul(value, gc_pow(z, e))
        satisfied = value == one if value.exact else gc_close(value, one, tol)
        results[theta.tag] = PunctureCheck(theta.tag, theta.coefficients, value, satisfied)
        logger.debug(f"Puncture {theta.tag}: Z_p = {value} (satisfied={satisfied})")
    return results
