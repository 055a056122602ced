"""The classical limit q → 1 of quantum torus elements."""

from __future__ import annotations

from ..classical import RatExpr
from .coeff import at_one
from .torus import QElem


def classical_limit(elem: QElem) -> RatExpr:
    """Set q = q* = 1, turning X^a into Z^a and binomial factors into rational functions.

    Raises:
        DomainError: If a coefficient has a pole at q = 1
    """
    n = elem.ctx.n
    total = RatExpr.constant(0, n)
    for word, c in elem.terms.items():
        term = RatExpr.constant(at_one(c), n)
        for factor in word.factors:
            term = term * (1 + classical_limit(factor.base)) ** factor.sign
        total = total + term * RatExpr.monomial(word.exponent, n)
    return total


def limit_images(images) -> list[RatExpr]:
    return [classical_limit(img) for img in images]
