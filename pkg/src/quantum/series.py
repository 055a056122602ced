"""Truncated formal series in a quantum torus and the quantum dilogarithm ψ^q."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from sympy.polys.fields import FracElement

from ..cluster import Seed
from ..errors import UsageError
from .coeff import ONE, Q, ZERO, coerce
from .models import SeriesCheck
from .mutation import mu_sharp
from .torus import Exponent, QContext, QElem

logger = logging.getLogger(__name__)


@dataclass
class QSeries:
    """Σ c_a X^a truncated at weighted degree w·a ≤ order.

    Attributes:
        ctx: Quantum torus of the monomials
        weights: Integer degree of each generator
        order: Truncation order D
        terms: Weyl monomial exponent → coefficient
    """

    ctx: QContext
    weights: tuple[int, ...]
    order: int
    terms: dict[Exponent, FracElement] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {
            a: c for a, c in self.terms.items() if c and self.degree(a) <= self.order
        }

    def degree(self, a: Exponent) -> int:
        return sum(w * e for w, e in zip(self.weights, a))

    def _like(self, terms: dict[Exponent, FracElement]) -> QSeries:
        return QSeries(self.ctx, self.weights, self.order, terms)

    @classmethod
    def constant(cls, ctx: QContext, weights, order: int, c=ONE) -> QSeries:
        return cls(ctx, tuple(weights), order, {ctx.zero_exponent(): coerce(c)})

    def __add__(self, other: QSeries) -> QSeries:
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, ZERO) + c
        return self._like(terms)

    def __neg__(self) -> QSeries:
        return self._like({a: -c for a, c in self.terms.items()})

    def __sub__(self, other: QSeries) -> QSeries:
        return self + (-other)

    def __mul__(self, other: QSeries) -> QSeries:
        terms: dict[Exponent, FracElement] = {}
        for a, c1 in self.terms.items():
            da = self.degree(a)
            for b, c2 in other.terms.items():
                if da + self.degree(b) > self.order:
                    continue
                key = tuple(x + y for x, y in zip(a, b))
                terms[key] = terms.get(key, ZERO) + c1 * c2 * self.ctx.phase(a, b)
        return self._like(terms)

    def geometric(self, sign: int) -> QSeries:
        """(1 + self)^sign for a series without terms of degree ≤ 0."""
        if any(self.degree(a) <= 0 for a in self.terms):
            raise UsageError("Only series of positive degree can be expanded as (1 + s)^±1")
        one = QSeries.constant(self.ctx, self.weights, self.order)
        if sign > 0:
            return one + self
        result, power = one, one
        for _ in range(self.order):
            power = power * (-self)
            result = result + power
        return result

    def inverse(self) -> QSeries:
        """Inverse of a series whose constant term is a nonzero scalar."""
        c0 = self.terms.get(self.ctx.zero_exponent(), ZERO)
        if not c0:
            raise UsageError("Series has no invertible constant term")
        normalised = self._like({a: c / c0 for a, c in self.terms.items()})
        rest = normalised - QSeries.constant(self.ctx, self.weights, self.order)
        inv = rest.geometric(-1)
        return inv._like({a: c / c0 for a, c in inv.terms.items()})

    def agreement(self, other: QSeries) -> int:
        """Largest d ≤ order with all coefficients of degree ≤ d equal (-1 if none)."""
        diff = self - other
        if not diff.terms:
            return self.order
        return min(self.degree(a) for a in diff.terms) - 1


def psi_series(order: int, sign: int = 1) -> list[FracElement]:
    """Coefficients c_0..c_order of ψ^{q^sign}(z) = Π_{n≥1} (1 + q^{sign(2n−1)} z)^{-1}.

    They follow from ψ(q²z) = (1 + qz)ψ(z): c_n = q c_{n−1} / (q^{2n} − 1).
    """
    if order < 0:
        raise UsageError("Series order must be non-negative")
    q = Q**sign
    coeffs = [ONE]
    for n in range(1, order + 1):
        coeffs.append(q * coeffs[-1] / (q ** (2 * n) - 1))
    return coeffs


def psi_of(x: QElem, weights: Sequence[int], order: int, sign: int = 1,
           coefficients: list[FracElement] | None = None) -> QSeries:
    """ψ^{q^sign}(x) for a monomial x = c·X^a of positive degree."""
    single = x.single_word()
    if single is None or single[1].factors:
        raise UsageError("ψ can only be applied to a single monomial")
    c, word = single
    weights = tuple(weights)
    step = sum(w * e for w, e in zip(weights, word.exponent))
    if step <= 0:
        raise UsageError(f"ψ argument {x} has non-positive degree {step}")
    coeffs = coefficients or psi_series(order, sign)
    terms = {}
    for n in range(order // step + 1):
        exponent = tuple(n * e for e in word.exponent)
        terms[exponent] = coeffs[n] * c**n
    return QSeries(x.ctx, weights, order, terms)


def to_series(elem: QElem, weights: Sequence[int], order: int) -> QSeries:
    """Expand an element whose factor bases all have positive degree."""
    weights = tuple(weights)
    total = QSeries(elem.ctx, weights, order)
    for word, c in elem.terms.items():
        term = QSeries.constant(elem.ctx, weights, order, c)
        for factor in word.factors:
            term = term * to_series(factor.base, weights, order).geometric(factor.sign)
        term = term * QSeries(elem.ctx, weights, order, {word.exponent: ONE})
        total = total + term
    return total


def verify_psi_difference(order: int = 8) -> SeriesCheck:
    """ψ(q²z) = (1 + qz)ψ(z) and ψ(z)^{-1} = Σ_n q^{n²} zⁿ / Π_{k≤n} (1 − q^{2k}), both to the given order."""
    ctx = QContext(((0,),))
    z = QElem.generator(ctx, 0)
    psi = psi_of(z, (1,), order)
    shifted = psi_of(z * Q**2, (1,), order)
    linear = QSeries(ctx, (1,), order, {(0,): ONE, (1,): Q})
    agree = shifted.agreement(linear * psi)
    euler, denominator = {}, ONE
    for n in range(order + 1):
        if n:
            denominator = denominator * (ONE - Q ** (2 * n))
        euler[(n,)] = Q ** (n * n) / denominator
    agree = min(agree, psi.inverse().agreement(QSeries(ctx, (1,), order, euler)))
    return SeriesCheck("psi difference equation", order, agree)


def pentagon_context() -> QContext:
    """Rank 2 with ε_12 = 1, so U = X_1, V = X_2 satisfy UV = q²VU and qVU = X^{(1,1)}."""
    return QContext(((0, 1), (-1, 0)))


def verify_psi_pentagon(order: int = 8, perturb: int | None = None) -> SeriesCheck:
    """ψ(U)ψ(V) = ψ(V)ψ(qVU)ψ(U) coefficientwise up to total degree `order`.

    Args:
        order: Truncation order D
        perturb: If given, add 1 to the coefficient c_perturb of the left-hand
            ψ(U); the returned agreement then stops below that degree
    """
    ctx = pentagon_context()
    weights = (1, 1)
    u = QElem.generator(ctx, 0)
    v = QElem.generator(ctx, 1)
    w = QElem.monomial(ctx, (1, 1))
    coeffs = psi_series(order)
    perturbed = list(coeffs)
    if perturb is not None:
        if not 0 <= perturb <= order:
            raise UsageError(f"Perturbed coefficient {perturb} outside 0..{order}")
        perturbed[perturb] = perturbed[perturb] + 1
    lhs = psi_of(u, weights, order, coefficients=perturbed) * psi_of(v, weights, order)
    rhs = psi_of(v, weights, order) * psi_of(w, weights, order) * psi_of(u, weights, order)
    check = SeriesCheck("psi pentagon", order, lhs.agreement(rhs))
    logger.info(f"Pentagon agrees to order {check.agreement} of {order}")
    return check


def verify_sharp_is_psi_conjugation(seed: Seed, k: int, order: int = 8) -> list[SeriesCheck]:
    """μ♯_k(X_i) = ψ(X_k) X_i ψ(X_k)^{-1} as series in X_k, for every i."""
    ctx = QContext.from_exmat(seed.exmat)
    weights = ctx.unit(k)
    psi = psi_of(QElem.generator(ctx, k), weights, order)
    psi_inv = psi.inverse()
    checks = []
    for i, image in enumerate(mu_sharp(seed, k)):
        xi = QSeries(ctx, weights, order, {ctx.unit(i): ONE})
        conjugated = psi * xi * psi_inv
        checks.append(
            SeriesCheck(f"sharp conjugation X{i + 1}", order,
                        conjugated.agreement(to_series(image, weights, order)))
        )
    return checks
