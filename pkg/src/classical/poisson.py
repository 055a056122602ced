"""The R_Λ-Poisson bracket {Z_i, Z_j} = ℓ ε_ij Z_i Z_j and its compatibility with mutation."""

from __future__ import annotations

import logging

import numpy as np

from ..cluster import ExMat, Seed, ThetaVec
from ..errors import UsageError
from .models import BracketCheck, CompatReport
from .pullback import classical_mutation
from .ratexpr import RatExpr, generator_field

logger = logging.getLogger(__name__)


def poisson_bracket(f: RatExpr, g: RatExpr, e: ExMat) -> RatExpr:
    """Compute ℓ Σ_ij ε_ij Z_i Z_j (∂f/∂Z_i)(∂g/∂Z_j).

    Args:
        f, g: Expressions without an ℓ marker, in the generators of e
        e: Exchange matrix defining the log-canonical bracket

    Returns:
        The bracket, marked with one power of ℓ

    Raises:
        UsageError: If the generator sets do not match e
    """
    n = e.n
    if f.n != n or g.n != n:
        raise UsageError(f"Bracket needs expressions in {n} generators, got {f.n} and {g.n}")
    if f.ell or g.ell:
        raise UsageError("Bracket arguments must not carry ℓ")
    _, gens = generator_field(n)
    df = [f.value.diff(z) for z in gens]
    dg = [g.value.diff(z) for z in gens]
    total = gens[0].field.zero
    for i in range(n):
        if not df[i]:
            continue
        for j in range(n):
            e_ij = e[i, j]
            if e_ij and dg[j]:
                total += e_ij * gens[i] * gens[j] * df[i] * dg[j]
    return RatExpr(total, ell=1)


def doubled_exmat(e: ExMat) -> ExMat:
    """Block form diag(ε, −ε) governing the (±) copies Z^(+), Z^(−)."""
    n = e.n
    block = np.zeros((2 * n, 2 * n), dtype=np.int64)
    block[:n, :n] = e.array
    block[n:, n:] = -e.array
    return ExMat.from_array(block)


def doubled_poisson_bracket(f: RatExpr, g: RatExpr, e: ExMat) -> RatExpr:
    """Bracket on ℚ(Z^(+), Z^(−)) with generators Z1..Zn then Z(n+1)..Z2n.

    The (−) copy carries −ℓ and the cross brackets vanish.
    """
    return poisson_bracket(f, g, doubled_exmat(e))


def check_poisson_compat(seed: Seed, k: int) -> CompatReport:
    """Verify {μ*Z'_i, μ*Z'_j} = ℓ ε'_ij (μ*Z'_i)(μ*Z'_j) for every pair i < j."""
    pullback = classical_mutation(seed, k)
    mutated = pullback.target.exmat
    report = CompatReport(k=k)
    images = pullback.images
    for i in range(seed.rank):
        for j in range(i + 1, seed.rank):
            lhs = poisson_bracket(images[i], images[j], seed.exmat)
            rhs = RatExpr(mutated[i, j] * images[i].value * images[j].value, ell=1)
            residual = lhs - rhs
            passed = residual.is_zero()
            report.checks.append(BracketCheck(i, j, passed, str(residual) if not passed else "0"))
    if not report.passed:
        logger.warning(f"Poisson compatibility failed at k={k} for {len(report.failures)} pairs")
    return report


def monomial(theta: ThetaVec | tuple[int, ...], n: int | None = None) -> RatExpr:
    coefficients = theta.coefficients if isinstance(theta, ThetaVec) else tuple(theta)
    return RatExpr.monomial(coefficients, n)


def is_casimir(theta: ThetaVec, e: ExMat) -> bool:
    """Z^θ Poisson-commutes with every generator."""
    z_theta = monomial(theta, e.n)
    return all(
        poisson_bracket(z_theta, RatExpr.generator(i, e.n), e).is_zero() for i in range(e.n)
    )
