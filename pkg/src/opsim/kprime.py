"""The linear part K′ of a mutation intertwiner at the symbol level.

K′ acts by pulling functions back along a linear substitution χ, so it
conjugates position symbols by Mᵀ and momentum symbols by M⁻¹.
"""

from __future__ import annotations

import logging

import sympy

from ..cluster import ExMat, mutate_exmat
from ..errors import DomainError, UsageError
from .models import HBAR, HSymbol, LinearMap
from .symbols import x_ring, x_symbol, x_tilde, y_symbol

logger = logging.getLogger(__name__)


def _positive(value: int) -> int:
    return max(value, 0)


def kprime_linear(exmat: ExMat, k: int) -> LinearMap:
    """t'_k ↦ −t_k + Σ_j [−ε_kj]_+ t_j and t'_i ↦ t_i for i ≠ k."""
    n = exmat.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index k={k} out of bounds for rank {n}")
    rows = []
    for i in range(n):
        if i == k:
            rows.append(tuple(-1 if j == k else _positive(-exmat[k, j]) for j in range(n)))
        else:
            rows.append(tuple(int(j == i) for j in range(n)))
    return LinearMap(tuple(rows))


def conjugate_symbol(m: LinearMap, s: HSymbol) -> HSymbol:
    """K′ s K′^{-1}: position coefficients become Mᵀa, momentum coefficients M^{-1}b.

    Raises:
        UsageError: If the ranks differ
    """
    if m.n != s.rank:
        raise UsageError(f"Map of rank {m.n} cannot act on a symbol of rank {s.rank}")
    try:
        inverse = m.inverse()
    except ValueError as e:
        raise DomainError(f"Linear map is not invertible: {m.matrix}") from e
    a = m.sympy_matrix.T * sympy.Matrix(s.a)
    b = inverse * sympy.Matrix(s.b)
    return HSymbol(tuple(a), tuple(b), s.c).simplify()


def kprime_chain(exmat: ExMat, ks: list[int]) -> tuple[LinearMap, ExMat]:
    """Composite pullback along the mutations ks (in time order) and the final exchange matrix."""
    composite = LinearMap(tuple(tuple(int(i == j) for j in range(exmat.n)) for i in range(exmat.n)))
    current = exmat
    for k in ks:
        step = kprime_linear(current, k)
        composite = composite.then(step)
        current = mutate_exmat(current, k)
    return composite, current


def expected_conjugate(exmat: ExMat, k: int, builder, i: int) -> HSymbol:
    """−b_k for i = k, b_i + [ε_ik]_+ b_k otherwise, with b = builder(exmat, ·)."""
    if i == k:
        return -builder(exmat, k)
    return builder(exmat, i) + builder(exmat, k).scale(_positive(exmat[i, k]))


def check_kprime_conjugation(exmat: ExMat, k: int, hbar=HBAR) -> dict[str, bool]:
    """Compare K′ s' K′^{-1} with the expected image for every x', y', x̊', x̃'.

    The primed symbols are built from the mutated exchange matrix; images are
    compared exactly against combinations of the unprimed symbols.

    Returns:
        Mapping "family[i]" → whether the image matches
    """
    mutated = mutate_exmat(exmat, k)
    m = kprime_linear(exmat, k)
    families = {
        "x": x_symbol,
        "y": y_symbol,
        "x_ring": lambda e, i: x_ring(e, i, hbar),
        "x_tilde": lambda e, i: x_tilde(e, i, hbar),
    }
    results = {}
    for name, builder in families.items():
        for i in range(exmat.n):
            image = conjugate_symbol(m, builder(mutated, i))
            results[f"{name}[{i}]"] = image.equals(expected_conjugate(exmat, k, builder, i))
    failed = [key for key, ok in results.items() if not ok]
    if failed:
        logger.warning(f"K′ conjugation at k={k} failed for {failed}")
    return results
