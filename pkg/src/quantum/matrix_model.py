"""Clock and shift representations of quantum tori at roots of unity.

For every pair i < j with A_ij = 2rε_ij mod N nonzero, the representation
carries a tensor slot of size N in which W_i acts by C^{A_ij} and W_j by the
shift S, where C S = ζ S C and ζ = exp(2πi/N). Every other generator acts
trivially on that slot, so W_i W_j = ζ^{A_ij} W_j W_i = q^{2ε_ij} W_j W_i
with q = ζ^r.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np
import scipy.linalg

from ..cluster import ExMat, Move
from ..errors import MatrixModelError, UsageError
from ..settings import DEFAULT_MATRIX_ORDERS, MATRIX_DIMENSION_CAP
from .coeff import evaluate
from .models import Backend, MatrixModel, RelationResult
from .mutation import move_map
from .torus import QElem

logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e12


def clock(order: int) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * np.arange(order) / order))


def shift(order: int) -> np.ndarray:
    return np.roll(np.eye(order, dtype=complex), 1, axis=0)


def default_scales(n: int) -> list[complex]:
    """Generic scalars off the unit circle so that no 1 + q^m W is singular."""
    return [0.7 + 0.1j + 0.05 * i for i in range(n)]


def _kron_all(factors: Sequence[np.ndarray]) -> np.ndarray:
    result = np.ones((1, 1), dtype=complex)
    for f in factors:
        result = np.kron(result, f)
    return result


def build_matrix_model(
    exmat: ExMat,
    order: int,
    r: int = 1,
    scales: Sequence[complex] | None = None,
    dimension_cap: int = MATRIX_DIMENSION_CAP,
) -> MatrixModel:
    """Matrices W_1..W_n with W_i W_j = q^{2ε_ij} W_j W_i at q = exp(2πi r/N).

    Raises:
        UsageError: If N is even or shares a factor with 2r
        MatrixModelError: If the representation would exceed dimension_cap
    """
    if order < 3 or order % 2 == 0 or math.gcd(order, 2 * r) != 1:
        raise UsageError(f"Matrix order N={order} must be odd, ≥ 3 and coprime to 2r={2 * r}")
    n = exmat.n
    scales = list(scales) if scales is not None else default_scales(n)
    eps = exmat.array
    pairs = [
        (i, j, int(2 * r * eps[i, j]) % order)
        for i in range(n)
        for j in range(i + 1, n)
        if (2 * r * eps[i, j]) % order
    ]
    dimension = order ** max(1, len(pairs))
    if dimension > dimension_cap:
        raise MatrixModelError(
            f"Representation of dimension {dimension} exceeds the cap {dimension_cap}; "
            f"use a smaller N than {order}"
        )
    c, s = clock(order), shift(order)
    identity = np.eye(order, dtype=complex)
    matrices = []
    for i in range(n):
        if pairs:
            slots = []
            for a, b, power in pairs:
                if i == a:
                    slots.append(np.linalg.matrix_power(c, power))
                elif i == b:
                    slots.append(s)
                else:
                    slots.append(identity)
        else:
            slots = [np.linalg.matrix_power(c, i + 1)]
        matrices.append(scales[i] * _kron_all(slots))
    model = MatrixModel(order, r, matrices)
    model.residual = commutation_residual(exmat, model)
    logger.debug(f"Matrix model N={order}: dimension {dimension}, residual {model.residual:.2e}")
    return model


def commutation_residual(exmat: ExMat, model: MatrixModel) -> float:
    """max_{i<j} ‖W_iW_j − q^{2ε_ij}W_jW_i‖ / (‖W_i‖‖W_j‖)."""
    q = model.q
    worst = 0.0
    w = model.matrices
    for i in range(exmat.n):
        for j in range(i + 1, exmat.n):
            diff = w[i] @ w[j] - q ** (2 * exmat[i, j]) * (w[j] @ w[i])
            scale = scipy.linalg.norm(w[i]) * scipy.linalg.norm(w[j])
            worst = max(worst, float(scipy.linalg.norm(diff) / scale))
    return worst


def evaluate_elem(elem: QElem, matrices: Sequence[np.ndarray], q: complex) -> np.ndarray:
    """Evaluate elem with X_i ↦ matrices[i] and q ↦ q.

    Raises:
        MatrixModelError: If a factor (1 + B)^{-1} is numerically singular
    """
    dim = matrices[0].shape[0]
    identity = np.eye(dim, dtype=complex)
    inverses: dict[int, np.ndarray] = {}

    def power(i: int, e: int) -> np.ndarray:
        if e < 0:
            if i not in inverses:
                inverses[i] = scipy.linalg.solve(matrices[i], identity)
            return np.linalg.matrix_power(inverses[i], -e)
        return np.linalg.matrix_power(matrices[i], e)

    total = np.zeros((dim, dim), dtype=complex)
    for word, c in elem.terms.items():
        term = evaluate(c, q) * identity
        for factor in word.factors:
            base = identity + evaluate_elem(factor.base, matrices, q)
            if factor.sign > 0:
                term = term @ base
                continue
            condition = np.linalg.cond(base)
            if not np.isfinite(condition) or condition > CONDITION_LIMIT:
                raise MatrixModelError(f"Factor {factor} is singular (condition {condition:.2e})")
            term = term @ scipy.linalg.solve(base, identity)
        mono = evaluate(elem.ctx.ordering_phase(word.exponent), q) * identity
        for i, e in enumerate(word.exponent):
            if e:
                mono = mono @ power(i, e)
        total += term @ mono
    return total


def default_orders(exmat: ExMat) -> tuple[int, ...]:
    """Three roots of unity: (5, 7, 11) for at most one interacting pair, else (3, 5, 7)."""
    n = exmat.n
    pairs = sum(1 for i in range(n) for j in range(i + 1, n) if exmat[i, j])
    return tuple(DEFAULT_MATRIX_ORDERS) if pairs <= 1 else (3, 5, 7)


def _relation_deviation(exmat: ExMat, moves: list[Move], model: MatrixModel) -> float:
    initial = model.matrices
    current = list(initial)
    step_exmat = exmat
    for move in moves:
        step = move_map(step_exmat, move)
        current = [evaluate_elem(img, current, model.q) for img in step.images]
        step_exmat = step.target
    if step_exmat != exmat:
        raise UsageError("Move sequence does not return to the initial exchange matrix")
    return max(
        float(scipy.linalg.norm(w1 - w0) / scipy.linalg.norm(w0))
        for w0, w1 in zip(initial, current)
    )


def verify_relation_numeric(
    exmat: ExMat,
    moves: list[Move],
    orders: Sequence[int] | None = None,
    relation: str = "relation",
    tolerance: float = 1e-10,
    dimension_cap: int = MATRIX_DIMENSION_CAP,
) -> RelationResult:
    """Push the matrix model through the moves and compare with where it started.

    For each N the deviation is max_j ‖W_j^{final} − W_j‖ / ‖W_j‖. A model
    that hits a singular factor is retried once at the next admissible N.
    """
    details: dict[str, float] = {}
    for order in orders or default_orders(exmat):
        candidate = order
        for attempt in range(2):
            try:
                model = build_matrix_model(exmat, candidate, dimension_cap=dimension_cap)
                if model.residual > tolerance:
                    raise MatrixModelError(
                        f"Construction residual {model.residual:.2e} above {tolerance:.0e}"
                    )
                details[str(candidate)] = _relation_deviation(exmat, moves, model)
                break
            except MatrixModelError as e:
                logger.warning(f"N={candidate}: {e}")
                if attempt == 1:
                    raise
                candidate += 2
    deviation = max(details.values()) if details else float("inf")
    passed = deviation <= tolerance
    logger.info(f"{relation}: matrix deviation {deviation:.2e} over N={list(details)}")
    return RelationResult(relation, Backend.MATRIX, passed, deviation, {"per_order": details})
