"""Relation backends: classical limit, truncated series and matrix models."""

from __future__ import annotations

import logging
from collections.abc import Sequence

from ..classical import RatExpr, pullback_along
from ..cluster import ExMat, Move, MoveKind, Seed, apply_move_exmat
from ..settings import DEFAULT_SERIES_ORDER, MATRIX_DIMENSION_CAP
from .limit import limit_images
from .matrix_model import default_orders, verify_relation_numeric
from .models import Backend, RelationResult
from .mutation import compose_quantum
from .series import verify_psi_pentagon, verify_sharp_is_psi_conjugation

logger = logging.getLogger(__name__)


class ClassicalBackend:
    """q → 1 limit of the quantum composite, compared with the classical pullback."""

    backend = Backend.CLASSICAL

    def verify(self, exmat: ExMat, moves: list[Move], relation: str = "relation") -> RelationResult:
        seed = Seed(exmat)
        quantum = compose_quantum(seed, moves)
        limits = limit_images(quantum.images)
        classical = pullback_along(seed, moves)
        generators = [RatExpr.generator(i, exmat.n) for i in range(exmat.n)]
        matches = limits == list(classical.images)
        identity = limits == generators
        return RelationResult(
            relation,
            self.backend,
            matches and identity,
            details={
                "limit_matches_classical": matches,
                "limit_is_identity": identity,
                "quantum_words_reduced": quantum.is_identity(),
            },
        )


class SeriesBackend:
    """ψ-conjugation of every mutation on the path, plus the ψ pentagon for R3."""

    backend = Backend.SERIES

    def __init__(self, order: int = DEFAULT_SERIES_ORDER):
        self.order = order

    def verify(self, exmat: ExMat, moves: list[Move], relation: str = "relation") -> RelationResult:
        agreements: dict[str, int] = {}
        current = exmat
        for t, move in enumerate(moves):
            if move.kind is MoveKind.MUTATION:
                for check in verify_sharp_is_psi_conjugation(Seed(current), move.index, self.order):
                    agreements[f"step{t + 1}:{check.name}"] = check.agreement
            current = apply_move_exmat(current, move)
        if relation in ("R3", "pentagon"):
            pentagon = verify_psi_pentagon(self.order)
            agreements[pentagon.name] = pentagon.agreement
        passed = all(a >= self.order for a in agreements.values()) and current == exmat
        return RelationResult(relation, self.backend, passed, details={
            "order": self.order,
            "agreement": agreements,
        })


class MatrixBackend:
    """Clock/shift matrix models at several roots of unity."""

    backend = Backend.MATRIX

    def __init__(
        self,
        orders: Sequence[int] | None = None,
        tolerance: float = 1e-10,
        dimension_cap: int = MATRIX_DIMENSION_CAP,
    ):
        self.orders = tuple(orders) if orders else None
        self.tolerance = tolerance
        self.dimension_cap = dimension_cap

    def verify(self, exmat: ExMat, moves: list[Move], relation: str = "relation") -> RelationResult:
        orders = self.orders or default_orders(exmat)
        return verify_relation_numeric(
            exmat, moves, orders, relation, self.tolerance, self.dimension_cap
        )
