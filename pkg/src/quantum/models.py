"""Result types for quantum torus checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np


class Backend(Enum):
    """How a quantum relation is certified."""

    CLASSICAL = "classical"
    SERIES = "series"
    MATRIX = "matrix"

    @classmethod
    def parse(cls, value: str | Backend) -> Backend:
        if isinstance(value, Backend):
            return value
        try:
            return cls(value.lower())
        except ValueError:
            raise ValueError(
                f"Unsupported backend: {value}. Supported: {[b.value for b in cls]}"
            ) from None


@dataclass(frozen=True)
class SeriesCheck:
    """Agreement of two truncated series.

    Attributes:
        name: What was compared
        order: Truncation order D
        agreement: Largest degree d ≤ D up to which every coefficient agrees,
            or -1 when the constant terms already differ
    """

    name: str
    order: int
    agreement: int

    @property
    def passed(self) -> bool:
        return self.agreement >= self.order


@dataclass
class MatrixModel:
    """Finite-dimensional matrices W_i with W_i W_j = q^{2ε_ij} W_j W_i.

    Attributes:
        order: Root-of-unity order N
        r: q = exp(2πi r/N)
        matrices: One square matrix per generator
        residual: Largest construction residual ‖W_iW_j − q^{2ε_ij}W_jW_i‖
    """

    order: int
    r: int
    matrices: list[np.ndarray]
    residual: float = 0.0

    @property
    def q(self) -> complex:
        return complex(np.exp(2j * np.pi * self.r / self.order))

    @property
    def dimension(self) -> int:
        return self.matrices[0].shape[0]


@dataclass
class RelationResult:
    """Outcome of one relation check with one backend.

    Attributes:
        relation: Relation name
        backend: Backend used
        passed: Whether the check succeeded
        deviation: Numerical deviation (0.0 for exact backends)
        details: Per-order or per-component information
    """

    relation: str
    backend: Backend
    passed: bool
    deviation: float = 0.0
    details: dict = field(default_factory=dict)
