"""Data models for classical cluster X-mutation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..cluster import Seed
    from ..gencomplex import GC
    from .ratexpr import RatExpr


@dataclass(frozen=True)
class PullbackMap:
    """Pullback of the target seed's generators, written in the source seed's generators."""

    source: Seed
    target: Seed
    images: tuple[RatExpr, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if len(self.images) != self.target.rank:
            raise ValueError(f"Expected {self.target.rank} images, got {len(self.images)}")
        if any(img.n != self.source.rank for img in self.images):
            raise ValueError("Images must be written in the source seed's generators")

    def is_identity(self) -> bool:
        from .ratexpr import RatExpr

        n = self.source.rank
        return self.source == self.target and all(
            img == RatExpr.generator(i, n) for i, img in enumerate(self.images)
        )


@dataclass(frozen=True)
class BracketCheck:
    """Outcome of {μ*Z'_i, μ*Z'_j} = ℓ ε'_ij (μ*Z'_i)(μ*Z'_j) for one pair."""

    i: int
    j: int
    passed: bool
    residual: str = "0"


@dataclass
class CompatReport:
    """Poisson compatibility of one mutation, pair by pair."""

    k: int
    checks: list[BracketCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[BracketCheck]:
        return [check for check in self.checks if not check.passed]


@dataclass(frozen=True)
class PunctureCheck:
    """Value of the puncture monomial Z^θ_p at a point."""

    puncture: str
    theta: tuple[int, ...]
    value: GC
    satisfied: bool
