"""Value and contour types for quantum dilogarithm evaluation."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from ..errors import DomainError


class Method(Enum):
    """How a value was computed."""

    BARNES = "barnes"
    SLANTED = "slanted"
    COMPACT_RATIO = "compact_ratio"
    PRODUCT = "product"
    CLOSED_FORM = "closed_form"


class ShiftMode(Enum):
    """Difference-equation family used to move z into the strip."""

    UNIT = "unit"  # z → z ± 2πi
    H = "h"  # z → z ± 2πih


@dataclass(frozen=True)
class ContourSpec:
    """An admissible slanted Barnes contour e^{iθ}Ω_a for a given h.

    Attributes:
        h: Nonzero complex parameter with Re(h) ≥ 0
        a: Radius of the half circle, 0 < a < min(1, 1/|h|)
        theta: Slant angle; θ ∈ (−π/2, 0] if Im h > 0, θ ∈ [0, π/2) if
            Im h < 0, and θ ≠ 0 when Re h = 0
    """

    h: complex
    a: float
    theta: float

    def __post_init__(self):
        h = complex(self.h)
        object.__setattr__(self, "h", h)
        if h == 0:
            raise DomainError("h must be nonzero")
        if h.real < 0:
            raise DomainError(f"Contours need Re(h) ≥ 0, got h={h}")
        if not 0 < self.a < min(1.0, 1.0 / abs(h)):
            raise DomainError(f"Radius a={self.a} outside (0, min(1, 1/|h|))")
        if h.imag > 0 and not -math.pi / 2 < self.theta <= 0:
            raise DomainError(f"θ={self.theta} not in (−π/2, 0] for Im h > 0")
        if h.imag < 0 and not 0 <= self.theta < math.pi / 2:
            raise DomainError(f"θ={self.theta} not in [0, π/2) for Im h < 0")
        if h.real == 0 and self.theta == 0:
            raise DomainError("θ = 0 is not admissible when Re h = 0")

    @classmethod
    def default(cls, h: complex, z: complex | None = None) -> ContourSpec:
        """a = min(½·min(1, 1/|h|), 2/|z|); θ = 0 for Re h > 0, else ∓π/4 by the sign of Im h."""
        h = complex(h)
        if h == 0:
            raise DomainError("h must be nonzero")
        a = 0.5 * min(1.0, 1.0 / abs(h))
        if z is not None and abs(z) > 0:
            a = min(a, 2.0 / abs(z))
        theta = 0.0 if h.real > 0 else -math.copysign(math.pi / 4, h.imag)
        return cls(h, a, theta)

    @property
    def rotation(self) -> complex:
        return complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def half_width(self) -> float:
        """π(cos θ + Re(h e^{iθ})): the strip is |Im(e^{iθ}z)| < half_width."""
        return math.pi * (math.cos(self.theta) + (self.h * self.rotation).real)

    def in_strip(self, z: complex, margin: float = 0.0) -> bool:
        return abs((self.rotation * z).imag) < self.half_width - margin

    def decay(self, z: complex) -> float:
        """Exponential decay rate of the ray integrand at z."""
        return self.half_width - abs((self.rotation * z).imag)


@dataclass(frozen=True)
class QDValue:
    """A computed value with a heuristic error estimate.

    Attributes:
        value: Complex result
        est_error: Absolute error estimate, ≥ 0
        method: How the value was obtained
        shifts: Number of difference-equation shifts applied
        contour: Contour used by integral methods
    """

    value: complex
    est_error: float
    method: Method
    shifts: int = 0
    contour: ContourSpec | None = None

    def __post_init__(self):
        if not self.est_error >= 0:
            raise ValueError(f"est_error must be non-negative, got {self.est_error}")


@dataclass
class Residual:
    """One numeric identity check.

    Attributes:
        name: Identity checked
        residual: Observed deviation
        tolerance: Pass threshold
        details: Sample point and parameters
    """

    name: str
    residual: float
    tolerance: float
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)
