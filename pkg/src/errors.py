"""Exception hierarchy shared by every cluster-lambda package.

Each class also derives from the closest builtin exception so callers can
catch either the project-specific type or the builtin one.
"""

from __future__ import annotations

from typing import Any


class ClusterLambdaError(Exception):
    """Base class for all cluster-lambda errors."""


class UsageError(ClusterLambdaError, ValueError):
    """Operands do not share a context (Λ tag, seed, rank, generator set)."""


class DomainError(ClusterLambdaError, ValueError):
    """Argument lies outside the domain on which an operation is defined."""


class UnsupportedCaseError(DomainError):
    """Operation is not defined for this Λ or sector combination."""


class PoleError(DomainError):
    """Evaluation point is within the pole threshold of a singularity."""

    def __init__(
        self,
        message: str,
        point: complex | None = None,
        lattice: tuple[int, int, str] | None = None,
    ):
        super().__init__(message)
        self.point = point
        self.lattice = lattice


class EvaluationError(ClusterLambdaError, ArithmeticError):
    """A function or denominator cannot be evaluated at the given argument."""

    def __init__(self, message: str, argument: Any = None):
        super().__init__(message)
        self.argument = argument


class TriangulationError(ClusterLambdaError, ValueError):
    """Malformed triangulation encoding or a refused flip."""


class QuadratureError(ClusterLambdaError, RuntimeError):
    """Numerical integration did not reach its tolerance."""

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class MatrixModelError(ClusterLambdaError, RuntimeError):
    """No admissible root-of-unity representation could be built."""


class ConfigError(ClusterLambdaError, ValueError):
    """Invalid configuration, profile or input file."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class AccuracyWarning(UserWarning):
    """Discretisation is too coarse for the requested tolerance."""
