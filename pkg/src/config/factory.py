"""Factory functions to create relation backends and the suite runner from configuration."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from ..quantum.protocols import RelationBackend
    from ..verification.runner import SuiteRunner
    from .loader import QuantumConfig, SuiteConfig


def create_relation_backend(name: str, config: QuantumConfig | None = None) -> RelationBackend:
    """Create a quantum relation backend from configuration.

    Args:
        name: "classical", "series" or "matrix"
        config: Truncation order, matrix orders and tolerances (defaults if None)

    Returns:
        RelationBackend instance

    Raises:
        ValueError: If the backend name is not supported
    """
    from ..quantum import ClassicalBackend, MatrixBackend, SeriesBackend
    from .loader import QuantumConfig

    config = config or QuantumConfig()

    if name == "classical":
        return ClassicalBackend()

    elif name == "series":
        return SeriesBackend(order=config.series_order)

    elif name == "matrix":
        return MatrixBackend(
            orders=config.orders,
            tolerance=config.matrix_tolerance,
            dimension_cap=config.dimension_cap,
        )

    else:
        raise ValueError(f"Unsupported relation backend: {name}")


def create_relation_backends(config: QuantumConfig) -> dict[str, RelationBackend]:
    """Every backend the config lists, keyed by name."""
    return {name: create_relation_backend(name, config) for name in config.backends}


def create_suite_runner(config: SuiteConfig) -> SuiteRunner:
    """Create the orchestrator for a validated SuiteConfig."""
    from ..verification.runner import SuiteRunner

    return SuiteRunner(config)
