"""Configuration system for verification profiles and backends."""

from .loader import (
    ALL_SUITES,
    ClassicalConfig,
    OpsimConfig,
    OutputConfig,
    QDilogConfig,
    QuantumConfig,
    SuiteConfig,
    load_config,
    load_config_from_env,
    load_config_from_yaml,
    parse_complex,
    validate_config,
)
from .factory import (
    create_relation_backend,
    create_relation_backends,
    create_suite_runner,
)

__all__ = [
    # Loader
    "ALL_SUITES",
    "load_config",
    "load_config_from_env",
    "load_config_from_yaml",
    "parse_complex",
    "validate_config",
    # Models
    "ClassicalConfig",
    "OpsimConfig",
    "OutputConfig",
    "QDilogConfig",
    "QuantumConfig",
    "SuiteConfig",
    # Factory
    "create_relation_backend",
    "create_relation_backends",
    "create_suite_runner",
]
