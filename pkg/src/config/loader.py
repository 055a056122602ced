"""Configuration loader with Pydantic validation and env var expansion."""

from __future__ import annotations

import logging
import os
import re
from pathlib import Path
from typing import Literal

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..errors import ConfigError
from ..settings import (
    DEFAULT_SERIES_ORDER,
    GRID_1D_EXTENT,
    GRID_1D_POINTS,
    GRID_2D_EXTENT,
    GRID_2D_POINTS,
    HBAR_RANGE,
    MATRIX_DIMENSION_CAP,
    MODULAR_DIM,
    PROFILE,
    RANDOM_SEED,
    WORKERS,
)

logger = logging.getLogger(__name__)

SuiteName = Literal["cluster", "classical", "quantum", "qdilog", "opsim"]
ALL_SUITES: tuple[str, ...] = ("cluster", "classical", "quantum", "qdilog", "opsim")

_COMPLEX_PATTERN = re.compile(r"^\s*i\s*([-+]?[\d.eE+-]+)\s*$")


def parse_complex(text: str | float | complex) -> complex:
    """Parse "0.7", "2i", "i0.5", "0.1+0.2i" or "0.1+0.2j" into a complex number.

    Raises:
        ValueError: If the text is not a complex literal
    """
    if isinstance(text, (int, float, complex)):
        return complex(text)
    cleaned = text.strip().replace(" ", "")
    match = _COMPLEX_PATTERN.match(cleaned)
    if match:
        return complex(0.0, float(match.group(1)))
    if cleaned in ("i", "+i"):
        return 1j
    if cleaned == "-i":
        return -1j
    cleaned = cleaned.replace("i", "j")
    if cleaned.endswith("j") and cleaned[:-1] in ("", "+", "-"):
        cleaned = cleaned[:-1] + "1j"
    try:
        return complex(cleaned)
    except ValueError:
        raise ValueError(f"Not a complex number: {text!r}") from None


class ClassicalConfig(BaseModel):
    """Randomised classical checks."""

    model_config = ConfigDict(extra="forbid")

    random_seeds: int = Field(50, ge=0)  # Poisson compatibility samples
    max_rank: int = Field(4, ge=2, le=6)
    entry_bound: int = Field(2, ge=1, le=4)
    laurent_length: int = Field(4, ge=1, le=6)
    exmat_samples: int = Field(100, ge=0)  # ε-level involution/pentagon samples
    flip_sequences: int = Field(20, ge=0)
    flip_length: int = Field(20, ge=1)


class QuantumConfig(BaseModel):
    """Quantum relation backends and their truncations."""

    model_config = ConfigDict(extra="forbid")

    backends: list[Literal["classical", "series", "matrix"]] = ["classical", "series", "matrix"]
    relations: list[Literal["R1", "R2", "R3", "R4", "R5"]] = ["R1", "R2", "R3", "R4", "R5"]
    series_order: int = Field(DEFAULT_SERIES_ORDER, ge=1, le=16)
    matrix_orders: list[int] | None = None
    matrix_tolerance: float = Field(1e-8, gt=0)
    dimension_cap: int = Field(MATRIX_DIMENSION_CAP, ge=1)

    @field_validator("matrix_orders")
    @classmethod
    def _odd_orders(cls, value: list[int] | None) -> list[int] | None:
        if value is None:
            return value
        if not value or any(n < 3 or n % 2 == 0 for n in value):
            raise ValueError(f"matrix orders must be odd and at least 3, got {value}")
        return value

    @property
    def orders(self) -> tuple[int, ...] | None:
        return tuple(self.matrix_orders) if self.matrix_orders else None


class QDilogConfig(BaseModel):
    """Property suite parameters for Φ^h and F_Λ."""

    model_config = ConfigDict(extra="forbid")

    h_values: list[str] = ["0.3", "0.7", "1", "0.5i", "1i", "2i"]
    samples: int = Field(5, ge=1, le=25)
    f_lambda_points: int = Field(5, ge=1, le=11)  # per axis
    include_flat: bool = True

    @field_validator("h_values", mode="before")
    @classmethod
    def _parse_hs(cls, value):
        if not isinstance(value, list):
            return value
        value = [str(text) for text in value]
        for text in value:
            h = parse_complex(text)
            if h == 0:
                raise ValueError("h must be non-zero")
            if h.real < 0 or (h.real == 0 and h.imag < 0):
                raise ValueError(f"h={text} lies outside the closed right half-plane")
        return value

    @property
    def hs(self) -> list[complex]:
        return [parse_complex(text) for text in self.h_values]


class OpsimConfig(BaseModel):
    """Grid sizes and symbol-level sample counts for operator checks."""

    model_config = ConfigDict(extra="forbid")

    points_1d: int = Field(GRID_1D_POINTS, ge=64)
    extent_1d: float = Field(GRID_1D_EXTENT, gt=0)
    points_2d: int = Field(GRID_2D_POINTS, ge=32)
    extent_2d: float = Field(GRID_2D_EXTENT, gt=0)
    modular_dim: int = Field(MODULAR_DIM, ge=4)
    kprime_seeds: int = Field(50, ge=0)
    pentagon_hbars: list[float] = [1.0]
    pentagons: bool = True


class OutputConfig(BaseModel):
    """Where reports go."""

    model_config = ConfigDict(extra="forbid")

    report_path: Path | None = None
    summary_path: Path | None = None
    table_format: Literal["csv", "json"] = "csv"


class SuiteConfig(BaseModel):
    """Root configuration of a verification run.

    Attributes:
        suites: Suites to run, in report order
        lam: Λ for the Λ-dependent checks, or None for all three
        hbars: Planck parameters for F_Λ properties and operator pentagons
        seed_path: Optional seed file checked in addition to the stock seeds
        triangulation_path: Optional triangulation file checked in addition to the stock ones
        workers: Concurrent suites
        random_seed: Seed of every randomised check
        record_timings: Keep per-check runtimes in JSON reports
        controls: Also run negative controls, which pass when a broken identity fails
    """

    model_config = ConfigDict(extra="forbid")

    suites: list[SuiteName] = list(ALL_SUITES)
    lam: Literal[-1, 0, 1] | None = None
    hbars: list[float] = [0.5, 1.0]
    seed_path: Path | None = None
    triangulation_path: Path | None = None
    workers: int = Field(WORKERS, ge=1, le=64)
    random_seed: int = Field(RANDOM_SEED, ge=0)
    record_timings: bool = False
    controls: bool = True
    classical: ClassicalConfig = ClassicalConfig()
    quantum: QuantumConfig = QuantumConfig()
    qdilog: QDilogConfig = QDilogConfig()
    opsim: OpsimConfig = OpsimConfig()
    output: OutputConfig = OutputConfig()

    @field_validator("hbars")
    @classmethod
    def _hbar_range(cls, value: list[float]) -> list[float]:
        low, high = HBAR_RANGE
        for hbar in value:
            if not low <= hbar <= high:
                raise ValueError(f"ℏ={hbar} outside [{low}, {high}]")
        return value

    @model_validator(mode="after")
    def _unique_suites(self) -> SuiteConfig:
        if len(set(self.suites)) != len(self.suites):
            raise ValueError(f"suites listed twice: {self.suites}")
        return self

    @property
    def lambdas(self) -> list[int]:
        return [-1, 0, 1] if self.lam is None else [self.lam]


def expand_env_vars(value: str) -> str:
    """Expand ${VAR} references in string with environment variables.

    Args:
        value: String potentially containing env var references

    Returns:
        String with env vars expanded; unknown variables are left as written
    """
    if not isinstance(value, str):
        return value

    pattern = r"\$\{([^}]+)\}"

    def replacer(match):
        var_name = match.group(1)
        return os.environ.get(var_name, match.group(0))

    return re.sub(pattern, replacer, value)


def expand_env_vars_recursive(data):
    """Recursively expand env vars in nested dict/list structures."""
    if isinstance(data, dict):
        return {k: expand_env_vars_recursive(v) for k, v in data.items()}
    elif isinstance(data, list):
        return [expand_env_vars_recursive(item) for item in data]
    elif isinstance(data, str):
        return expand_env_vars(data)
    else:
        return data


def field_path(error: ValidationError) -> str:
    """Dotted location of the first validation error."""
    first = error.errors()[0]
    return ".".join(str(part) for part in first["loc"]) or "<root>"


def validate_config(data: dict, source: str = "<config>") -> SuiteConfig:
    """Validate a raw config mapping.

    Raises:
        ConfigError: Naming the first invalid field
    """
    try:
        return SuiteConfig.model_validate(data)
    except ValidationError as e:
        path = field_path(e)
        raise ConfigError(
            f"Invalid config in {source}: field '{path}': {e.errors()[0]['msg']}", field=path
        ) from e


def load_config_from_yaml(config_path: Path, profile_name: str) -> SuiteConfig:
    """Load one profile from a YAML file.

    Args:
        config_path: Path to config YAML file
        profile_name: Name of profile to load

    Returns:
        SuiteConfig for the requested profile

    Raises:
        FileNotFoundError: If config file doesn't exist
        ConfigError: If the file or the profile is invalid
        KeyError: If profile doesn't exist
    """
    with open(config_path, encoding="utf-8") as f:
        try:
            raw_data = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"{config_path} is not valid YAML: {e}", field="<root>") from e

    expanded_data = expand_env_vars_recursive(raw_data)
    profiles = expanded_data.get("profiles")
    if not isinstance(profiles, dict):
        raise ConfigError(f"{config_path} has no 'profiles' mapping", field="profiles")

    if profile_name not in profiles:
        available = ", ".join(profiles.keys())
        raise KeyError(f"Profile '{profile_name}' not found. " f"Available profiles: {available}")

    return validate_config(profiles[profile_name] or {}, source=f"profile '{profile_name}' of {config_path}")


def load_config_from_env() -> SuiteConfig:
    """Defaults plus CLUSTER_LAMBDA_* overrides (used when no profile file exists)."""
    data: dict = {}
    if "CLUSTER_LAMBDA_WORKERS" in os.environ:
        data["workers"] = os.environ["CLUSTER_LAMBDA_WORKERS"]
    if "CLUSTER_LAMBDA_LAMBDA" in os.environ:
        data["lam"] = int(os.environ["CLUSTER_LAMBDA_LAMBDA"])
    if "CLUSTER_LAMBDA_SEED" in os.environ:
        data["random_seed"] = os.environ["CLUSTER_LAMBDA_SEED"]
    return validate_config(data, source="environment")


def load_config(
    profile: str | None = None,
    config_path: Path | None = None,
) -> SuiteConfig:
    """Load configuration from the profile file, or from the environment if it is missing.

    Args:
        profile: Profile name to load. If None, uses CLUSTER_LAMBDA_PROFILE
            or "default".
        config_path: Path to config file. If None, uses src/config/profiles.yaml.

    Returns:
        SuiteConfig of the profile

    Raises:
        ConfigError: If configuration is invalid
        KeyError: If requested profile doesn't exist
    """
    if profile is None:
        profile = os.environ.get("CLUSTER_LAMBDA_PROFILE", PROFILE)

    if config_path is None:
        config_path = Path(__file__).parent / "profiles.yaml"
    config_path = Path(config_path)

    if config_path.exists():
        config = load_config_from_yaml(config_path, profile)
        if "CLUSTER_LAMBDA_WORKERS" in os.environ:
            config = config.model_copy(update={"workers": int(os.environ["CLUSTER_LAMBDA_WORKERS"])})
        logger.info(f"Loaded profile '{profile}' from {config_path}")
        return config
    logger.warning(f"Config file {config_path} not found, using environment variables")
    return load_config_from_env()
