"""JSON file formats for seeds and triangulations."""

from __future__ import annotations

import json
from pathlib import Path

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from ..errors import ConfigError
from .models import ExMat, Seed, Tri


class SeedFile(BaseModel):
    """{"rank": n, "epsilon": [[...]], "labels": [...]}"""

    model_config = ConfigDict(extra="forbid")

    rank: int
    epsilon: list[list[int]]
    labels: list[str] | None = None

    @model_validator(mode="after")
    def check_shape(self) -> SeedFile:
        if len(self.epsilon) != self.rank:
            raise ValueError(f"epsilon has {len(self.epsilon)} rows, expected rank {self.rank}")
        for i, row in enumerate(self.epsilon):
            if len(row) != self.rank:
                raise ValueError(f"epsilon row {i} has length {len(row)}, expected {self.rank}")
            for j, value in enumerate(row):
                if value != -self.epsilon[j][i]:
                    raise ValueError(f"epsilon is not skew-symmetric at ({i}, {j})")
        if self.labels is not None and len(self.labels) != self.rank:
            raise ValueError(f"labels has {len(self.labels)} entries, expected {self.rank}")
        return self

    def to_seed(self) -> Seed:
        return Seed(ExMat(tuple(tuple(row) for row in self.epsilon)), tuple(self.labels or ()))

    @classmethod
    def from_seed(cls, seed: Seed) -> SeedFile:
        return cls(rank=seed.rank, epsilon=seed.exmat.tolist(), labels=list(seed.labels))


class TriFile(BaseModel):
    """{"arcs": [...], "triangles": [[a, b, c], ...], "punctures": {name: [[t, c], ...]}}"""

    model_config = ConfigDict(extra="forbid")

    arcs: list[int]
    triangles: list[list[int]]
    punctures: dict[str, list[tuple[int, int]]]

    @field_validator("triangles")
    @classmethod
    def check_triangles(cls, value: list[list[int]]) -> list[list[int]]:
        for t, sides in enumerate(value):
            if len(sides) != 3:
                raise ValueError(f"triangle {t} has {len(sides)} sides")
        return value

    def to_tri(self) -> Tri:
        corners: list[list[str | None]] = [[None, None, None] for _ in self.triangles]
        for name, places in self.punctures.items():
            for t, c in places:
                if not (0 <= t < len(corners) and 0 <= c < 3):
                    raise ValueError(f"puncture {name} refers to missing corner ({t}, {c})")
                if corners[t][c] is not None:
                    raise ValueError(f"corner ({t}, {c}) is assigned twice")
                corners[t][c] = name
        for t, triple in enumerate(corners):
            if None in triple:
                raise ValueError(f"triangle {t} has a corner without a puncture")
        return Tri(
            tuple(self.arcs),
            tuple(tuple(s) for s in self.triangles),
            tuple(tuple(c) for c in corners),
        )

    @classmethod
    def from_tri(cls, tri: Tri) -> TriFile:
        return cls(
            arcs=list(tri.arcs),
            triangles=[list(t) for t in tri.triangles],
            punctures={p: [list(place) for place in places] for p, places in tri.incidence.items()},
        )


def _field_path(error: ValidationError) -> str:
    first = error.errors()[0]
    return ".".join(str(part) for part in first["loc"]) or "<root>"


def _read_json(path: Path) -> dict:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as e:
        raise ConfigError(f"Input file {path} not found", field="path") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"{path} is not valid JSON: {e}", field="<root>") from e


def parse_seed(data: dict, source: str = "<seed>") -> Seed:
    """Validate seed JSON data.

    Raises:
        ConfigError: Naming the first invalid field
    """
    try:
        return SeedFile.model_validate(data).to_seed()
    except ValidationError as e:
        field = _field_path(e)
        raise ConfigError(f"Invalid seed in {source}: field '{field}': {e.errors()[0]['msg']}", field=field) from e
    except ValueError as e:
        raise ConfigError(f"Invalid seed in {source}: {e}", field="epsilon") from e


def load_seed(path: Path | str) -> Seed:
    path = Path(path)
    return parse_seed(_read_json(path), source=str(path))


def save_seed(seed: Seed, path: Path | str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(SeedFile.from_seed(seed).model_dump_json(indent=2))
        f.write("\n")


def parse_tri(data: dict, source: str = "<triangulation>") -> Tri:
    """Validate triangulation JSON data.

    Raises:
        ConfigError: Naming the first invalid field or the combinatorial defect
    """
    try:
        return TriFile.model_validate(data).to_tri()
    except ValidationError as e:
        field = _field_path(e)
        raise ConfigError(f"Invalid triangulation in {source}: field '{field}': {e.errors()[0]['msg']}", field=field) from e
    except ValueError as e:
        raise ConfigError(f"Invalid triangulation in {source}: {e}", field="triangles") from e


def load_tri(path: Path | str) -> Tri:
    path = Path(path)
    return parse_tri(_read_json(path), source=str(path))


def save_tri(tri: Tri, path: Path | str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(TriFile.from_tri(tri).model_dump_json(indent=2))
        f.write("\n")
