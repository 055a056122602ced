"""Data models for exchange matrices, seeds, moves and ideal triangulations."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from ..errors import TriangulationError, UsageError


@dataclass(frozen=True)
class ExMat:
    """A skew-symmetric integer exchange matrix ε."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"Exchange matrix must be square; row {i} has length {len(row)}")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise ValueError(
                        f"Exchange matrix is not skew-symmetric at ({i}, {j}): "
                        f"{rows[i][j]} vs {rows[j][i]}"
                    )

    @classmethod
    def from_array(cls, matrix) -> ExMat:
        return cls(tuple(tuple(int(v) for v in row) for row in np.asarray(matrix)))

    @classmethod
    def zeros(cls, n: int) -> ExMat:
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64).reshape(self.n, self.n)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


class MoveKind(Enum):
    """Kind of elementary seed move."""

    MUTATION = "m"
    PERMUTATION = "p"


@dataclass(frozen=True)
class Move:
    """A mutation μ_k or a seed automorphism P_σ (0-based indices)."""

    kind: MoveKind
    index: int | None = None
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind is MoveKind.MUTATION and self.index is None:
            raise ValueError("A mutation move needs an index")
        if self.kind is MoveKind.PERMUTATION:
            if self.perm is None:
                raise ValueError("A permutation move needs a permutation")
            object.__setattr__(self, "perm", tuple(int(v) for v in self.perm))

    @classmethod
    def mutation(cls, k: int) -> Move:
        return cls(MoveKind.MUTATION, index=int(k))

    @classmethod
    def permutation(cls, sigma) -> Move:
        return cls(MoveKind.PERMUTATION, perm=tuple(sigma))

    def __str__(self) -> str:
        if self.kind is MoveKind.MUTATION:
            return f"m{self.index + 1}"
        return "p" + permutation_cycles(self.perm)


def check_permutation(sigma, n: int) -> tuple[int, ...]:
    """Validate that sigma (as an image tuple) is a bijection of range(n).

    Raises:
        UsageError: If sigma is not a bijection on the indices
    """
    sigma = tuple(int(v) for v in sigma)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise UsageError(f"{sigma} is not a bijection on {n} indices")
    return sigma


def invert_permutation(sigma) -> tuple[int, ...]:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma):
        inverse[image] = i
    return tuple(inverse)


def compose_permutations(second, first) -> tuple[int, ...]:
    """Return second ∘ first, i.e. i ↦ second[first[i]]."""
    return tuple(second[image] for image in first)


def permutation_cycles(sigma) -> str:
    """Cycle notation with 1-based indices, e.g. "(1 2)(3 4)" or "()"."""
    seen: set[int] = set()
    cycles = []
    for start in range(len(sigma)):
        if start in seen or sigma[start] == start:
            continue
        cycle = []
        i = start
        while i not in seen:
            seen.add(i)
            cycle.append(str(i + 1))
            i = sigma[i]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


@dataclass(frozen=True)
class Seed:
    """A cluster X-seed: exchange matrix, index labels and the moves that produced it."""

    exmat: ExMat
    labels: tuple[str, ...] = ()
    initial: ExMat | None = field(default=None, compare=False)
    history: tuple[Move, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"X{i + 1}" for i in range(self.exmat.n)))
        object.__setattr__(self, "labels", tuple(str(label) for label in self.labels))
        object.__setattr__(self, "history", tuple(self.history))
        if len(self.labels) != self.exmat.n:
            raise ValueError(f"Expected {self.exmat.n} labels, got {len(self.labels)}")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError(f"Seed labels must be distinct: {self.labels}")
        if self.initial is None:
            object.__setattr__(self, "initial", self.exmat)
        elif self.history:
            from .exmat import apply_moves_exmat

            if apply_moves_exmat(self.initial, self.history) != self.exmat:
                raise ValueError("Seed history does not replay to its exchange matrix")

    @property
    def rank(self) -> int:
        return self.exmat.n

    @property
    def generators(self) -> tuple[str, ...]:
        """Generator names Z1, ..., Zn used by the symbolic engines."""
        return tuple(f"Z{i + 1}" for i in range(self.rank))


@dataclass(frozen=True)
class Tri:
    """An ideal triangulation encoded by corner-labelled triangles.

    Each triangle lists its sides (s0, s1, s2) counter-clockwise; corner c
    sits between sides s_c and s_{c+1} at puncture ``corners[t][c]``.
    """

    arcs: tuple[int, ...]
    triangles: tuple[tuple[int, int, int], ...]
    corners: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple(int(a) for a in self.arcs))
        object.__setattr__(self, "triangles", tuple(tuple(int(s) for s in t) for t in self.triangles))
        object.__setattr__(self, "corners", tuple(tuple(str(p) for p in c) for c in self.corners))
        from .triangulation import validate_tri

        validate_tri(self)

    @property
    def punctures(self) -> tuple[str, ...]:
        return tuple(sorted({p for corner in self.corners for p in corner}))

    @property
    def incidence(self) -> dict[str, list[tuple[int, int]]]:
        """Map each puncture to the (triangle, corner) pairs sitting at it."""
        table: dict[str, list[tuple[int, int]]] = {p: [] for p in self.punctures}
        for t, corner in enumerate(self.corners):
            for c, p in enumerate(corner):
                table[p].append((t, c))
        return table

    def occurrences(self, arc: int) -> list[tuple[int, int]]:
        """All (triangle, side) positions where an arc appears."""
        return [
            (t, s)
            for t, sides in enumerate(self.triangles)
            for s, side in enumerate(sides)
            if side == arc
        ]

    @property
    def closed(self) -> bool:
        return all(len(self.occurrences(a)) == 2 for a in self.arcs)

    def arc_index(self, arc: int) -> int:
        try:
            return self.arcs.index(arc)
        except ValueError:
            raise TriangulationError(f"Arc {arc} is not part of the triangulation") from None


@dataclass(frozen=True)
class ThetaVec:
    """An integer vector θ, either a puncture valence or a generic kernel vector."""

    coefficients: tuple[int, ...]
    tag: str = "generic kernel vector"

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(v) for v in self.coefficients))

    def in_kernel(self, exmat: ExMat) -> bool:
        return not np.any(exmat.array @ np.array(self.coefficients, dtype=np.int64))
