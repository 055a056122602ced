"""Types for operator-level checks: Heisenberg symbols, linear maps, grids, packets, results."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
import sympy
from numpy.polynomial import polynomial as P

from ..errors import DomainError, UsageError
from ..gencomplex import Lambda

HBAR = sympy.Symbol("hbar", positive=True)


def _exact(value) -> sympy.Expr:
    return sympy.nsimplify(value) if isinstance(value, float) else sympy.sympify(value)


@dataclass(frozen=True)
class HSymbol:
    """A linear Heisenberg symbol Σ a_i t_i + Σ b_i D_i + c with D_i = i∂/∂t_i.

    Coefficients are exact sympy expressions, so π, i and ℏ stay symbolic.
    """

    a: tuple
    b: tuple
    c: sympy.Expr = sympy.Integer(0)

    def __post_init__(self):
        a = tuple(_exact(v) for v in self.a)
        b = tuple(_exact(v) for v in self.b)
        if len(a) != len(b):
            raise ValueError(f"Position and momentum parts differ in rank: {len(a)} vs {len(b)}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", _exact(self.c))

    @classmethod
    def zero(cls, n: int) -> HSymbol:
        return cls((0,) * n, (0,) * n)

    @classmethod
    def position(cls, n: int, i: int) -> HSymbol:
        """t_i."""
        return cls(tuple(int(j == i) for j in range(n)), (0,) * n)

    @classmethod
    def momentum(cls, n: int, i: int) -> HSymbol:
        """D_i = i∂/∂t_i."""
        return cls((0,) * n, tuple(int(j == i) for j in range(n)))

    @property
    def rank(self) -> int:
        return len(self.a)

    def _check(self, other: HSymbol) -> None:
        if self.rank != other.rank:
            raise UsageError(f"Symbols of rank {self.rank} and {other.rank} cannot be combined")

    def __add__(self, other: HSymbol) -> HSymbol:
        self._check(other)
        return HSymbol(
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.b, other.b)),
            self.c + other.c,
        )

    def __neg__(self) -> HSymbol:
        return HSymbol(tuple(-x for x in self.a), tuple(-x for x in self.b), -self.c)

    def __sub__(self, other: HSymbol) -> HSymbol:
        return self + (-other)

    def scale(self, factor) -> HSymbol:
        factor = _exact(factor)
        return HSymbol(
            tuple(factor * x for x in self.a), tuple(factor * x for x in self.b), factor * self.c
        )

    def __rmul__(self, factor) -> HSymbol:
        return self.scale(factor)

    def simplify(self) -> HSymbol:
        return HSymbol(
            tuple(sympy.simplify(x) for x in self.a),
            tuple(sympy.simplify(x) for x in self.b),
            sympy.simplify(self.c),
        )

    def equals(self, other: HSymbol) -> bool:
        """Exact equality after simplification."""
        self._check(other)
        difference = (self - other).simplify()
        return all(x == 0 for x in difference.a + difference.b + (difference.c,))

    def __str__(self) -> str:
        parts = [f"({x})*t{i + 1}" for i, x in enumerate(self.a) if x != 0]
        parts += [f"({x})*D{i + 1}" for i, x in enumerate(self.b) if x != 0]
        if self.c != 0:
            parts.append(str(self.c))
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class ZBlockOp:
    """The doubled operator Id ⊗ X + ℓ̂ ⊗ Y on C² ⊗ L².

    For z_i^{(ε)}, X = x_i and Y = ε·ℏ·y_i, giving the block pattern
    [[x, εℏy], [−εΛℏy, x]].
    """

    identity_part: HSymbol
    ell_part: HSymbol
    lam: Lambda

    def __post_init__(self):
        object.__setattr__(self, "lam", Lambda.parse(self.lam))
        self.identity_part._check(self.ell_part)

    def blocks(self) -> tuple[tuple[HSymbol, HSymbol], tuple[HSymbol, HSymbol]]:
        lower = self.ell_part.scale(-self.lam.value)
        return ((self.identity_part, self.ell_part), (lower, self.identity_part))


@dataclass(frozen=True)
class LinearMap:
    """An invertible integer substitution: the pullback sends t'_i to Σ_j M_ij t_j."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", rows)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("Linear maps must be square")
        if self.sympy_matrix.det() == 0:
            raise DomainError(f"Linear map is not invertible: {rows}")

    @property
    def n(self) -> int:
        return len(self.matrix)

    @property
    def sympy_matrix(self) -> sympy.Matrix:
        return sympy.Matrix(self.matrix)

    @property
    def determinant(self) -> int:
        return int(self.sympy_matrix.det())

    def inverse(self) -> sympy.Matrix:
        return self.sympy_matrix.inv()

    def then(self, other: LinearMap) -> LinearMap:
        """Pullback along self followed by other: (χ_other ∘ χ_self)* = χ_self* ∘ χ_other*."""
        if other.n != self.n:
            raise UsageError(f"Cannot compose maps of rank {self.n} and {other.n}")
        return LinearMap(tuple(map(tuple, (other.sympy_matrix * self.sympy_matrix).tolist())))

    def is_identity(self) -> bool:
        return self.sympy_matrix == sympy.eye(self.n)


@dataclass(frozen=True)
class GaussianPacket:
    """poly(u)·exp(−½ uᵀAu + i kᵀu) with u = v − center and Re A positive definite.

    Members of this class continue analytically in every variable, so
    imaginary shifts are evaluated in closed form.

    Attributes:
        center: Real center, one entry per dimension
        quad: Complex symmetric matrix A
        momentum: Real wave vector k
        poly: Coefficient array for numpy.polynomial (1 or 2 axes)
    """

    center: tuple[float, ...]
    quad: tuple[tuple[complex, ...], ...]
    momentum: tuple[float, ...]
    poly: tuple = (1.0,)

    def __post_init__(self):
        d = len(self.center)
        if d not in (1, 2):
            raise ValueError(f"Packets are 1D or 2D, got dimension {d}")
        quad = np.asarray(self.quad, dtype=complex).reshape(d, d)
        if not np.allclose(quad, quad.T):
            raise DomainError("Packet quadratic form must be symmetric")
        if np.min(np.linalg.eigvalsh(quad.real)) <= 0:
            raise DomainError(
                "Packet quadratic form needs a positive-definite real part; "
                "only Gaussians times polynomials continue analytically"
            )
        if np.asarray(self.poly, dtype=complex).ndim != d:
            raise ValueError(f"Packet polynomial needs {d} coefficient axes")

    @classmethod
    def gaussian(
        cls,
        center: tuple[float, ...],
        width: tuple[float, ...],
        momentum: tuple[float, ...] | None = None,
        poly=None,
    ) -> GaussianPacket:
        d = len(center)
        quad = tuple(tuple((1 / width[i] ** 2 if i == j else 0.0) for j in range(d)) for i in range(d))
        poly = (1.0,) if poly is None else poly
        if d == 2 and np.asarray(poly).ndim == 1:
            poly = tuple((c,) for c in poly)
        return cls(tuple(center), quad, tuple(momentum or (0.0,) * d), poly)

    @property
    def dim(self) -> int:
        return len(self.center)

    @property
    def _quad(self) -> np.ndarray:
        return np.asarray(self.quad, dtype=complex).reshape(self.dim, self.dim)

    @property
    def _poly(self) -> np.ndarray:
        return np.asarray(self.poly, dtype=complex)

    def _offsets(self, coords) -> list[np.ndarray]:
        return [np.asarray(v, dtype=complex) - c for v, c in zip(coords, self.center)]

    def _exponent(self, u: list[np.ndarray]) -> np.ndarray:
        A = self._quad
        value = 0
        for i in range(self.dim):
            value = value + 1j * self.momentum[i] * u[i]
            for j in range(self.dim):
                value = value - 0.5 * A[i, j] * u[i] * u[j]
        return value

    def _polyval(self, coeffs: np.ndarray, u: list[np.ndarray]) -> np.ndarray:
        if self.dim == 1:
            return P.polyval(u[0], coeffs)
        return P.polyval2d(u[0], u[1], coeffs)

    def __call__(self, *coords) -> np.ndarray:
        u = self._offsets(coords)
        return self._polyval(self._poly, u) * np.exp(self._exponent(u))

    def derivative(self, axis: int, *coords) -> np.ndarray:
        """∂/∂v_axis in closed form."""
        u = self._offsets(coords)
        A = self._quad
        slope = 1j * self.momentum[axis] - sum(A[axis, j] * u[j] for j in range(self.dim))
        poly = self._poly
        dpoly = P.polyder(poly, axis=axis) if poly.shape[axis] > 1 else np.zeros_like(poly)
        return (self._polyval(dpoly, u) + self._polyval(poly, u) * slope) * np.exp(self._exponent(u))


@dataclass(frozen=True)
class GridState:
    """Samples of a state on a uniform periodic grid over [−L/2, L/2)^d.

    Attributes:
        dim: 1 or 2
        extent: Box length L
        points: Points per axis N
        samples: Complex array of shape (N,) or (N, N); axis 0 is t, axis 1 is s
        hbar: Planck parameter carried for reports
        lam: Λ tag carried for reports
    """

    dim: int
    extent: float
    points: int
    samples: np.ndarray = field(repr=False)
    hbar: float | None = None
    lam: Lambda | None = None

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"Grids are 1D or 2D, got {self.dim}")
        if self.points < 2 or self.extent <= 0:
            raise ValueError(f"Invalid grid: N={self.points}, L={self.extent}")
        samples = np.asarray(self.samples, dtype=complex)
        if samples.shape != (self.points,) * self.dim:
            raise ValueError(f"Samples of shape {samples.shape} do not match N={self.points}, d={self.dim}")
        if not np.all(np.isfinite(samples)):
            raise ValueError("Grid samples must be finite")
        object.__setattr__(self, "samples", samples)

    @property
    def spacing(self) -> float:
        return self.extent / self.points

    @property
    def axis(self) -> np.ndarray:
        return -0.5 * self.extent + self.spacing * np.arange(self.points)

    @property
    def frequencies(self) -> np.ndarray:
        """Angular wave numbers k with e^{ikt} for each FFT bin."""
        return 2 * math.pi * np.fft.fftfreq(self.points, self.spacing)

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.samples) ** 2) * self.spacing**self.dim))

    def with_samples(self, samples: np.ndarray) -> GridState:
        return replace(self, samples=samples)


@dataclass
class PentagonResult:
    """Phase-aligned deviations between the two sides of an operator identity.

    Attributes:
        name: Identity checked
        lam: Λ of the realisation
        hbar: Planck parameter (None where the identity does not involve it)
        points: Grid points per axis
        extent: Grid box length
        deviations: Relative L² deviation per packet after phase alignment
        phases: Optimal global phase per packet
        tolerance: Pass threshold on the largest deviation
        warnings: Accuracy warnings raised while computing
    """

    name: str
    lam: Lambda
    hbar: float | None
    points: int
    extent: float
    deviations: list[float]
    phases: list[float]
    tolerance: float
    warnings: list[str] = field(default_factory=list)

    @property
    def deviation(self) -> float:
        return max(self.deviations, default=0.0)

    @property
    def passed(self) -> bool:
        return self.deviation <= self.tolerance
