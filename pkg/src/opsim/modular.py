"""The Λ = +1 pentagon in the modular-double realisation.

By the compact ratio, F₁ splits into four compact quantum dilogarithms

    F₁(x, y) = ψ^a(A) ψ^b(W) / (ψ^a(Ā) ψ^b(W̄)),
    A = e^{x+iℏy}, Ā = e^{x−iℏy}, W = e^{y+ix/ℏ}, W̄ = e^{y−ix/ℏ},

with a = e^{−πℏ} and b = e^{−π/ℏ}. Under [x, y'] = πi = [y, x'] the pairs
(A, A'), (W, W'), (Ā', Ā) and (W̄', W̄) are q-Weyl pairs PR = q²RP for q = a
or b. The generators of different pairs commute, and the primed sums are
q^{∓1} times the products. Each pair acts here on its own truncated ℓ²
space, P = c·diag(q^{2m}) and R = c·shift, where PR = q²RP holds exactly.
F(x,y), F(x',y') and F(x+x',y+y') are tensor products over the four pairs,
so the pentagon is compared pair by pair.

In the Schrödinger realisation the cross relations between ψ^a(A) and the
imaginary shifts e^{y'} need a continuation across the pole lattice of ψ.
There the grid deviation does not close as N grows (see verify_pentagon_2d).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, UsageError
from ..gencomplex import Lambda
from ..qdilog import psi_compact, ratio_bases
from ..settings import MODULAR_DIM
from .grid import clamp_hbar
from .models import PentagonResult

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeylPair:
    """Truncated q-Weyl pair PR = q²RP on ℂ^dim.

    Attributes:
        label: Which compact factor of F₁ the pair carries
        q: Compact base, 0 < q < 1
        numerator: True if ψ^q enters F₁ directly, False if inverted
        dim: Truncation dimension
    """

    label: str
    q: float
    numerator: bool
    dim: int

    @property
    def scale(self) -> float:
        # Puts the first pentagon terms at order one
        return 1.0 / self.q

    def p(self) -> np.ndarray:
        return self.scale * np.diag(self.q ** (2.0 * np.arange(self.dim)))

    def r(self) -> np.ndarray:
        return self.scale * np.eye(self.dim, k=-1)

    def psi_diagonal(self, matrix: np.ndarray) -> np.ndarray:
        return np.diag([psi_compact(self.q, value).value for value in np.diag(matrix)])

    def psi_nilpotent(self, matrix: np.ndarray) -> np.ndarray:
        """ψ^q of a strictly lower-triangular matrix as a finite sum."""
        result = np.eye(self.dim, dtype=complex)
        power = np.eye(self.dim, dtype=complex)
        c = 1.0
        for n in range(1, self.dim):
            c = self.q * c / (self.q ** (2 * n) - 1)
            power = power @ matrix
            if not power.any():
                break
            result = result + c * power
        return result

    def factors(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """This pair's share of F(x,y), F(x',y') and F(x+x',y+y')."""
        p, r = self.p(), self.r()
        psi_p = self.psi_diagonal(p)
        psi_r = self.psi_nilpotent(r)
        psi_sum = self.psi_nilpotent(self.q * r @ p)
        if self.numerator:
            return psi_p, psi_r, psi_sum
        # Ā and W̄ carry the unprimed operator in the shift slot
        return np.linalg.inv(psi_r), np.linalg.inv(psi_p), np.linalg.inv(psi_sum)

    def sides(self, drop_middle: bool = False) -> tuple[np.ndarray, np.ndarray]:
        first, second, middle = self.factors()
        lhs = first @ second
        rhs = second @ first if drop_middle else second @ middle @ first
        return lhs, rhs


def modular_pairs(hbar: float, dim: int = MODULAR_DIM) -> list[WeylPair]:
    """The four pairs behind F₁^ℏ, in the order A, W, Ā, W̄."""
    if dim < 2:
        raise UsageError(f"A Weyl pair needs dimension at least 2, got {dim}")
    a, b = ratio_bases(hbar)
    if a <= 0.0 or b <= 0.0:
        raise DomainError(f"ℏ={hbar} underflows a compact base")
    return [
        WeylPair("A", a, True, dim),
        WeylPair("W", b, True, dim),
        WeylPair("A-bar", a, False, dim),
        WeylPair("W-bar", b, False, dim),
    ]


def basket_modular(dim: int) -> np.ndarray:
    """Test vectors as columns: e_0, e_1, e_2 and the flat vector.

    e_0 is where ψ(P) differs most from the identity.
    """
    basket = np.eye(dim, min(3, dim), dtype=complex)
    flat = np.ones((dim, 1), dtype=complex) / np.sqrt(dim)
    return np.hstack([basket, flat])


def f1_compact_factors(hbar: float, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """F₁^ℏ(x, y) assembled from the four compact factors, pointwise."""
    a, b = ratio_bases(hbar)
    x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    out = np.empty(x.shape, dtype=complex)
    for index in np.ndindex(x.shape):
        xi, yi = x[index], y[index]
        top = psi_compact(a, np.exp(xi + 1j * hbar * yi)).value * psi_compact(b, np.exp(yi + 1j * xi / hbar)).value
        bottom = psi_compact(a, np.exp(xi - 1j * hbar * yi)).value * psi_compact(b, np.exp(yi - 1j * xi / hbar)).value
        out[index] = top / bottom
    return out


def verify_pentagon_lambda_plus1(
    hbar: float = 1.0,
    dim: int = MODULAR_DIM,
    drop_middle: bool = False,
    tolerance: float = 1e-10,
) -> PentagonResult:
    """F₁ pentagon with F₁(x,y) = Φ^{iℏ}(x+iℏy)Φ^{−iℏ}(x−iℏy), one deviation per Weyl pair.

    Args:
        hbar: Planck parameter, clamped like the grid checks
        dim: Truncation dimension of each pair
        drop_middle: Omit F(x+x', y+y') on the right, a control that must fail
        tolerance: Pass threshold on the worst relative deviation over basket_modular()
    """
    hbar = clamp_hbar(hbar)
    basket = basket_modular(dim)
    deviations = []
    for pair in modular_pairs(hbar, dim):
        lhs, rhs = pair.sides(drop_middle)
        images = lhs @ basket
        misses = np.linalg.norm((lhs - rhs) @ basket, axis=0) / np.linalg.norm(images, axis=0)
        deviation = float(np.max(misses))
        logger.debug(f"Pair {pair.label} (q={pair.q:.3g}): deviation {deviation:.2e}")
        deviations.append(deviation)
    result = PentagonResult(
        "pentagon[1]" + ("[control]" if drop_middle else ""),
        Lambda.POSITIVE,
        hbar,
        dim,
        0.0,
        deviations,
        [0.0] * len(deviations),
        tolerance,
    )
    logger.info(f"Λ=+1 modular pentagon at ℏ={hbar}, dim={dim}: deviation {result.deviation:.2e}")
    return result
