"""Operator pentagon identities checked on packet baskets.

Λ = −1 uses the 1D realisation with [x, y] = 2πiℏ:
Φ(x)Φ(y) = Φ(y)Φ(x+y)Φ(x).

The F_Λ pentagon F(x,y)F(x',y') = F(x',y')F(x+x',y+y')F(x,y) runs on a 2D
grid with x = −t, y = πi∂_s, x' = s, y' = πi∂_t. F(x,y) is a multiplier in
the (t, σ) mixed representation, F(x',y') one in (τ, s), and
F(x+x', y+y') = V F(x,y) V^{-1} for the shear (Vη)(t,s) = η(t − s, s).

For Λ = +1 this realisation leaves a deviation that does not shrink with N;
the Λ = +1 pentagon is checked in the modular-double realisation instead.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

import numpy as np

from ..errors import UsageError
from ..gencomplex import Lambda
from ..qdilog import f0, phi_ih_log_grid, phi_real_grid
from ..settings import GRID_1D_EXTENT, GRID_1D_POINTS, GRID_2D_EXTENT, GRID_2D_POINTS
from .grid import aligned_deviation, check_leakage, clamp_hbar, fourier_multiply, sample_packet
from .models import GaussianPacket, GridState, PentagonResult
from .operators1d import apply_phi_of_momentum, apply_phi_of_position, apply_phi_of_sum

logger = logging.getLogger(__name__)

Multiplier = Callable[[np.ndarray, np.ndarray], np.ndarray]


def basket_1d() -> list[GaussianPacket]:
    """Gaussians and low Hermite-type packets on the line."""
    return [
        GaussianPacket.gaussian((0.0,), (1.0,)),
        GaussianPacket.gaussian((-1.0,), (1.3,), (0.4,)),
        GaussianPacket.gaussian((0.5,), (0.9,), poly=(0.0, 1.0)),
        GaussianPacket.gaussian((0.0,), (1.1,), poly=(-1.0, 0.0, 2.0)),
    ]


def basket_2d() -> list[GaussianPacket]:
    """Packets on the (t, s) plane, placed where every pentagon factor acts non-trivially."""
    return [
        GaussianPacket.gaussian((1.0, 0.0), (0.6, 0.6)),
        GaussianPacket.gaussian((1.2, -0.5), (0.7, 0.5), (0.3, -0.2)),
        GaussianPacket.gaussian((0.8, 0.2), (0.6, 0.7), poly=((0.0, 0.0), (1.0, 0.0))),
    ]


def _default_tolerance_1d(hbar: float) -> float:
    return 1e-4 if hbar >= 1.0 else 1e-3


def verify_pentagon_lambda_minus1(
    hbar: float = 1.0,
    points: int = GRID_1D_POINTS,
    extent: float = GRID_1D_EXTENT,
    packets: list[GaussianPacket] | None = None,
    drop_middle: bool = False,
    tolerance: float | None = None,
) -> PentagonResult:
    """Φ^ℏ(x)Φ^ℏ(y) against Φ^ℏ(y)Φ^ℏ(x+y)Φ^ℏ(x) on each packet.

    Args:
        hbar: Planck parameter, clamped to the resolvable range
        points: Grid points
        extent: Box length
        packets: Test packets (default basket_1d())
        drop_middle: Omit Φ(x+y) on the right, a control that must fail
        tolerance: Pass threshold (default 1e−4 for ℏ ≥ 1, else 1e−3)
    """
    hbar = clamp_hbar(hbar)
    packets = packets or basket_1d()
    record: list[str] = []
    deviations, phases = [], []
    for packet in packets:
        state = sample_packet(packet, points, extent, hbar, Lambda.NEGATIVE)
        lhs = apply_phi_of_position(apply_phi_of_momentum(state, record=record))
        rhs = apply_phi_of_position(state)
        if not drop_middle:
            rhs = apply_phi_of_sum(rhs, record=record)
        rhs = apply_phi_of_momentum(rhs, record=record)
        deviation, phase = aligned_deviation(lhs.samples, rhs.samples)
        deviations.append(deviation)
        phases.append(phase)
    result = PentagonResult(
        "pentagon[-1]" + ("[control]" if drop_middle else ""),
        Lambda.NEGATIVE,
        hbar,
        points,
        extent,
        deviations,
        phases,
        tolerance if tolerance is not None else _default_tolerance_1d(hbar),
        record,
    )
    logger.info(f"Λ=−1 pentagon at ℏ={hbar}, N={points}: deviation {result.deviation:.2e}")
    return result


def f_lambda_multiplier(lam: Lambda | int, hbar: float) -> Multiplier:
    """F_Λ^ℏ(x, y) on arrays of real x, y."""
    lam = Lambda.parse(lam)
    if lam is Lambda.ZERO:
        return lambda x, y: f0(x, y)
    if lam is Lambda.POSITIVE:

        def positive(x, y):
            # Φ^{−iℏ}(x − iℏy) = 1 / conj Φ^{iℏ}(x + iℏy), so F₁ = exp(2i Im log Φ^{iℏ})
            log_phi = phi_ih_log_grid(hbar, np.asarray(x) + 1j * hbar * np.asarray(y))
            return np.exp(2j * log_phi.imag)

        return positive

    def negative(x, y):
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        return phi_real_grid(hbar, x + hbar * y) / phi_real_grid(hbar, x - hbar * y)

    return negative


class PentagonEngine2D:
    """Applies F(x,y), F(x',y') and F(x+x',y+y') on a fixed 2D grid."""

    def __init__(self, multiplier: Multiplier, points: int, extent: float):
        blank = GridState(2, extent, points, np.zeros((points, points)))
        axis = blank.axis
        freq = blank.frequencies
        self.points = points
        self.extent = extent
        # axis 0 is t, axis 1 is s; y = πi∂_s becomes −πσ, y' = πi∂_t becomes −πτ
        self._xy = multiplier(-axis[:, None], -math.pi * freq[None, :])
        self._xpyp = multiplier(axis[None, :], -math.pi * freq[:, None])
        self._shear = np.exp(-1j * freq[:, None] * axis[None, :])

    def apply_xy(self, samples: np.ndarray) -> np.ndarray:
        return fourier_multiply(samples, self._xy, axis=1)

    def apply_xpyp(self, samples: np.ndarray) -> np.ndarray:
        return fourier_multiply(samples, self._xpyp, axis=0)

    def apply_sum(self, samples: np.ndarray) -> np.ndarray:
        unsheared = fourier_multiply(samples, self._shear.conj(), axis=0)
        return fourier_multiply(self.apply_xy(unsheared), self._shear, axis=0)

    def sides(self, samples: np.ndarray, drop_middle: bool = False) -> tuple[np.ndarray, np.ndarray]:
        lhs = self.apply_xy(self.apply_xpyp(samples))
        rhs = self.apply_xy(samples)
        if not drop_middle:
            rhs = self.apply_sum(rhs)
        rhs = self.apply_xpyp(rhs)
        return lhs, rhs


def verify_pentagon_2d(
    lam: Lambda | int,
    hbar: float = 1.0,
    points: int = GRID_2D_POINTS,
    extent: float = GRID_2D_EXTENT,
    packets: list[GaussianPacket] | None = None,
    drop_middle: bool = False,
    tolerance: float = 1e-3,
) -> PentagonResult:
    """The F_Λ pentagon on a 2D grid for any Λ."""
    lam = Lambda.parse(lam)
    hbar = clamp_hbar(hbar)
    engine = PentagonEngine2D(f_lambda_multiplier(lam, hbar), points, extent)
    packets = packets or basket_2d()
    record: list[str] = []
    deviations, phases = [], []
    for packet in packets:
        if packet.dim != 2:
            raise UsageError("The 2D pentagon engine needs 2D packets")
        state = sample_packet(packet, points, extent, hbar, lam)
        lhs, rhs = engine.sides(state.samples, drop_middle)
        for label, side in (("lhs", lhs), ("rhs", rhs)):
            check_leakage(state.with_samples(side), record, f"pentagon[{lam.value}] {label}")
        deviation, phase = aligned_deviation(lhs, rhs)
        deviations.append(deviation)
        phases.append(phase)
    result = PentagonResult(
        f"pentagon[{lam.value}]" + ("[control]" if drop_middle else ""),
        lam,
        hbar if lam is not Lambda.ZERO else None,
        points,
        extent,
        deviations,
        phases,
        tolerance,
        record,
    )
    logger.info(f"Λ={lam.value} 2D pentagon, N={points}: deviation {result.deviation:.2e}")
    return result


def convergence_profile(lam: Lambda | int, hbar: float, sizes: list[int], extent: float = GRID_2D_EXTENT) -> list[float]:
    """Pentagon deviation for each grid size, for checking that it shrinks as N grows."""
    return [verify_pentagon_2d(lam, hbar, n, extent).deviation for n in sizes]
