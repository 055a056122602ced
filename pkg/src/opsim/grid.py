"""Grid construction, spectral helpers and the phase-aligned deviation."""

from __future__ import annotations

import cmath
import logging
import math
import warnings

import numpy as np

from ..errors import AccuracyWarning
from ..gencomplex import Lambda
from ..settings import HBAR_RANGE, LEAKAGE_THRESHOLD
from .models import GaussianPacket, GridState

logger = logging.getLogger(__name__)

BOUNDARY_FRACTION = 0.05


def clamp_hbar(hbar: float) -> float:
    """Clamp ℏ into the range where grid multipliers stay resolvable."""
    low, high = HBAR_RANGE
    clamped = min(max(hbar, low), high)
    if clamped != hbar:
        logger.warning(f"ℏ={hbar} outside [{low}, {high}], using {clamped}")
    return clamped


def sample_packet(
    packet: GaussianPacket,
    points: int,
    extent: float,
    hbar: float | None = None,
    lam: Lambda | None = None,
) -> GridState:
    """Sample a packet on the uniform grid; 2D grids index as [t, s]."""
    state = GridState(packet.dim, extent, points, np.zeros((points,) * packet.dim), hbar, lam)
    axis = state.axis
    if packet.dim == 1:
        return state.with_samples(packet(axis))
    t, s = np.meshgrid(axis, axis, indexing="ij")
    return state.with_samples(packet(t, s))


def boundary_leakage(state: GridState, fraction: float = BOUNDARY_FRACTION) -> float:
    """Share of |ψ|² in the outer band of every axis."""
    weight = np.abs(state.samples) ** 2
    total = float(np.sum(weight))
    if total == 0:
        return 0.0
    band = max(1, int(fraction * state.points))
    mask = np.zeros(weight.shape, dtype=bool)
    for axis in range(state.dim):
        index = [slice(None)] * state.dim
        index[axis] = np.r_[0:band, state.points - band : state.points]
        mask[tuple(index)] = True
    return float(np.sum(weight[mask]) / total)


def check_leakage(state: GridState, record: list[str], label: str) -> None:
    """Warn with AccuracyWarning and note it in record when mass reaches the boundary."""
    leakage = boundary_leakage(state)
    if leakage > LEAKAGE_THRESHOLD:
        message = f"{label}: boundary leakage {leakage:.1e} exceeds {LEAKAGE_THRESHOLD:g}"
        warnings.warn(message, AccuracyWarning, stacklevel=2)
        record.append(message)


def check_chirp(points: int, extent: float, hbar: float, record: list[str]) -> None:
    """The chirp e^{it²/(4πℏ)} reaches frequency L/(4πℏ) at the box edge; it must stay below Nyquist."""
    needed = math.ceil(2 * extent**2 / (4 * math.pi**2 * hbar))
    if points < needed:
        message = f"chirp aliasing at N={points}, L={extent}, ℏ={hbar}; use N ≥ {needed}"
        warnings.warn(message, AccuracyWarning, stacklevel=2)
        record.append(message)


def aligned_deviation(lhs: np.ndarray, rhs: np.ndarray) -> tuple[float, float]:
    """min over φ of ‖lhs − e^{iφ}rhs‖ / ‖lhs‖, and the minimising φ."""
    inner = complex(np.vdot(rhs, lhs))
    phase = cmath.phase(inner) if inner != 0 else 0.0
    norm = float(np.linalg.norm(lhs))
    if norm == 0:
        return float(np.linalg.norm(rhs)), phase
    residual = lhs - cmath.exp(1j * phase) * rhs
    return float(np.linalg.norm(residual) / norm), phase


def fourier_multiply(samples: np.ndarray, multiplier: np.ndarray, axis: int = 0) -> np.ndarray:
    """ifft(multiplier · fft(samples)) along one axis; multiplier broadcasts against the spectrum."""
    spectrum = np.fft.fft(samples, axis=axis)
    return np.fft.ifft(multiplier * spectrum, axis=axis)


def relative_norm_drift(before: GridState, after: GridState) -> float:
    return abs(after.norm - before.norm) / before.norm
