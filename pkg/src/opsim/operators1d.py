"""Functions of x, y and x + y on L²(ℝ) sampled on a periodic grid.

x acts as multiplication by t and y = −2πiℏ d/dt, so [x, y] = 2πiℏ. In
Fourier space y is multiplication by 2πℏk, e^{iβy} shifts ψ(t) to
ψ(t + 2πℏβ), and x + y = C^{-1} y C for the chirp C = e^{it²/(4πℏ)}.
"""

from __future__ import annotations

import cmath
import math
from collections.abc import Callable
from functools import lru_cache

import numpy as np

from ..errors import UsageError
from ..qdilog import phi_real_grid
from .grid import check_chirp, check_leakage, fourier_multiply, sample_packet
from .models import GaussianPacket, GridState


def _require_1d(state: GridState) -> float:
    if state.dim != 1:
        raise UsageError(f"Expected a 1D grid, got dimension {state.dim}")
    if state.hbar is None or state.hbar <= 0:
        raise UsageError("The grid state carries no positive ℏ")
    return state.hbar


def _resolve(state: GridState, hbar: float | None) -> float:
    own = _require_1d(state)
    if hbar is not None and hbar != own:
        raise UsageError(f"ℏ={hbar} does not match the grid state's ℏ={own}")
    return own


@lru_cache(maxsize=8)
def _phi_tables(points: int, extent: float, hbar: float) -> tuple[np.ndarray, np.ndarray]:
    blank = GridState(1, extent, points, np.zeros(points), hbar)
    position = phi_real_grid(hbar, blank.axis)
    momentum = phi_real_grid(hbar, 2 * math.pi * hbar * blank.frequencies)
    return position, momentum


def _power(values: np.ndarray, sign: int) -> np.ndarray:
    if sign not in (1, -1):
        raise ValueError(f"sign must be ±1, got {sign}")
    return values if sign == 1 else 1 / values


def momentum_values(state: GridState) -> np.ndarray:
    """Eigenvalues 2πℏk of y on each FFT bin."""
    return 2 * math.pi * _require_1d(state) * state.frequencies


def chirp(state: GridState) -> np.ndarray:
    return np.exp(1j * state.axis**2 / (4 * math.pi * _require_1d(state)))


def apply_phi_of_position(state: GridState, hbar: float | None = None, sign: int = 1) -> GridState:
    """Multiply by Φ^{±ℏ}(t)."""
    hbar = _resolve(state, hbar)
    position, _ = _phi_tables(state.points, state.extent, hbar)
    return state.with_samples(state.samples * _power(position, sign))


def apply_phi_of_momentum(
    state: GridState, hbar: float | None = None, sign: int = 1, record: list[str] | None = None
) -> GridState:
    """Φ^{±ℏ}(y) as a Fourier multiplier."""
    hbar = _resolve(state, hbar)
    _, momentum = _phi_tables(state.points, state.extent, hbar)
    result = state.with_samples(fourier_multiply(state.samples, _power(momentum, sign)))
    check_leakage(result, record if record is not None else [], "Φ(y)")
    return result


def apply_function_of_sum(
    state: GridState, func: Callable[[np.ndarray], np.ndarray], record: list[str] | None = None
) -> GridState:
    """f(x + y) by chirp, Fourier multiplier f(2πℏk), inverse chirp."""
    record = record if record is not None else []
    check_chirp(state.points, state.extent, _require_1d(state), record)
    c = chirp(state)
    samples = fourier_multiply(state.samples * c, func(momentum_values(state))) / c
    result = state.with_samples(samples)
    check_leakage(result, record, "f(x+y)")
    return result


def apply_phi_of_sum(
    state: GridState, hbar: float | None = None, sign: int = 1, record: list[str] | None = None
) -> GridState:
    """Φ^{±ℏ}(x + y)."""
    hbar = _resolve(state, hbar)
    _, momentum = _phi_tables(state.points, state.extent, hbar)
    values = _power(momentum, sign)
    return apply_function_of_sum(state, lambda _: values, record)


def apply_exp_position(state: GridState, alpha: float) -> GridState:
    """e^{iαx}."""
    return state.with_samples(state.samples * np.exp(1j * alpha * state.axis))


def apply_exp_momentum(state: GridState, beta: float) -> GridState:
    """e^{iβy}, a shift by 2πℏβ."""
    return state.with_samples(fourier_multiply(state.samples, np.exp(1j * beta * momentum_values(state))))


def weyl_residual(
    hbar: float, alpha: float, beta: float, points: int = 4096, extent: float = 40.0
) -> float:
    """Relative error of e^{iαx}e^{iβy} = e^{−2πiℏαβ}e^{iβy}e^{iαx} on a Gaussian."""
    state = sample_packet(GaussianPacket.gaussian((0.0,), (1.0,)), points, extent, hbar)
    lhs = apply_exp_position(apply_exp_momentum(state, beta), alpha).samples
    rhs = apply_exp_momentum(apply_exp_position(state, alpha), beta).samples
    rhs = cmath.exp(-2j * math.pi * hbar * alpha * beta) * rhs
    return float(np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs))


def sum_exponential_residual(
    hbar: float, beta: float, points: int = 4096, extent: float = 40.0
) -> float:
    """e^{iβ(x+y)} through the chirp against e^{iπℏβ²}e^{iβt}ψ(t + 2πℏβ) in closed form."""
    packet = GaussianPacket.gaussian((0.0,), (1.0,))
    state = sample_packet(packet, points, extent, hbar)
    chirped = apply_function_of_sum(state, lambda v: np.exp(1j * beta * v)).samples
    t = state.axis
    shift = 2 * math.pi * hbar * beta
    exact = cmath.exp(1j * math.pi * hbar * beta**2) * np.exp(1j * beta * t) * packet(t + shift)
    return float(np.linalg.norm(chirped - exact) / np.linalg.norm(exact))
