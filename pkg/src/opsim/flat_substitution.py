"""The Λ = 0 pentagon as substitution maps, and the F₀ conjugation identities.

With x = −t, y = πi∂_s, x' = s, y' = πi∂_t each F₀ factor acts by pulling
back along a map of the exponentiated coordinates T = e^t, S = e^s:

    F₀(x, y):           (T, S) ↦ (T, S + S/T)
    F₀(x', y'):         (T, S) ↦ (T + TS, S)
    F₀(x+x', y+y'):     (T, S) ↦ (T + S, S·T^{-1}(T + S))
"""

from __future__ import annotations

import logging
import math

import numpy as np
import sympy
from scipy.interpolate import RectBivariateSpline

from ..gencomplex import Lambda
from ..qdilog import Residual, f0
from ..settings import GRID_2D_EXTENT, GRID_2D_POINTS
from .grid import aligned_deviation, fourier_multiply, sample_packet
from .models import GaussianPacket, GridState, PentagonResult

logger = logging.getLogger(__name__)

T, S = sympy.symbols("T S", positive=True)

SPLINE_DEGREE = 5


def substitution_maps() -> dict[str, tuple[sympy.Expr, sympy.Expr]]:
    """The three factor maps on (T, S)."""
    return {
        "xy": (T, S + S / T),
        "xpyp": (T + T * S, S),
        "sum": (T + S, S / T * (T + S)),
    }


def compose_substitutions(*names: str) -> tuple[sympy.Expr, sympy.Expr]:
    """The map m such that applying the operators names[0], names[1], ... (leftmost outermost) pulls back along m.

    For A B η = η ∘ m_B ∘ m_A the point is first moved by the leftmost
    operator's map.
    """
    maps = substitution_maps()
    current = (T, S)
    for name in names:
        step = maps[name]
        current = tuple(sympy.simplify(e.subs({T: current[0], S: current[1]}, simultaneous=True)) for e in step)
    return current


def pentagon_f0_substitution() -> dict:
    """Exact comparison of both sides of the F₀ pentagon as rational maps.

    Returns:
        Dict with both composites, the expected map, the equality flag and
        the (T, S) = (2, 3) spot values
    """
    lhs = compose_substitutions("xy", "xpyp")
    rhs = compose_substitutions("xpyp", "sum", "xy")
    expected = (T + T * S + S, S / T * (1 + T))
    equal = all(sympy.simplify(a - b) == 0 for a, b in zip(lhs, rhs)) and all(
        sympy.simplify(a - b) == 0 for a, b in zip(lhs, expected)
    )
    point = {T: 2, S: 3}
    spot_lhs = tuple(sympy.nsimplify(e.subs(point)) for e in lhs)
    spot_rhs = tuple(sympy.nsimplify(e.subs(point)) for e in rhs)
    logger.info(f"F₀ pentagon substitution maps equal: {equal}")
    return {
        "lhs": lhs,
        "rhs": rhs,
        "expected": expected,
        "equal": equal,
        "spot_lhs": spot_lhs,
        "spot_rhs": spot_rhs,
    }


def _log_map(name: str, t: np.ndarray, s: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if name == "xy":
        return t, s + np.logaddexp(0.0, -t)
    if name == "xpyp":
        return t + np.logaddexp(0.0, s), s
    if name == "sum":
        d = np.logaddexp(0.0, s - t)
        return t + d, s + d
    raise ValueError(f"Unsupported substitution map: {name}. Supported: ['xy', 'xpyp', 'sum']")


def _pull(state: GridState, name: str) -> np.ndarray:
    """Samples of η ∘ m_name by quintic spline interpolation; points leaving the box give 0."""
    axis = state.axis
    t, s = np.meshgrid(axis, axis, indexing="ij")
    tq, sq = _log_map(name, t, s)
    re = RectBivariateSpline(axis, axis, state.samples.real, kx=SPLINE_DEGREE, ky=SPLINE_DEGREE)
    im = RectBivariateSpline(axis, axis, state.samples.imag, kx=SPLINE_DEGREE, ky=SPLINE_DEGREE)
    inside = (tq >= axis[0]) & (tq <= axis[-1]) & (sq >= axis[0]) & (sq <= axis[-1])
    values = np.zeros(t.shape, dtype=complex)
    values[inside] = re.ev(tq[inside], sq[inside]) + 1j * im.ev(tq[inside], sq[inside])
    return values


def _apply(state: GridState, *operators: str) -> GridState:
    """Apply operators right to left, as written in a product."""
    for name in reversed(operators):
        state = state.with_samples(_pull(state, name))
    return state


def substitution_grid_check(
    points: int = GRID_2D_POINTS,
    extent: float = GRID_2D_EXTENT,
    width: float = 2.0,
    drop_middle: bool = False,
    tolerance: float = 1e-6,
) -> PentagonResult:
    """Both sides of the F₀ pentagon applied to a 2D Gaussian by spline pullbacks."""
    packet = GaussianPacket.gaussian((0.0, 0.0), (width, width))
    state = sample_packet(packet, points, extent, lam=Lambda.ZERO)
    lhs = _apply(state, "xy", "xpyp")
    rhs = _apply(state, "xpyp", "xy") if drop_middle else _apply(state, "xpyp", "sum", "xy")
    deviation, phase = aligned_deviation(lhs.samples, rhs.samples)
    return PentagonResult(
        "pentagon_substitution" + ("[control]" if drop_middle else ""),
        Lambda.ZERO,
        None,
        points,
        extent,
        [deviation],
        [phase],
        tolerance,
    )


def _conjugation_grid(packet: GaussianPacket, points: int, extent: float):
    state = sample_packet(packet, points, extent, lam=Lambda.ZERO)
    t, s = np.meshgrid(state.axis, state.axis, indexing="ij")
    return state, t, s


def _relative(lhs: np.ndarray, rhs: np.ndarray) -> float:
    return float(np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs))


def verify_f0_conjugation(
    ns: tuple[int, ...] = (1, -1, 2, -2),
    points: int = GRID_2D_POINTS,
    extent: float = GRID_2D_EXTENT,
    packet: GaussianPacket | None = None,
) -> list[Residual]:
    """The four conjugation identities of F₀(x_k, y_k) with x_k = t, y_k = s,
    x_i = nπi∂_s and y_i = nπi∂_t for n = ε_ik.

    Imaginary shifts s ↦ s + nπi use the closed-form continuation of the packet;
    ∂_t of F₀η is spectral along t.
    """
    packet = packet or GaussianPacket.gaussian((0.0, 0.0), (1.0, 1.0), poly=((1.0, 0.0), (0.0, 0.3)))
    state, t, s = _conjugation_grid(packet, points, extent)
    eta = state.samples
    flat = f0(t, s)
    results = [
        Residual(
            "f0_conjugation[exp_xk]",
            _relative(flat * np.exp(t) * eta, np.exp(t) * flat * eta),
            1e-10,
        ),
        Residual("f0_conjugation[yk]", _relative(flat * s * eta, s * flat * eta), 1e-10),
    ]
    tau = state.frequencies[:, None]
    for n in ns:
        shifted = packet(t, s + 1j * n * math.pi)
        lhs = flat * shifted
        rhs = (1 + np.exp(t)) ** (-n) * f0(t, s + 1j * n * math.pi) * shifted
        results.append(
            Residual(f"f0_conjugation[exp_xi,n={n}]", _relative(lhs, rhs), 1e-6, {"n": n})
        )

        lhs = flat * (1j * n * math.pi) * packet.derivative(0, t, s)
        product = flat * eta
        derivative = fourier_multiply(product, 1j * tau, axis=0)
        rhs = 1j * n * math.pi * derivative - n * s * np.exp(t) / (1 + np.exp(t)) * product
        results.append(Residual(f"f0_conjugation[yi,n={n}]", _relative(lhs, rhs), 1e-6, {"n": n}))
    worst = max(r.residual for r in results)
    logger.info(f"F₀ conjugation identities: worst residual {worst:.2e}")
    return results
