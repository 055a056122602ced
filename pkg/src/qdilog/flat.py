"""The flat quantum dilogarithm F₀(x, y) = (1 + e^x)^{y/(πi)}."""

from __future__ import annotations

import cmath
import math

import numpy as np
from scipy import integrate

from ..errors import QuadratureError
from ..settings import ARC_NODES, QUAD_EPSABS, QUAD_LIMIT
from .models import Method, QDValue

RAY_LENGTH = 55.0 / math.pi


def log1pexp(x):
    """log(1 + e^x) for real x without overflow."""
    return np.logaddexp(0.0, x)


def f0(x, y):
    """exp((y/πi)·log(1 + e^x)); y may be complex, x is real. Works elementwise on arrays."""
    value = np.exp(np.asarray(y) / (1j * np.pi) * log1pexp(np.asarray(x, dtype=float)))
    return complex(value) if np.ndim(value) == 0 else value


def f0_contour(x: float, y: complex, a: float = 0.3) -> QDValue:
    """F₀ from exp(−(y/2πi) ∫_{Ω_a} e^{−ipx} / sinh(πp) dp/p).

    The rays fold to ∫_a^{a+55/π} 2cos(vx)/(v sinh πv) dv; the half circle
    uses Gauss–Legendre with a doubled-order error estimate.
    """
    if not 0 < a < 1:
        raise ValueError(f"Radius a must lie in (0, 1), got {a}")
    if y == 0:
        return QDValue(1.0 + 0j, 0.0, Method.CLOSED_FORM)

    def ray(v: float) -> float:
        return 2 * math.cos(v * x) / (v * math.sinh(math.pi * v))

    rays, ray_err = integrate.quad(
        ray, a, a + RAY_LENGTH, limit=QUAD_LIMIT, epsabs=QUAD_EPSABS, epsrel=1e-13
    )

    def arc(nodes: int) -> complex:
        t, w = np.polynomial.legendre.leggauss(nodes)
        phi = 0.5 * math.pi * (t + 1)
        p = a * np.exp(1j * phi)
        integrand = np.exp(-1j * p * x) / np.sinh(np.pi * p)
        # from φ = π to φ = 0: dp/p = i dφ
        return complex(-np.sum(0.5 * math.pi * w * integrand * 1j))

    arc_value = arc(ARC_NODES)
    arc_err = abs(arc_value - arc(2 * ARC_NODES))
    error = ray_err + arc_err
    if error > 1e-6:
        raise QuadratureError(f"F₀ contour integral at x={x} did not converge", residual=error)
    integral = rays + arc_value
    value = cmath.exp(-(y / (2j * math.pi)) * integral)
    return QDValue(value, abs(value) * abs(y) / (2 * math.pi) * error, Method.BARNES)


def f0_difference_residual(x: float, y: float) -> float:
    """|F₀(x, y+πi) − (1 + e^x)F₀(x, y)|, relative to the right-hand side."""
    lhs = f0(x, y + 1j * math.pi)
    rhs = (1 + math.exp(x)) * f0(x, y)
    return abs(lhs - rhs) / abs(rhs)
