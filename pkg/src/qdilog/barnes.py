"""Φ^h by the (slanted) Barnes integral.

Φ^h(z) = exp(−¼ ∫_{e^{iθ}Ω_a} e^{−ipz} / (sinh(πp) sinh(πhp)) dp/p), where
Ω_a follows the real line and passes over the origin on the upper half
circle of radius a. The two rays are folded onto [a, ∞) and integrated with
scipy's adaptive quadrature; the arc uses fixed-order Gauss–Legendre.
"""

from __future__ import annotations

import cmath
import logging
import math
from collections.abc import Callable

import numpy as np
from scipy import integrate

from ..errors import DomainError, PoleError, QuadratureError
from ..settings import ARC_NODES, POLE_DISTANCE, QUAD_EPSABS, QUAD_LIMIT
from .models import ContourSpec, Method, QDValue, ShiftMode

logger = logging.getLogger(__name__)

RAY_DECAY_LENGTHS = 60.0
QUADRATURE_TOLERANCE = 1e-6


def c_h(h: complex) -> complex:
    """c_h = exp(−πi(h + 1/h)/12)."""
    h = complex(h)
    if h == 0:
        raise DomainError("h must be nonzero")
    return cmath.exp(-1j * math.pi * (h + 1 / h) / 12)


def locate_zero_pole(h: complex, n: int, m: int, kind: str = "pole") -> complex:
    """±((2n+1)πi + (2m+1)πih): + for zeros, − for poles."""
    if n < 0 or m < 0:
        raise DomainError("Lattice indices must be non-negative")
    point = (2 * n + 1) * math.pi * 1j + (2 * m + 1) * math.pi * 1j * complex(h)
    if kind == "zero":
        return point
    if kind == "pole":
        return -point
    raise ValueError(f"Unsupported lattice kind: {kind}. Supported: ['zero', 'pole']")


def pole_lattice(h: complex, radius: float, kind: str = "pole") -> list[tuple[int, int, complex]]:
    """Every zero or pole (n, m, point) with |point| ≤ radius."""
    h = complex(h)
    n_max = int(radius / (2 * math.pi)) + 3
    m_max = int(radius / (2 * math.pi * abs(h))) + 3
    points = []
    for n in range(n_max + 1):
        for m in range(m_max + 1):
            point = locate_zero_pole(h, n, m, kind)
            if abs(point) <= radius:
                points.append((n, m, point))
    return points


def check_pole(h: complex, z: complex, threshold: float = POLE_DISTANCE) -> None:
    """Raise PoleError if z is within threshold of a pole of Φ^h."""
    for n, m, point in pole_lattice(h, abs(z) + 1.0):
        if abs(z - point) < threshold:
            raise PoleError(
                f"z={z} is within {threshold:g} of the pole (n={n}, m={m}) at {point}",
                point=point,
                lattice=(n, m, "pole"),
            )


def _ray_integrand(v: float, z: complex, spec: ContourSpec) -> complex:
    rot = spec.rotation
    h = spec.h
    w = rot * v
    denom = w * (1 - cmath.exp(-2 * math.pi * w)) * (1 - cmath.exp(-2 * math.pi * h * w))
    decay = -math.pi * (1 + h) * w
    numer = cmath.exp(-1j * w * z + decay) - cmath.exp(1j * w * z + decay)
    return rot * 4 * numer / denom


def _arc(z: complex, spec: ContourSpec, nodes: int) -> complex:
    x, weights = np.polynomial.legendre.leggauss(nodes)
    phi = 0.5 * math.pi * (x + 1)
    weights = 0.5 * math.pi * weights
    p = spec.rotation * spec.a * np.exp(1j * phi)
    integrand = np.exp(-1j * p * z) / (np.sinh(np.pi * p) * np.sinh(np.pi * spec.h * p) * p)
    # the arc runs from φ = π down to φ = 0
    return complex(-np.sum(weights * integrand * 1j * p))


def barnes_integral(z: complex, spec: ContourSpec) -> tuple[complex, float]:
    """∫_{e^{iθ}Ω_a} of the Barnes integrand at z inside the strip, with an error estimate."""
    delta = spec.decay(z)
    if delta <= 0:
        raise DomainError(f"z={z} is outside the strip of {spec}")
    upper = spec.a + RAY_DECAY_LENGTHS / delta

    def part(func: Callable[[complex], float]) -> tuple[float, float]:
        value, error = integrate.quad(
            lambda v: func(_ray_integrand(v, z, spec)),
            spec.a,
            upper,
            limit=QUAD_LIMIT,
            epsabs=QUAD_EPSABS,
            epsrel=1e-12,
        )
        return value, error

    re, re_err = part(lambda c: c.real)
    im, im_err = part(lambda c: c.imag)
    arc = _arc(z, spec, ARC_NODES)
    arc_err = abs(arc - _arc(z, spec, 2 * ARC_NODES))
    total = complex(re, im) + arc
    error = re_err + im_err + arc_err
    if error > QUADRATURE_TOLERANCE:
        raise QuadratureError(
            f"Barnes integral at z={z} did not converge (error {error:.2e})", residual=error
        )
    return total, error


def _shift_plan(spec: ContourSpec, z: complex, mode: ShiftMode):
    h = spec.h
    if mode is ShiftMode.UNIT:
        step = 2j * math.pi
        factor = cmath.exp(1j * math.pi / h)

        def multiplier(w: complex) -> complex:
            return 1 + factor * cmath.exp(w / h)
    else:
        step = 2j * math.pi * h
        factor = cmath.exp(1j * math.pi * h)

        def multiplier(w: complex) -> complex:
            return 1 + factor * cmath.exp(w)

    stride = (spec.rotation * step).imag
    if stride <= 0:
        raise DomainError(f"Shift mode {mode.value} cannot move z across the strip for h={h}")
    n = round((spec.rotation * z).imag / stride)
    return step, multiplier, n


def shift_into_strip(
    spec: ContourSpec, z: complex, mode: ShiftMode = ShiftMode.UNIT
) -> tuple[complex, complex, int]:
    """Move z into the strip with difference equations.

    Returns:
        (z0, multiplier, n) with Φ(z) = multiplier·Φ(z0) and z = z0 + n·step
    """
    if spec.in_strip(z, margin=0.25 * spec.half_width):
        return z, 1.0 + 0j, 0
    step, multiplier, n = _shift_plan(spec, z, mode)
    z0 = z - n * step
    product = 1.0 + 0j
    if n > 0:
        for j in range(n):
            product *= multiplier(z0 + j * step)
    else:
        for j in range(-n):
            product /= multiplier(z + j * step)
    return z0, product, n


def phi(
    h: complex,
    z: complex,
    contour: ContourSpec | None = None,
    mode: ShiftMode | str = ShiftMode.UNIT,
) -> QDValue:
    """Φ^h(z) for Re h ≥ 0 by the slanted Barnes integral; Re h < 0 via Φ^{-h} = (Φ^h)^{-1}.

    Args:
        h: Nonzero complex parameter
        z: Argument; moved into the strip by difference equations when needed
        contour: Contour to use (default chosen from h and z)
        mode: Which difference equation family performs the strip escape

    Raises:
        DomainError: If h = 0
        PoleError: If z is within the pole threshold of the pole lattice
        QuadratureError: If the ray quadrature does not converge
    """
    h = complex(h)
    z = complex(z)
    if h == 0:
        raise DomainError("h must be nonzero")
    if h.real < 0:
        inverse = phi(-h, z, None, mode)
        value = 1 / inverse.value
        error = inverse.est_error / abs(inverse.value) ** 2
        return QDValue(value, error, inverse.method, inverse.shifts, inverse.contour)
    mode = ShiftMode(mode) if isinstance(mode, str) else mode
    check_pole(h, z)
    z0, multiplier, shifts = shift_into_strip(ContourSpec.default(h, z), z, mode)
    spec = contour or ContourSpec.default(h, z0)
    if not spec.in_strip(z0):
        z0, multiplier, shifts = shift_into_strip(spec, z, mode)
    integral, error = barnes_integral(z0, spec)
    base = cmath.exp(-0.25 * integral)
    value = multiplier * base
    est_error = abs(value) * 0.25 * error
    method = Method.BARNES if spec.theta == 0 else Method.SLANTED
    logger.debug(f"Φ^{h}({z}) = {value} (shifts={shifts}, error={est_error:.1e})")
    return QDValue(value, est_error, method, abs(shifts), spec)
