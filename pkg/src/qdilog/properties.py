"""Property checks for Φ^h, F₀ and F_Λ, each returned as a Residual."""

from __future__ import annotations

import cmath
import logging
import math

import numpy as np

from ..gencomplex import Lambda
from .barnes import c_h, locate_zero_pole, phi
from .compact import phi_compact_ratio
from .flat import f0, f0_contour, f0_difference_residual
from .models import ContourSpec, Residual, ShiftMode
from .trilogy import f_lambda, involutivity_target

logger = logging.getLogger(__name__)

BLOWUP_DISTANCE = 1e-4
BLOWUP_THRESHOLD = 1e3
WRONG_SIGN_FLOOR = 1e-2


def _relative(lhs: complex, rhs: complex) -> float:
    scale = max(abs(lhs), abs(rhs), 1e-300)
    return abs(lhs - rhs) / scale


def difference_tolerance(h: complex) -> float:
    """1e−8 for real h, 1e−6 once the contour has to slant."""
    return 1e-8 if complex(h).imag == 0 else 1e-6


def sample_grid(h: complex, count: int = 5) -> list[complex]:
    """count × count points filling the middle of the default strip for h."""
    spec = ContourSpec.default(h)
    back = spec.rotation.conjugate()
    xs = np.linspace(-1.5, 1.5, count)
    ys = np.linspace(-0.4, 0.4, count) * spec.half_width
    return [complex(back * complex(x, y)) for x in xs for y in ys]


def check_difference_eqs(
    h: complex, samples: list[complex], wrong_sign: bool = False
) -> list[Residual]:
    """Residuals of both difference equations at every sample.

    Each side of an equation is evaluated with the other family of strip
    shifts, so the check does not reproduce the multiplier it is testing.
    With wrong_sign the multipliers become 1 − (...), a control that must fail.
    """
    h = complex(h)
    sign = -1 if wrong_sign else 1
    tolerance = difference_tolerance(h)
    results = []
    for z in samples:
        z = complex(z)
        base_unit = phi(h, z, mode=ShiftMode.UNIT).value
        shifted_h = phi(h, z + 2j * math.pi * h, mode=ShiftMode.UNIT).value
        rhs_h = (1 + sign * cmath.exp(1j * math.pi * h) * cmath.exp(z)) * base_unit
        results.append(
            Residual(
                "difference_h",
                _relative(shifted_h, rhs_h),
                tolerance,
                {"h": h, "z": z, "wrong_sign": wrong_sign},
            )
        )

        base_h = phi(h, z, mode=ShiftMode.H).value
        shifted_unit = phi(h, z + 2j * math.pi, mode=ShiftMode.H).value
        rhs_unit = (1 + sign * cmath.exp(1j * math.pi / h) * cmath.exp(z / h)) * base_h
        results.append(
            Residual(
                "difference_unit",
                _relative(shifted_unit, rhs_unit),
                tolerance,
                {"h": h, "z": z, "wrong_sign": wrong_sign},
            )
        )
    worst = max((r.residual for r in results), default=0.0)
    logger.info(f"Difference equations at h={h}: {len(samples)} samples, worst residual {worst:.2e}")
    return results


def check_pole_blowup(h: complex, distance: float = BLOWUP_DISTANCE) -> list[Residual]:
    """|Φ| ≥ 1e3 next to the first pole and ≤ 1e−3 next to the first zero."""
    pole = locate_zero_pole(h, 0, 0, "pole")
    zero = locate_zero_pole(h, 0, 0, "zero")
    near_pole = abs(phi(h, pole + distance).value)
    near_zero = abs(phi(h, zero + distance).value)
    return [
        Residual(
            "pole_blowup",
            1 / near_pole,
            1 / BLOWUP_THRESHOLD,
            {"h": h, "point": pole, "distance": distance, "abs_phi": near_pole},
        ),
        Residual(
            "zero_vanishing",
            near_zero,
            1 / BLOWUP_THRESHOLD,
            {"h": h, "point": zero, "distance": distance, "abs_phi": near_zero},
        ),
    ]


def check_involutivity(h: complex, z: complex, tolerance: float = 1e-8) -> Residual:
    """Φ^h(z)Φ^h(−z) = c_h e^{z²/(4πih)}."""
    lhs = phi(h, z).value * phi(h, -z).value
    rhs = c_h(h) * cmath.exp(z * z / (4j * math.pi * h))
    return Residual("involutivity", _relative(lhs, rhs), tolerance, {"h": h, "z": z})


def check_compact_ratio(h: complex, z: complex, tolerance: float = 1e-6) -> Residual:
    """The slanted integral against ψ^{exp(πih)}(e^z)/ψ^{exp(−πi/h)}(e^{z/h})."""
    integral = phi(h, z).value
    ratio = phi_compact_ratio(h, z).value
    return Residual("compact_ratio", abs(integral - ratio), tolerance, {"h": h, "z": z})


def check_conjugation(h: complex, z: complex, tolerance: float = 1e-8) -> Residual:
    """conj(Φ^h(z))·Φ^{h̄}(z̄) = 1."""
    h = complex(h)
    z = complex(z)
    product = phi(h, z).value.conjugate() * phi(h.conjugate(), z.conjugate()).value
    return Residual("conjugation", abs(product - 1), tolerance, {"h": h, "z": z})


def contour_grid(h: complex) -> list[ContourSpec]:
    """A 3 × 3 grid of admissible (a, θ) for h."""
    h = complex(h)
    a_max = min(1.0, 1.0 / abs(h))
    radii = [0.25 * a_max, 0.5 * a_max, 0.75 * a_max]
    if h.imag > 0:
        thetas = [-math.pi / 3, -math.pi / 4, -math.pi / 6]
    elif h.imag < 0:
        thetas = [math.pi / 6, math.pi / 4, math.pi / 3]
    else:
        thetas = [-0.2, 0.0, 0.2]
    return [ContourSpec(h, a, theta) for a in radii for theta in thetas]


def check_contour_invariance(h: complex, z: complex = 0.1, tolerance: float = 1e-9) -> Residual:
    """Spread of Φ^h(z) over the contour grid."""
    values = [phi(h, z, contour=spec).value for spec in contour_grid(h)]
    spread = max(_relative(v, values[0]) for v in values)
    return Residual("contour_invariance", spread, tolerance, {"h": h, "z": z, "contours": len(values)})


def check_unitarity(h: float, xs: list[float], tolerance: float = 1e-8) -> Residual:
    """|Φ^h(x)| = 1 on the real line for real h."""
    worst = max(abs(abs(phi(h, x).value) - 1) for x in xs)
    return Residual("unitarity", worst, tolerance, {"h": h, "samples": len(xs)})


def check_f0_contour(
    xs: list[float] | None = None, ys: list[float] | None = None, tolerance: float = 1e-8
) -> Residual:
    """f0 against its contour integral on a real grid."""
    xs = list(np.linspace(-2.0, 2.0, 5)) if xs is None else xs
    ys = list(np.linspace(-1.5, 1.5, 5)) if ys is None else ys
    worst = max(abs(f0_contour(x, y).value - f0(x, y)) for x in xs for y in ys)
    return Residual("f0_contour", worst, tolerance, {"grid": (len(xs), len(ys))})


def check_f0_difference(
    xs: list[float] | None = None, ys: list[float] | None = None, tolerance: float = 1e-12
) -> Residual:
    """F₀(x, y+πi) = (1 + e^x)F₀(x, y)."""
    xs = list(np.linspace(-2.0, 2.0, 5)) if xs is None else xs
    ys = list(np.linspace(-1.5, 1.5, 5)) if ys is None else ys
    worst = max(f0_difference_residual(x, y) for x in xs for y in ys)
    return Residual("f0_difference", worst, tolerance, {"grid": (len(xs), len(ys))})


def check_f_lambda(
    hbar: float, points: list[tuple[float, float]] | None = None
) -> list[Residual]:
    """Involutivity F(x,y)F(−x,−y) = e^{xy/(πi)} and |F| = 1 for every Λ."""
    points = points or [(0.7, 1.3), (-0.4, 0.9), (1.1, -0.6)]
    results = []
    for lam in Lambda:
        involution = 0.0
        modulus = 0.0
        for x, y in points:
            forward = f_lambda(lam, hbar, x, y)
            backward = f_lambda(lam, hbar, -x, -y)
            involution = max(involution, abs(forward * backward - involutivity_target(x, y)))
            modulus = max(modulus, abs(abs(forward) - 1))
        results.append(
            Residual(f"f_lambda_involutivity[{lam.value}]", involution, 1e-7, {"hbar": hbar})
        )
        results.append(Residual(f"f_lambda_unitarity[{lam.value}]", modulus, 1e-8, {"hbar": hbar}))
    return results


def flat_suite() -> list[Residual]:
    """Checks on F₀ that do not depend on h."""
    return [check_f0_contour(), check_f0_difference()]


def property_suite(h: complex, samples: list[complex] | None = None) -> list[Residual]:
    """Every property check that applies to h.

    Args:
        h: Nonzero complex parameter with Re h ≥ 0
        samples: Points for the difference and involutivity checks (default 5 × 5 grid)

    Returns:
        Residuals in a fixed order: pole blow-up checks, difference equations,
        involutivity, compact ratio (Im h > 0), conjugation, contour
        invariance, then unitarity and F_Λ for real h
    """
    h = complex(h)
    samples = sample_grid(h) if samples is None else samples
    logger.info(f"Property suite for h={h} on {len(samples)} samples")
    results = check_pole_blowup(h)
    results += check_difference_eqs(h, samples)
    results += [check_involutivity(h, z) for z in samples]
    if h.imag > 0:
        results += [check_compact_ratio(h, z) for z in samples]
    results += [check_conjugation(h, z) for z in samples]
    results.append(check_contour_invariance(h))
    if h.imag == 0:
        results.append(check_unitarity(h.real, [-3.0, -1.5, -0.2, 0.0, 0.7, 2.0, 3.0]))
        results += check_f_lambda(h.real)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.warning(f"Property suite for h={h}: {len(failed)} failures ({sorted(set(failed))})")
    return results
