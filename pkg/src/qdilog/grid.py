"""Vectorised evaluation of Φ^ℏ on real grids and value tables."""

from __future__ import annotations

import logging
import math

import numpy as np

from ..errors import DomainError
from .barnes import c_h, phi
from .models import ContourSpec, ShiftMode

logger = logging.getLogger(__name__)

PANEL_ORDER = 16
CHUNK = 512
TABLE_COLUMNS = ["z_re", "z_im", "phi_re", "phi_im", "abs", "est_error", "method", "shifts"]


def _ray_rule(start: float, length: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss–Legendre nodes and weights on [start, start + length]."""
    t, w = np.polynomial.legendre.leggauss(PANEL_ORDER)
    edges = np.linspace(start, start + length, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def _integral_nonpositive(hbar: float, x: np.ndarray) -> np.ndarray:
    """The Barnes integral for real ℏ at real x ≤ 0, on the θ = 0 contour."""
    spec = ContourSpec.default(hbar)
    a = spec.a
    length = 60.0 / (math.pi * (1 + hbar))
    x_max = float(np.max(np.abs(x), initial=1.0))
    panels = max(64, math.ceil(length * x_max / math.pi))
    v, weights = _ray_rule(a, length, panels)
    profile = np.exp(-math.pi * (1 + hbar) * v) / (
        v * -np.expm1(-2 * math.pi * v) * -np.expm1(-2 * math.pi * hbar * v)
    )

    t, arc_w = np.polynomial.legendre.leggauss(4 * PANEL_ORDER)
    angle = 0.5 * math.pi * (t + 1)
    p = a * np.exp(1j * angle)
    arc_kernel = 0.5 * math.pi * arc_w / (np.sinh(np.pi * p) * np.sinh(np.pi * hbar * p))

    out = np.empty(x.shape, dtype=complex)
    for start in range(0, x.size, CHUNK):
        block = x[start : start + CHUNK]
        # rays fold to −8i ∫ sin(vx) e^{−π(1+ℏ)v} / (v(1−e^{−2πv})(1−e^{−2πℏv})) dv
        rays = -8j * (np.sin(np.outer(block, v)) @ (weights * profile))
        # the arc runs from angle π to 0, and dp/p = i dφ
        arcs = -1j * (np.exp(-1j * np.outer(block, p)) @ arc_kernel)
        out[start : start + CHUNK] = rays + arcs
    return out


def phi_real_grid(hbar: float, x: np.ndarray) -> np.ndarray:
    """Φ^ℏ(x) for real ℏ > 0 on an array of real x.

    Points with x ≤ 0 are integrated directly; x > 0 uses
    Φ(x) = c_ℏ e^{x²/(4πiℏ)} / Φ(−x). Below −40·max(1, ℏ) the value is 1 to
    double precision.
    """
    if hbar <= 0:
        raise DomainError(f"ℏ must be positive, got {hbar}")
    x = np.asarray(x, dtype=float)
    flat = x.ravel()
    cutoff = 40.0 * max(1.0, hbar)
    mirrored = -np.abs(flat)
    values = np.ones(flat.shape, dtype=complex)
    inside = mirrored > -cutoff
    if np.any(inside):
        values[inside] = np.exp(-0.25 * _integral_nonpositive(hbar, mirrored[inside]))
    positive = flat > 0
    values[positive] = (
        c_h(hbar) * np.exp(flat[positive] ** 2 / (4j * math.pi * hbar)) / values[positive]
    )
    logger.debug(f"Φ^{hbar} on {flat.size} real points ({int(inside.sum())} integrated)")
    return values.reshape(x.shape)


def value_table(
    h: complex, zs: list[complex], mode: ShiftMode = ShiftMode.UNIT
) -> list[dict]:
    """Rows (z, Re Φ, Im Φ, |Φ|, est_error, method, shifts) for plotting and tables."""
    rows = []
    for z in zs:
        result = phi(h, z, mode=mode)
        rows.append(
            {
                "z_re": complex(z).real,
                "z_im": complex(z).imag,
                "phi_re": result.value.real,
                "phi_im": result.value.imag,
                "abs": abs(result.value),
                "est_error": result.est_error,
                "method": result.method.value,
                "shifts": result.shifts,
            }
        )
    return rows
