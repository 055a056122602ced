"""The compact quantum dilogarithm ψ^q and Φ^{iℏ} as a ratio of two of them."""

from __future__ import annotations

import cmath
import logging
import math

import numpy as np

from ..errors import DomainError, PoleError
from ..settings import COMPACT_TAIL, POLE_DISTANCE
from .models import Method, QDValue

logger = logging.getLogger(__name__)


def compact_terms(q: complex, z: complex, tail: float = COMPACT_TAIL) -> int:
    """Smallest nmax with |q|^{2·nmax−1}|z| < tail."""
    r = abs(q)
    if abs(z) == 0 or r == 0:
        return 1
    n = (math.log(tail) - math.log(abs(z))) / (2 * math.log(r)) + 0.5
    return max(1, math.ceil(n))


def psi_compact(q: complex, z: complex, nmax: int | None = None) -> QDValue:
    """ψ^q(z) = Π_{n≥1} (1 + q^{2n−1} z)^{-1}, truncated with the tail in est_error.

    Raises:
        DomainError: If |q| ≥ 1
        PoleError: If a factor 1 + q^{2n−1}z vanishes
    """
    q = complex(q)
    z = complex(z)
    if abs(q) >= 1:
        raise DomainError(f"The compact quantum dilogarithm needs |q| < 1, got |q|={abs(q)}")
    nmax = nmax or compact_terms(q, z)
    n = np.arange(1, nmax + 1)
    factors = 1 + q ** (2 * n - 1) * z
    worst = int(np.argmin(np.abs(factors)))
    if abs(factors[worst]) < POLE_DISTANCE:
        raise PoleError(
            f"ψ^q(z) has a pole: 1 + q^{2 * worst + 1}·z ≈ 0 at z={z}",
            point=z,
            lattice=(worst + 1, 0, "pole"),
        )
    value = complex(1 / np.prod(factors))
    r = abs(q)
    tail = r ** (2 * nmax + 1) * abs(z) / (1 - r * r)
    est_error = abs(value) * (math.expm1(min(tail, 700.0)) + nmax * 1e-16)
    return QDValue(value, est_error, Method.PRODUCT)


def ratio_bases(hbar: float) -> tuple[float, float]:
    """exp(πi·iℏ) = e^{−πℏ} and exp(−πi/(iℏ)) = e^{−π/ℏ}."""
    if hbar <= 0:
        raise DomainError(f"ℏ must be positive, got {hbar}")
    return math.exp(-math.pi * hbar), math.exp(-math.pi / hbar)


def phi_compact_ratio(h: complex, z: complex) -> QDValue:
    """Φ^h(z) = ψ^{exp(πih)}(e^z) / ψ^{exp(−πi/h)}(e^{z/h}), valid for Im h > 0."""
    h = complex(h)
    if h.imag <= 0:
        raise DomainError(f"The compact ratio needs Im h > 0, got h={h}")
    z = complex(z)
    top = psi_compact(cmath.exp(1j * math.pi * h), cmath.exp(z))
    bottom = psi_compact(cmath.exp(-1j * math.pi / h), cmath.exp(z / h))
    value = top.value / bottom.value
    est_error = abs(value) * (
        top.est_error / abs(top.value) + bottom.est_error / abs(bottom.value)
    )
    return QDValue(value, est_error, Method.COMPACT_RATIO)


def phi_ih_ratio(hbar: float, z: complex) -> QDValue:
    """Φ^{iℏ}(z) = ψ^{e^{−πℏ}}(e^z) / ψ^{e^{−π/ℏ}}(e^{−iz/ℏ})."""
    ratio_bases(hbar)
    return phi_compact_ratio(1j * hbar, z)


def phi_ih_log_grid(hbar: float, z: np.ndarray) -> np.ndarray:
    """log Φ^{iℏ} on an array of arguments, summed in log space with log1p."""
    q1, q2 = ratio_bases(hbar)
    z = np.asarray(z, dtype=complex)
    top_arg = np.exp(z)
    bottom_arg = np.exp(-1j * z / hbar)
    n1 = compact_terms(q1, float(np.max(np.abs(top_arg), initial=1.0)))
    n2 = compact_terms(q2, float(np.max(np.abs(bottom_arg), initial=1.0)))
    log_top = np.zeros_like(z)
    for n in range(1, n1 + 1):
        log_top -= np.log1p(q1 ** (2 * n - 1) * top_arg)
    log_bottom = np.zeros_like(z)
    for n in range(1, n2 + 1):
        log_bottom -= np.log1p(q2 ** (2 * n - 1) * bottom_arg)
    return log_top - log_bottom
