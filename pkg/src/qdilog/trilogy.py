"""The combined functions F_Λ^ℏ(x, y) for Λ = −1, 0, +1."""

from __future__ import annotations

import cmath
import logging
import math

from ..errors import DomainError
from ..gencomplex import Lambda
from .barnes import phi
from .compact import phi_ih_ratio
from .flat import f0

logger = logging.getLogger(__name__)


def phi_minus_ih(hbar: float, z: complex, method: str = "auto") -> complex:
    """Φ^{−iℏ}(z) = 1 / conj(Φ^{iℏ}(z̄)) by unitarity."""
    return 1 / phi_ih(hbar, complex(z).conjugate(), method).conjugate()


def phi_ih(hbar: float, z: complex, method: str = "auto") -> complex:
    """Φ^{iℏ}(z) by the compact ratio ("auto"/"ratio") or the slanted integral ("contour")."""
    if method in ("auto", "ratio"):
        return phi_ih_ratio(hbar, z).value
    if method == "contour":
        return phi(1j * hbar, z).value
    raise ValueError(f"Unsupported method: {method}. Supported: ['auto', 'ratio', 'contour']")


def f_lambda(lam: Lambda | int, hbar: float, x: float, y: float, method: str = "auto") -> complex:
    """F_Λ^ℏ(x, y).

    Λ = −1: Φ^ℏ(x + ℏy) / Φ^ℏ(x − ℏy).
    Λ = +1: Φ^{iℏ}(x + iℏy) · Φ^{−iℏ}(x − iℏy).
    Λ = 0: F₀(x, y), independent of ℏ.
    """
    lam = Lambda.parse(lam)
    if hbar <= 0:
        raise DomainError(f"ℏ must be positive, got {hbar}")
    if y == 0:
        return 1.0 + 0j
    if lam is Lambda.ZERO:
        return complex(f0(x, y))
    if lam is Lambda.NEGATIVE:
        return phi(hbar, x + hbar * y).value / phi(hbar, x - hbar * y).value
    return phi_ih(hbar, x + 1j * hbar * y, method) * phi_minus_ih(hbar, x - 1j * hbar * y, method)


def involutivity_target(x: float, y: float) -> complex:
    """e^{xy/(πi)}."""
    return cmath.exp(x * y / (1j * math.pi))
