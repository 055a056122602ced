"""Quantum dilogarithms: Φ^h, the compact ψ^q, F₀ and F_Λ, with property checks."""

from .models import ContourSpec, Method, QDValue, Residual, ShiftMode
from .barnes import barnes_integral, c_h, check_pole, locate_zero_pole, phi, pole_lattice, shift_into_strip
from .compact import (
    compact_terms,
    phi_compact_ratio,
    phi_ih_log_grid,
    phi_ih_ratio,
    psi_compact,
    ratio_bases,
)
from .flat import f0, f0_contour, f0_difference_residual, log1pexp
from .trilogy import f_lambda, involutivity_target, phi_ih, phi_minus_ih
from .grid import TABLE_COLUMNS, phi_real_grid, value_table
from .properties import (
    check_compact_ratio,
    check_conjugation,
    check_contour_invariance,
    check_difference_eqs,
    check_f0_contour,
    check_f0_difference,
    check_f_lambda,
    check_involutivity,
    check_pole_blowup,
    check_unitarity,
    contour_grid,
    flat_suite,
    property_suite,
    sample_grid,
)

__all__ = [
    # Models
    "ContourSpec",
    "Method",
    "QDValue",
    "Residual",
    "ShiftMode",
    # Φ^h
    "barnes_integral",
    "c_h",
    "check_pole",
    "locate_zero_pole",
    "phi",
    "pole_lattice",
    "shift_into_strip",
    # Compact
    "compact_terms",
    "phi_compact_ratio",
    "phi_ih_log_grid",
    "phi_ih_ratio",
    "psi_compact",
    "ratio_bases",
    # Flat and combined
    "f0",
    "f0_contour",
    "f0_difference_residual",
    "log1pexp",
    "f_lambda",
    "involutivity_target",
    "phi_ih",
    "phi_minus_ih",
    # Grids
    "TABLE_COLUMNS",
    "phi_real_grid",
    "value_table",
    # Properties
    "check_compact_ratio",
    "check_conjugation",
    "check_contour_invariance",
    "check_difference_eqs",
    "check_f0_contour",
    "check_f0_difference",
    "check_f_lambda",
    "check_involutivity",
    "check_pole_blowup",
    "check_unitarity",
    "contour_grid",
    "flat_suite",
    "property_suite",
    "sample_grid",
]
