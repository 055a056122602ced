"""Operator-level checks: Heisenberg symbols, K′ conjugation and grid pentagons."""

from .models import HBAR, GaussianPacket, GridState, HSymbol, LinearMap, PentagonResult, ZBlockOp
from .symbols import (
    bracket_matrix,
    hsymbol_bracket,
    x_ring,
    x_symbol,
    x_tilde,
    y_symbol,
    z_operator,
    zblock_commutator,
    zblock_expected,
)
from .kprime import check_kprime_conjugation, conjugate_symbol, expected_conjugate, kprime_chain, kprime_linear
from .grid import aligned_deviation, boundary_leakage, clamp_hbar, relative_norm_drift, sample_packet
from .operators1d import (
    apply_exp_momentum,
    apply_exp_position,
    apply_function_of_sum,
    apply_phi_of_momentum,
    apply_phi_of_position,
    apply_phi_of_sum,
    sum_exponential_residual,
    weyl_residual,
)
from .pentagon import (
    PentagonEngine2D,
    basket_1d,
    basket_2d,
    convergence_profile,
    f_lambda_multiplier,
    verify_pentagon_2d,
    verify_pentagon_lambda_minus1,
)
from .modular import WeylPair, basket_modular, f1_compact_factors, modular_pairs, verify_pentagon_lambda_plus1
from .flat_substitution import (
    compose_substitutions,
    pentagon_f0_substitution,
    substitution_grid_check,
    substitution_maps,
    verify_f0_conjugation,
)

__all__ = [
    # Models
    "HBAR",
    "GaussianPacket",
    "GridState",
    "HSymbol",
    "LinearMap",
    "PentagonResult",
    "ZBlockOp",
    # Symbols
    "bracket_matrix",
    "hsymbol_bracket",
    "x_ring",
    "x_symbol",
    "x_tilde",
    "y_symbol",
    "z_operator",
    "zblock_commutator",
    "zblock_expected",
    # K′
    "check_kprime_conjugation",
    "conjugate_symbol",
    "expected_conjugate",
    "kprime_chain",
    "kprime_linear",
    # Grids
    "aligned_deviation",
    "boundary_leakage",
    "clamp_hbar",
    "relative_norm_drift",
    "sample_packet",
    # 1D operators
    "apply_exp_momentum",
    "apply_exp_position",
    "apply_function_of_sum",
    "apply_phi_of_momentum",
    "apply_phi_of_position",
    "apply_phi_of_sum",
    "sum_exponential_residual",
    "weyl_residual",
    # Pentagons
    "PentagonEngine2D",
    "basket_1d",
    "basket_2d",
    "convergence_profile",
    "f_lambda_multiplier",
    "verify_pentagon_2d",
    "verify_pentagon_lambda_minus1",
    "verify_pentagon_lambda_plus1",
    # Modular double
    "WeylPair",
    "basket_modular",
    "f1_compact_factors",
    "modular_pairs",
    # Flat substitution
    "compose_substitutions",
    "pentagon_f0_substitution",
    "substitution_grid_check",
    "substitution_maps",
    "verify_f0_conjugation",
]
