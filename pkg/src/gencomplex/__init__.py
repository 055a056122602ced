"""Generalized complex numbers R_Λ = R[ℓ]/(ℓ² + Λ) and the complexified ring C_Λ."""

from .models import GC, GCC, AdmissibleFn, Lambda, Scalar, to_scalar
from .arithmetic import (
    apply_admissible,
    ell_matrix,
    gc_add,
    gc_close,
    gc_conj,
    gc_diagonalize,
    gc_embed,
    gc_exp,
    gc_from_json,
    gc_inv,
    gc_is_unit,
    gc_log,
    gc_mul,
    gc_neg,
    gc_norm,
    gc_pow,
    gc_sub,
    gc_to_json,
    gcc_add,
    gcc_close,
    gcc_mul,
    gcc_star,
)

__all__ = [
    # Models
    "Lambda",
    "GC",
    "GCC",
    "AdmissibleFn",
    "Scalar",
    "to_scalar",
    # Ring operations
    "gc_add",
    "gc_sub",
    "gc_neg",
    "gc_mul",
    "gc_conj",
    "gc_norm",
    "gc_is_unit",
    "gc_inv",
    "gc_pow",
    "gc_close",
    # Realisations
    "gc_embed",
    "gc_diagonalize",
    "ell_matrix",
    # Exponential map
    "gc_exp",
    "gc_log",
    # Complexification
    "gcc_add",
    "gcc_mul",
    "gcc_star",
    "gcc_close",
    # Functional calculus
    "apply_admissible",
    # Serialisation
    "gc_to_json",
    "gc_from_json",
]
