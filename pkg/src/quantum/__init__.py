"""Quantum tori, quantum mutation, ψ series and matrix-model checks."""

from .coeff import COEFF_FIELD, Q, QS
from .torus import Factor, QContext, QElem, Word, anti_automorphism, q_mul, star, substitute
from .models import Backend, MatrixModel, RelationResult, SeriesCheck
from .mutation import (
    QuantumMap,
    compose_quantum,
    doubled_mutation,
    move_map,
    mu_prime,
    mu_quantum,
    mu_quantum_lambda,
    mu_sharp,
    permutation_map,
)
from .limit import classical_limit, limit_images
from .series import (
    QSeries,
    pentagon_context,
    psi_of,
    psi_series,
    to_series,
    verify_psi_difference,
    verify_psi_pentagon,
    verify_sharp_is_psi_conjugation,
)
from .matrix_model import (
    build_matrix_model,
    commutation_residual,
    default_orders,
    evaluate_elem,
    verify_relation_numeric,
)
from .protocols import RelationBackend
from .backends import ClassicalBackend, MatrixBackend, SeriesBackend

__all__ = [
    # Coefficients
    "COEFF_FIELD",
    "Q",
    "QS",
    # Torus
    "QContext",
    "QElem",
    "Word",
    "Factor",
    "q_mul",
    "substitute",
    "anti_automorphism",
    "star",
    # Models
    "Backend",
    "SeriesCheck",
    "MatrixModel",
    "RelationResult",
    # Mutation
    "QuantumMap",
    "mu_prime",
    "mu_sharp",
    "mu_quantum",
    "mu_quantum_lambda",
    "doubled_mutation",
    "permutation_map",
    "move_map",
    "compose_quantum",
    # Classical limit
    "classical_limit",
    "limit_images",
    # Series
    "QSeries",
    "psi_series",
    "psi_of",
    "to_series",
    "pentagon_context",
    "verify_psi_difference",
    "verify_psi_pentagon",
    "verify_sharp_is_psi_conjugation",
    # Matrix models
    "build_matrix_model",
    "commutation_residual",
    "default_orders",
    "evaluate_elem",
    "verify_relation_numeric",
    # Backends
    "RelationBackend",
    "ClassicalBackend",
    "SeriesBackend",
    "MatrixBackend",
]
