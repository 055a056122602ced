"""Exact classical cluster X-mutation, Poisson brackets and evaluation at R_Λ points."""

from .ratexpr import RatExpr, generator_field
from .models import BracketCheck, CompatReport, PullbackMap, PunctureCheck
from .pullback import (
    classical_mutation,
    compose_pullbacks,
    identity_pullback,
    move_pullback,
    a_mutation,
    a_pullback_along,
    ensemble_compatible,
    ensemble_map,
    permutation_pullback,
    pullback_along,
)
from .poisson import (
    check_poisson_compat,
    doubled_exmat,
    doubled_poisson_bracket,
    is_casimir,
    monomial,
    poisson_bracket,
)
from .evaluation import check_puncture_constraint, eval_at_point
from .consistency import ensemble_spot_check, laurent_spot_check, random_poisson_compat, relation_is_identity

__all__ = [
    # Expressions
    "RatExpr",
    "generator_field",
    "monomial",
    # Models
    "PullbackMap",
    "BracketCheck",
    "CompatReport",
    "PunctureCheck",
    # Mutation
    "classical_mutation",
    "permutation_pullback",
    "identity_pullback",
    "move_pullback",
    "compose_pullbacks",
    "pullback_along",
    # A-variables and the ensemble map
    "a_mutation",
    "a_pullback_along",
    "ensemble_map",
    "ensemble_compatible",
    # Brackets
    "poisson_bracket",
    "doubled_exmat",
    "doubled_poisson_bracket",
    "check_poisson_compat",
    "is_casimir",
    # Evaluation
    "eval_at_point",
    "check_puncture_constraint",
    # Consistency
    "relation_is_identity",
    "laurent_spot_check",
    "ensemble_spot_check",
    "random_poisson_compat",
]
