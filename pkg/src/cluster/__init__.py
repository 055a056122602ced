"""Exchange matrices, seeds, quiver mutation and ideal triangulations."""

from .models import (
    ExMat,
    Move,
    MoveKind,
    Seed,
    ThetaVec,
    Tri,
    check_permutation,
    compose_permutations,
    invert_permutation,
    permutation_cycles,
)
from .exmat import (
    apply_move_exmat,
    apply_moves,
    apply_moves_exmat,
    kernel_vectors,
    mutate_exmat,
    permute_exmat,
    random_exmat,
    replay,
    seed_mutate,
    seed_permute,
)
from .triangulation import (
    STOCK_TRIANGULATIONS,
    canonical_form,
    corner_matrix,
    exmat_from_tri,
    flip_tri,
    four_punctured_sphere,
    ideal_square,
    punctured_torus,
    surface_genus,
    theta_from_punctures,
)
from .moves import (
    RELATIONS,
    format_moves,
    minimal_relation,
    parse_cycles,
    parse_moves,
    relation_moves,
    transposition,
)
from .io import load_seed, load_tri, parse_seed, parse_tri, save_seed, save_tri

__all__ = [
    # Models
    "ExMat",
    "Seed",
    "Move",
    "MoveKind",
    "Tri",
    "ThetaVec",
    # Permutations
    "check_permutation",
    "compose_permutations",
    "invert_permutation",
    "permutation_cycles",
    "transposition",
    # Exchange matrices
    "mutate_exmat",
    "permute_exmat",
    "apply_move_exmat",
    "apply_moves_exmat",
    "kernel_vectors",
    "random_exmat",
    # Seeds
    "seed_mutate",
    "seed_permute",
    "apply_moves",
    "replay",
    # Triangulations
    "exmat_from_tri",
    "corner_matrix",
    "flip_tri",
    "canonical_form",
    "surface_genus",
    "theta_from_punctures",
    "punctured_torus",
    "four_punctured_sphere",
    "ideal_square",
    "STOCK_TRIANGULATIONS",
    # Moves and relations
    "RELATIONS",
    "parse_moves",
    "parse_cycles",
    "format_moves",
    "relation_moves",
    "minimal_relation",
    # Files
    "load_seed",
    "parse_seed",
    "save_seed",
    "load_tri",
    "parse_tri",
    "save_tri",
]
