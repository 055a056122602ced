"""Exact consistency checks for classical mutation: relations, Laurent phenomenon, ensemble map, brackets."""

from __future__ import annotations

import itertools
import logging

import numpy as np

from ..cluster import ExMat, Move, Seed, random_exmat
from .models import CompatReport
from .poisson import check_poisson_compat
from .pullback import a_pullback_along, ensemble_compatible, pullback_along

logger = logging.getLogger(__name__)


def relation_is_identity(exmat: ExMat, moves: list[Move]) -> bool:
    """True when the composite pullback along moves is the identity map of the seed."""
    return pullback_along(Seed(exmat), moves).is_identity()


def _paths(n: int, max_length: int):
    """Mutation paths of length 1..max_length without immediate repeats."""
    for length in range(1, max_length + 1):
        for path in itertools.product(range(n), repeat=length):
            if all(a != b for a, b in zip(path, path[1:])):
                yield path


def laurent_spot_check(exmat: ExMat, max_length: int = 5) -> tuple[bool, int]:
    """Check every A-variable composite along paths without immediate repeats is Laurent.

    X-coordinate pullbacks are not Laurent in general ((Z1·Z2)/(1+Z2) after one
    rank-2 mutation), so the check runs on the exchange relation of A-variables.

    Returns:
        (all_laurent, number_of_paths_checked)
    """
    checked = 0
    for path in _paths(exmat.n, max_length):
        composite = a_pullback_along(Seed(exmat), [Move.mutation(k) for k in path])
        checked += 1
        for image in composite.images:
            if not image.is_laurent():
                logger.warning(f"Non-Laurent A-variable {image} along path {path}")
                return False, checked
    return True, checked


def ensemble_spot_check(exmat: ExMat, max_length: int = 3) -> tuple[bool, int]:
    """Check p* ∘ (X-pullback) = (A-pullback) ∘ p* along every path of the same family.

    Returns:
        (all_compatible, number_of_paths_checked)
    """
    checked = 0
    for path in _paths(exmat.n, max_length):
        checked += 1
        if not ensemble_compatible(Seed(exmat), [Move.mutation(k) for k in path]):
            logger.warning(f"Ensemble map does not intertwine mutations along path {path}")
            return False, checked
    return True, checked


def random_poisson_compat(
    count: int = 50,
    max_rank: int = 4,
    bound: int = 2,
    seed: int = 0,
) -> list[tuple[ExMat, CompatReport]]:
    """Poisson compatibility of a random mutation on random seeds of rank ≤ max_rank."""
    rng = np.random.default_rng(seed)
    results = []
    for _ in range(count):
        n = int(rng.integers(2, max_rank + 1))
        exmat = random_exmat(rng, n, bound)
        k = int(rng.integers(0, n))
        results.append((exmat, check_poisson_compat(Seed(exmat), k)))
    return results
