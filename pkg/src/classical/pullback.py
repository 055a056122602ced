"""Classical cluster X-mutation as pullback maps between seeds."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from ..cluster import Move, MoveKind, Seed, check_permutation, invert_permutation
from ..cluster.exmat import seed_mutate, seed_permute
from ..errors import UsageError
from .models import PullbackMap
from .ratexpr import RatExpr, generator_field

logger = logging.getLogger(__name__)


def _sign(value: int) -> int:
    return (value > 0) - (value < 0)


def identity_pullback(seed: Seed) -> PullbackMap:
    n = seed.rank
    return PullbackMap(seed, seed, tuple(RatExpr.generator(i, n) for i in range(n)))


def classical_mutation(seed: Seed, k: int) -> PullbackMap:
    """Pullback of the X-mutation μ_k.

    μ_k^* X'_k = X_k^{-1} and μ_k^* X'_i = X_i (1 + X_k^{-sgn ε_ik})^{-ε_ik} for i ≠ k.

    Raises:
        IndexError: If k is out of range
    """
    n = seed.rank
    if not 0 <= k < n:
        raise IndexError(f"mutation index k={k} out of bounds for rank {n}")
    field, gens = generator_field(n)
    images = []
    for i in range(n):
        if i == k:
            images.append(RatExpr(gens[k] ** -1))
            continue
        e_ik = seed.exmat[i, k]
        if e_ik == 0:
            images.append(RatExpr(gens[i]))
            continue
        factor = field.one + gens[k] ** (-_sign(e_ik))
        images.append(RatExpr(gens[i] * factor ** (-e_ik)))
    return PullbackMap(seed, seed_mutate(seed, k), tuple(images))


def permutation_pullback(seed: Seed, sigma) -> PullbackMap:
    """Pullback of the seed automorphism P_σ: X'_j ↦ X_{σ⁻¹(j)}."""
    n = seed.rank
    sigma = check_permutation(sigma, n)
    inverse = invert_permutation(sigma)
    images = tuple(RatExpr.generator(inverse[j], n) for j in range(n))
    return PullbackMap(seed, seed_permute(seed, sigma), images)


def compose_pullbacks(f: PullbackMap, g: PullbackMap) -> PullbackMap:
    """Composite of the seed path f then g, as one pullback from g.target to f.source.

    Raises:
        UsageError: If f.target and g.source are different seeds
    """
    if f.target != g.source:
        raise UsageError(
            f"Seed mismatch: first map ends at {f.target.exmat.tolist()}, "
            f"second starts at {g.source.exmat.tolist()}"
        )
    images = tuple(img.substitute(f.images) for img in g.images)
    return PullbackMap(f.source, g.target, images)


def move_pullback(seed: Seed, move: Move) -> PullbackMap:
    if move.kind is MoveKind.MUTATION:
        return classical_mutation(seed, move.index)
    return permutation_pullback(seed, move.perm)


def pullback_along(seed: Seed, moves: Iterable[Move]) -> PullbackMap:
    """Compose the pullbacks of a time-ordered move sequence starting at seed."""
    result = identity_pullback(seed)
    for move in moves:
        result = compose_pullbacks(result, move_pullback(result.target, move))
    logger.debug(f"Pullback along {len(result.target.history)} moves computed")
    return result


def a_mutation(seed: Seed, k: int) -> PullbackMap:
    """Exchange relation of the A-variables at k.

    A'_k = (Π_j A_j^{[ε_kj]+} + Π_j A_j^{[−ε_kj]+}) / A_k and A'_i = A_i for i ≠ k.

    Raises:
        IndexError: If k is out of range
    """
    n = seed.rank
    if not 0 <= k < n:
        raise IndexError(f"mutation index k={k} out of bounds for rank {n}")
    row = [seed.exmat[k, j] for j in range(n)]
    plus = RatExpr.monomial([max(e, 0) for e in row], n)
    minus = RatExpr.monomial([max(-e, 0) for e in row], n)
    images = [RatExpr.generator(i, n) for i in range(n)]
    images[k] = (plus + minus) / images[k]
    return PullbackMap(seed, seed_mutate(seed, k), tuple(images))


def a_pullback_along(seed: Seed, moves: Iterable[Move]) -> PullbackMap:
    """Composite A-variable map of a time-ordered move sequence; permutations relabel as for X."""
    result = identity_pullback(seed)
    for move in moves:
        if move.kind is MoveKind.MUTATION:
            step = a_mutation(result.target, move.index)
        else:
            step = permutation_pullback(result.target, move.perm)
        result = compose_pullbacks(result, step)
    return result


def ensemble_map(seed: Seed) -> tuple[RatExpr, ...]:
    """p*X_i = Π_j A_j^{ε_ij}."""
    n = seed.rank
    return tuple(RatExpr.monomial([seed.exmat[i, j] for j in range(n)], n) for i in range(n))


def ensemble_compatible(seed: Seed, moves: Iterable[Move]) -> bool:
    """True when p* carries the X-pullback along moves onto the A-pullback."""
    moves = list(moves)
    x_map = pullback_along(seed, moves)
    a_map = a_pullback_along(seed, moves)
    through_x = [img.substitute(ensemble_map(seed)) for img in x_map.images]
    through_a = [img.substitute(a_map.images) for img in ensemble_map(a_map.target)]
    return through_x == through_a
