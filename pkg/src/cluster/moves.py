"""Move-sequence parsing and the standard relations R1–R5 between seed moves."""

from __future__ import annotations

import re

from ..errors import UsageError
from .models import (
    ExMat,
    Move,
    check_permutation,
    compose_permutations,
    invert_permutation,
)

_TOKEN = re.compile(r"\s*(m\s*(\d+)|p\s*((?:\([\d\s]*\))+))\s*(?:,|$)")
_CYCLE = re.compile(r"\(([\d\s]*)\)")

RELATIONS = ("R1", "R2", "R3", "R4", "R5")
RELATION_ALIASES = {
    "involution": "R1",
    "twice-flip": "R1",
    "quadrilateral": "R2",
    "pentagon": "R3",
    "permutation": "R4",
    "equivariance": "R5",
}


def parse_cycles(text: str, rank: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation such as "(1 2)(3 4)" into an image tuple."""
    sigma = list(range(rank))
    for match in _CYCLE.finditer(text):
        cycle = [int(v) - 1 for v in match.group(1).split()]
        if any(not 0 <= v < rank for v in cycle):
            raise UsageError(f"Cycle {match.group(0)} leaves the index range 1..{rank}")
        if len(set(cycle)) != len(cycle):
            raise UsageError(f"Cycle {match.group(0)} repeats an index")
        for pos, v in enumerate(cycle):
            sigma[v] = cycle[(pos + 1) % len(cycle)]
    return check_permutation(sigma, rank)


def parse_moves(text: str, rank: int) -> list[Move]:
    """Parse a comma-separated move string like "m1,m3,p(1 2)" (1-based, time order).

    Raises:
        UsageError: On malformed tokens or out-of-range indices
    """
    moves: list[Move] = []
    text = text.strip()
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            raise UsageError(f"Cannot parse move sequence at {text[position:]!r}")
        if match.group(2) is not None:
            k = int(match.group(2)) - 1
            if not 0 <= k < rank:
                raise UsageError(f"Mutation index {k + 1} out of range 1..{rank}")
            moves.append(Move.mutation(k))
        else:
            moves.append(Move.permutation(parse_cycles(match.group(3), rank)))
        position = match.end()
    return moves


def format_moves(moves) -> str:
    return ",".join(str(move) for move in moves)


def transposition(i: int, j: int, rank: int) -> tuple[int, ...]:
    sigma = list(range(rank))
    sigma[i], sigma[j] = j, i
    return tuple(sigma)


def relation_moves(
    name: str,
    rank: int,
    i: int = 0,
    j: int = 1,
    sigma=None,
    sigma2=None,
) -> list[Move]:
    """Instantiate a relation as a time-ordered move list that composes to the identity.

    Args:
        name: One of R1..R5 or an alias (pentagon, quadrilateral, ...)
        rank: Number of indices
        i, j: Mutation indices used by R1, R2, R3 and R5
        sigma: Permutation for R4 (σ₁) and R5 (σ)
        sigma2: Second permutation for R4 (σ₂)

    Returns:
        Moves whose composite is the identity on seeds of the right shape
    """
    key = RELATION_ALIASES.get(name.lower(), name.upper())
    if key == "R1":
        return [Move.mutation(i), Move.mutation(i)]
    if key == "R2":
        return [Move.mutation(i), Move.mutation(j), Move.mutation(i), Move.mutation(j)]
    if key == "R3":
        five = [Move.mutation(k) for k in (i, j, i, j, i)]
        return five + [Move.permutation(transposition(i, j, rank))]
    if key == "R4":
        sigma1 = check_permutation(sigma if sigma is not None else transposition(0, 1, rank), rank)
        sigma2 = check_permutation(
            sigma2 if sigma2 is not None else transposition(rank - 2, rank - 1, rank), rank
        )
        product = compose_permutations(sigma1, sigma2)
        # P_{(σ₁σ₂)⁻¹} P_{σ₁} P_{σ₂}, rightmost first
        return [
            Move.permutation(sigma2),
            Move.permutation(sigma1),
            Move.permutation(invert_permutation(product)),
        ]
    if key == "R5":
        sigma = check_permutation(
            sigma if sigma is not None else tuple((v + 1) % rank for v in range(rank)), rank
        )
        # μ_{σ(i)} P_σ μ_i P_{σ⁻¹}, rightmost first
        return [
            Move.permutation(invert_permutation(sigma)),
            Move.mutation(i),
            Move.permutation(sigma),
            Move.mutation(sigma[i]),
        ]
    raise UsageError(f"Unknown relation {name!r}; expected one of {', '.join(RELATIONS)}")


def minimal_relation(name: str, sign: int = 1) -> tuple[ExMat, list[Move]]:
    """The smallest seed on which a relation is usually checked, with its moves."""
    key = RELATION_ALIASES.get(name.lower(), name.upper())
    rank2 = ExMat(((0, sign), (-sign, 0)))
    torus = ExMat(((0, 2, -2), (-2, 0, 2), (2, -2, 0)))
    if key == "R1":
        return rank2, relation_moves(key, 2)
    if key == "R2":
        return ExMat.zeros(2), relation_moves(key, 2)
    if key == "R3":
        return rank2, relation_moves(key, 2)
    if key == "R4":
        return torus, relation_moves(key, 3)
    if key == "R5":
        return torus, relation_moves(key, 3)
    raise UsageError(f"Unknown relation {name!r}; expected one of {', '.join(RELATIONS)}")
