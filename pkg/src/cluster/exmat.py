"""Quiver mutation, seed automorphisms and integer kernels of exchange matrices."""

from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from .models import (
    ExMat,
    Move,
    MoveKind,
    Seed,
    ThetaVec,
    check_permutation,
    invert_permutation,
)

logger = logging.getLogger(__name__)


def mutate_exmat(e: ExMat, k: int) -> ExMat:
    """Mutate an exchange matrix at index k.

    ε'_ij = −ε_ij if k ∈ {i, j}, else ε_ij + (ε_ik|ε_kj| + |ε_ik|ε_kj)/2.

    Args:
        e: Exchange matrix
        k: Mutation index (0-based)

    Returns:
        The mutated exchange matrix

    Raises:
        IndexError: If k is out of range
    """
    n = e.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index k={k} out of bounds for rank {n}")
    b = e.array
    col = b[:, k]
    row = b[k, :]
    # The half-sum is integral: it vanishes unless both factors share a sign.
    mutated = b + (np.outer(col, np.abs(row)) + np.outer(np.abs(col), row)) // 2
    mutated[k, :] = -b[k, :]
    mutated[:, k] = -b[:, k]
    return ExMat.from_array(mutated)


def permute_exmat(e: ExMat, sigma) -> ExMat:
    """Relabel indices so that ε'_{σ(i)σ(j)} = ε_ij.

    Raises:
        UsageError: If sigma is not a bijection on the indices
    """
    sigma = check_permutation(sigma, e.n)
    inverse = np.array(invert_permutation(sigma), dtype=np.int64)
    return ExMat.from_array(e.array[np.ix_(inverse, inverse)])


def apply_move_exmat(e: ExMat, move: Move) -> ExMat:
    if move.kind is MoveKind.MUTATION:
        return mutate_exmat(e, move.index)
    return permute_exmat(e, move.perm)


def apply_moves_exmat(e: ExMat, moves: Iterable[Move]) -> ExMat:
    """Apply moves left to right (time order)."""
    for move in moves:
        e = apply_move_exmat(e, move)
    return e


def seed_mutate(seed: Seed, k: int) -> Seed:
    return Seed(
        mutate_exmat(seed.exmat, k),
        seed.labels,
        initial=seed.initial,
        history=seed.history + (Move.mutation(k),),
    )


def seed_permute(seed: Seed, sigma) -> Seed:
    return Seed(
        permute_exmat(seed.exmat, sigma),
        seed.labels,
        initial=seed.initial,
        history=seed.history + (Move.permutation(sigma),),
    )


def apply_moves(seed: Seed, moves: Iterable[Move]) -> Seed:
    """Apply a sequence of moves to a seed in time order, extending its history."""
    for move in moves:
        if move.kind is MoveKind.MUTATION:
            seed = seed_mutate(seed, move.index)
        else:
            seed = seed_permute(seed, move.perm)
    return seed


def replay(seed: Seed) -> ExMat:
    """Recompute the current exchange matrix from the initial one and the history."""
    return apply_moves_exmat(seed.initial, seed.history)


# ---------------------------------------------------------------------------
# Integer kernels
# ---------------------------------------------------------------------------


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x·a + y·b = g = gcd(a, b) ≥ 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_x, x = x, old_x - quotient * x
        old_y, y = y, old_y - quotient * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _column_echelon(matrix: list[list[int]]) -> tuple[list[list[int]], list[list[int]], int]:
    """Unimodular column reduction A·U = H with H in column echelon form.

    Returns:
        (H, U, rank) where the last n − rank columns of H vanish
    """
    rows = len(matrix)
    n = len(matrix[0]) if rows else 0
    a = [list(row) for row in matrix]
    u = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(target: list[list[int]], p: int, c: int, x: int, y: int, s: int, t: int):
        for row in target:
            vp, vc = row[p], row[c]
            row[p], row[c] = x * vp + y * vc, s * vp + t * vc

    pivot = 0
    for r in range(rows):
        if pivot >= n:
            break
        for c in range(pivot + 1, n):
            if a[r][c] == 0:
                continue
            g, x, y = _egcd(a[r][pivot], a[r][c])
            s, t = -a[r][c] // g, a[r][pivot] // g
            # [[x, s], [y, t]] has determinant x·t − y·s = 1
            combine(a, pivot, c, x, y, s, t)
            combine(u, pivot, c, x, y, s, t)
        if a[r][pivot] != 0:
            pivot += 1
    return a, u, pivot


def _hermite_rows(basis: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of an integer basis (positive pivots, reduced above)."""
    rows = [list(r) for r in basis]
    if not rows:
        return rows
    n = len(rows[0])
    pivot_row = 0
    for col in range(n):
        if pivot_row >= len(rows):
            break
        for r in range(pivot_row + 1, len(rows)):
            if rows[r][col] == 0:
                continue
            g, x, y = _egcd(rows[pivot_row][col], rows[r][col])
            s, t = -rows[r][col] // g, rows[pivot_row][col] // g
            top, bottom = rows[pivot_row], rows[r]
            rows[pivot_row] = [x * p + y * q for p, q in zip(top, bottom)]
            rows[r] = [s * p + t * q for p, q in zip(top, bottom)]
        lead = rows[pivot_row][col]
        if lead == 0:
            continue
        if lead < 0:
            rows[pivot_row] = [-v for v in rows[pivot_row]]
            lead = -lead
        for r in range(pivot_row):
            factor = rows[r][col] // lead
            if factor:
                rows[r] = [p - factor * q for p, q in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
    return rows


def kernel_vectors(e: ExMat) -> list[ThetaVec]:
    """A ℤ-basis of ker ε by exact integer column elimination.

    Returns:
        Kernel vectors in row Hermite normal form; empty for a trivial kernel
    """
    n = e.n
    if n == 0:
        return []
    _, u, rank = _column_echelon(e.tolist())
    basis = [[u[i][c] for i in range(n)] for c in range(rank, n)]
    basis = _hermite_rows(basis)
    vectors = [ThetaVec(tuple(v)) for v in basis]
    for theta in vectors:
        if not theta.in_kernel(e):
            raise ArithmeticError(f"Kernel vector {theta.coefficients} failed verification")
    logger.debug(f"ker ε has rank {len(vectors)} for n={n}")
    return vectors


def random_exmat(rng: np.random.Generator, n: int, bound: int = 2) -> ExMat:
    """Random skew-symmetric matrix with entries in [-bound, bound]."""
    upper = np.triu(rng.integers(-bound, bound + 1, size=(n, n)), k=1)
    return ExMat.from_array(upper - upper.T)
