"""Quantum cluster mutation μ_k^q = μ♯_k ∘ μ'_k and its Λ-doubled versions."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy.polys.fields import FracElement

from ..cluster import ExMat, Move, MoveKind, Seed, apply_move_exmat, invert_permutation
from ..gencomplex import Lambda
from .coeff import Q, QS
from .torus import QContext, QElem, substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuantumMap:
    """Images of the target seed's generators in the source torus.

    Attributes:
        source: Torus the images live in
        target: Exchange matrix of the seed whose generators are mapped
        images: images[i] is the image of X'_i
    """

    source: QContext
    target: ExMat
    images: tuple[QElem, ...]

    def is_identity(self) -> bool:
        return all(img == QElem.generator(self.source, i) for i, img in enumerate(self.images))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _check_index(exmat: ExMat, k: int) -> None:
    if not 0 <= k < exmat.n:
        raise IndexError(f"Mutation index {k} out of range for rank {exmat.n}")


def _prime_images(ctx: QContext, exmat: ExMat, k: int, offset: int) -> list[QElem]:
    n = exmat.n
    images = []
    for i in range(n):
        exponent = [0] * ctx.n
        if i == k:
            exponent[offset + k] = -1
        else:
            exponent[offset + i] = 1
            exponent[offset + k] = max(exmat[i, k], 0)
        images.append(QElem.monomial(ctx, exponent))
    return images


def _sharp_images(
    ctx: QContext, exmat: ExMat, k: int, offset: int, symbol: FracElement
) -> list[QElem]:
    xk = QElem.generator(ctx, offset + k)
    images = []
    for i in range(exmat.n):
        image = QElem.generator(ctx, offset + i)
        e = exmat[i, k]
        s = _sign(e)
        for r in range(1, abs(e) + 1):
            image = image * QElem.binomial(xk * symbol ** (-s * (2 * r - 1)), -s)
        images.append(image)
    return images


def mu_prime(seed: Seed, k: int) -> list[QElem]:
    """The monomial part: X'_k ↦ X^{-e_k}, X'_i ↦ X^{e_i + [ε_ik]_+ e_k}."""
    _check_index(seed.exmat, k)
    ctx = QContext.from_exmat(seed.exmat)
    return _prime_images(ctx, seed.exmat, k, 0)


def mu_sharp(seed: Seed, k: int) -> list[QElem]:
    """The automorphism X_i ↦ X_i ∏_{r=1}^{|ε_ik|} (1 + q^{-sgn(ε_ik)(2r−1)} X_k)^{-sgn(ε_ik)}."""
    _check_index(seed.exmat, k)
    ctx = QContext.from_exmat(seed.exmat)
    return _sharp_images(ctx, seed.exmat, k, 0, Q)


def mu_quantum(seed: Seed, k: int) -> QuantumMap:
    """μ_k^q: images of the mutated seed's generators in Frac(T_Γ)."""
    _check_index(seed.exmat, k)
    ctx = QContext.from_exmat(seed.exmat)
    sharp = _sharp_images(ctx, seed.exmat, k, 0, Q)
    images = [substitute(p, sharp) for p in _prime_images(ctx, seed.exmat, k, 0)]
    return QuantumMap(ctx, apply_move_exmat(seed.exmat, Move.mutation(k)), tuple(images))


_BLOCK_SYMBOLS = {"+": (Q, 1), "-": (Q, -1), "+*": (QS, 1), "-*": (QS, -1)}


def mu_quantum_lambda(seed: Seed, k: int, lam: Lambda, block: str = "+") -> list[QElem]:
    """Mutation of the Λ-doubled quantum torus on one block.

    The (+) block mutates with q_Λ, the (−) block with q_Λ^{-1}; for Λ = 0 the
    starred blocks use q*_Λ. The returned images are those of the block's
    generators, in the doubled torus; other blocks are fixed.
    """
    _check_index(seed.exmat, k)
    ctx = QContext.doubled(seed.exmat, lam)
    offset = ctx.block_offset(block)
    symbol, power = _BLOCK_SYMBOLS[block]
    sharp_block = _sharp_images(ctx, seed.exmat, k, offset, symbol**power)
    sharp = [QElem.generator(ctx, i) for i in range(ctx.n)]
    sharp[offset : offset + seed.exmat.n] = sharp_block
    return [substitute(p, sharp) for p in _prime_images(ctx, seed.exmat, k, offset)]


def doubled_mutation(seed: Seed, k: int, lam: Lambda) -> QuantumMap:
    """μ_k on every block of the doubled torus at once."""
    ctx = QContext.doubled(seed.exmat, lam)
    images: list[QElem] = []
    for block in ctx.blocks:
        images.extend(mu_quantum_lambda(seed, k, lam, block))
    return QuantumMap(ctx, apply_move_exmat(seed.exmat, Move.mutation(k)), tuple(images))


def permutation_map(seed: Seed, sigma: tuple[int, ...]) -> QuantumMap:
    """X'_j ↦ X_{σ^{-1}(j)}."""
    ctx = QContext.from_exmat(seed.exmat)
    inverse = invert_permutation(sigma)
    images = tuple(QElem.generator(ctx, inverse[j]) for j in range(seed.rank))
    return QuantumMap(ctx, apply_move_exmat(seed.exmat, Move.permutation(sigma)), images)


def move_map(exmat: ExMat, move: Move) -> QuantumMap:
    seed = Seed(exmat)
    if move.kind is MoveKind.MUTATION:
        return mu_quantum(seed, move.index)
    return permutation_map(seed, move.perm)


def compose_quantum(seed: Seed, moves: list[Move]) -> QuantumMap:
    """Images of the final seed's generators in the initial torus.

    Moves are in time order; each step's images are pulled back through the
    images accumulated so far.
    """
    ctx = QContext.from_exmat(seed.exmat)
    images = [QElem.generator(ctx, i) for i in range(seed.rank)]
    exmat = seed.exmat
    for move in moves:
        step = move_map(exmat, move)
        images = [substitute(img, images) for img in step.images]
        exmat = step.target
        logger.debug(f"Applied {move}: {len(images)} images")
    return QuantumMap(ctx, exmat, tuple(images))
