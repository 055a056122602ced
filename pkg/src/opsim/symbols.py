"""Heisenberg symbols of the operators x_i, y_i and their doubled versions.

On L²(ℝ^I, dt) with D_i = i∂/∂t_i we have [t_i, D_j] = −iδ_ij, and
x_i = −πD_i, y_i = Σ_j ε_ij t_j realise [x_i, y_j] = πiε_ij.
"""

from __future__ import annotations

import sympy

from ..cluster import ExMat
from ..errors import UsageError
from ..gencomplex import Lambda
from .models import HBAR, HSymbol, ZBlockOp


def hsymbol_bracket(a: HSymbol, b: HSymbol) -> sympy.Expr:
    """[a, b] = −i Σ_i (a_i b'_i − b_i a'_i); constants are central."""
    if a.rank != b.rank:
        raise UsageError(f"Symbols of rank {a.rank} and {b.rank} have no common context")
    total = sum((x * y2 - y * x2 for x, y, x2, y2 in zip(a.a, a.b, b.a, b.b)), sympy.Integer(0))
    return sympy.simplify(-sympy.I * total)


def x_symbol(exmat: ExMat, i: int) -> HSymbol:
    """x_i = −πD_i."""
    n = exmat.n
    return HSymbol.momentum(n, i).scale(-sympy.pi)


def y_symbol(exmat: ExMat, i: int) -> HSymbol:
    """y_i = Σ_j ε_ij t_j."""
    return HSymbol((exmat[i, j] for j in range(exmat.n)), (0,) * exmat.n)


def x_ring(exmat: ExMat, i: int, hbar=HBAR) -> HSymbol:
    """x̊_i = x_i + ℏy_i, with [x̊_i, x̊_j] = 2πiℏε_ij."""
    return x_symbol(exmat, i) + y_symbol(exmat, i).scale(hbar)


def x_tilde(exmat: ExMat, i: int, hbar=HBAR) -> HSymbol:
    """x̃_i = x_i − ℏy_i, with [x̃_i, x̃_j] = −2πiℏε_ij and [x̊_i, x̃_j] = 0."""
    return x_symbol(exmat, i) - y_symbol(exmat, i).scale(hbar)


def bracket_matrix(symbols: list[HSymbol]) -> sympy.Matrix:
    """All pairwise brackets [s_i, s_j]."""
    n = len(symbols)
    return sympy.Matrix(n, n, lambda i, j: hsymbol_bracket(symbols[i], symbols[j]))


def z_operator(exmat: ExMat, i: int, lam: Lambda | int, sign: int = 1, hbar=HBAR) -> ZBlockOp:
    """z_i^{(ε)} = Id ⊗ x_i + ε·ℓ̂·ℏ·(Id ⊗ y_i) for ε = sign."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be ±1, got {sign}")
    return ZBlockOp(x_symbol(exmat, i), y_symbol(exmat, i).scale(sign * hbar), Lambda.parse(lam))


def zblock_commutator(a: ZBlockOp, b: ZBlockOp) -> sympy.Matrix:
    """[A, B] as a 2 × 2 scalar matrix.

    With A = Id⊗X + ℓ̂⊗Y and B = Id⊗X' + ℓ̂⊗Y', the blocks commute among
    themselves, so [A, B] = Id⊗[X,X'] + ℓ̂⊗([X,Y'] + [Y,X']) + ℓ̂²⊗[Y,Y'].
    """
    if a.lam is not b.lam:
        raise UsageError(f"Block operators carry different Λ: {a.lam.value} vs {b.lam.value}")
    ell = sympy.Matrix([[0, 1], [-a.lam.value, 0]])
    identity_term = hsymbol_bracket(a.identity_part, b.identity_part)
    ell_term = hsymbol_bracket(a.identity_part, b.ell_part) + hsymbol_bracket(a.ell_part, b.identity_part)
    square_term = hsymbol_bracket(a.ell_part, b.ell_part)
    result = sympy.eye(2) * identity_term + ell * ell_term + ell * ell * square_term
    return result.applyfunc(sympy.simplify)


def zblock_expected(exmat: ExMat, i: int, j: int, lam: Lambda | int, sign: int = 1, hbar=HBAR) -> sympy.Matrix:
    """2πiℏ·ε·ε_ij·ℓ̂."""
    value = Lambda.parse(lam).value
    ell = sympy.Matrix([[0, 1], [-value, 0]])
    return ell * (2 * sympy.pi * sympy.I * hbar * sign * exmat[i, j])
