"""Quantum tori and the skew field elements built from them.

An element is a finite sum of words c·(1+B_1)^{s_1}⋯(1+B_m)^{s_m}·X^a where
each B_j is again an element, s_j = ±1, and X^a is the Weyl-ordered monomial
with X^a X^b = q^{⟨a,b⟩} X^{a+b}. Words are normalised by moving monomials to
the right: X^a (1+B)^s = (1 + X^a B X^{-a})^s X^a. A factor whose base is a
single monomial c·X^b keeps b positive-leading, so (1 + cX^b)^s with b
negative-leading is rewritten as (cX^b)^s (1 + c^{-1}X^{-b})^s.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy.polys.fields import FracElement

from ..cluster import ExMat
from ..errors import UsageError
from ..gencomplex import Lambda
from .coeff import COEFF_FIELD, ONE, Q, QS, ZERO, coerce
from .coeff import substitute as substitute_coeff

logger = logging.getLogger(__name__)

Exponent = tuple[int, ...]


def _as_form(matrix) -> tuple[tuple[int, ...], ...]:
    array = np.asarray(matrix, dtype=np.int64)
    return tuple(tuple(int(v) for v in row) for row in array)


@dataclass(frozen=True)
class QContext:
    """Generators X_1..X_n with X_i X_j = q^{2B_ij} q*^{2B*_ij} X_j X_i.

    Attributes:
        form: Integer skew form B paired with q
        star_form: Integer skew form B* paired with q* (zero when absent)
        labels: Generator names used for printing
        lam: Λ of a doubled torus, None for a plain one
        blocks: Block names of a doubled torus, in generator order
    """

    form: tuple[tuple[int, ...], ...]
    star_form: tuple[tuple[int, ...], ...] = ()
    labels: tuple[str, ...] = ()
    lam: Lambda | None = None
    blocks: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.form)
        if not self.star_form:
            object.__setattr__(self, "star_form", tuple((0,) * n for _ in range(n)))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"X{i + 1}" for i in range(n)))
        if len(self.labels) != n or len(self.star_form) != n:
            raise UsageError("Context labels and forms must match the rank")
        for form in (self.form, self.star_form):
            array = np.asarray(form, dtype=np.int64).reshape(n, n)
            if not np.array_equal(array, -array.T):
                raise UsageError("Quantum torus forms must be skew-symmetric")

    @classmethod
    def from_exmat(cls, exmat: ExMat) -> QContext:
        return cls(_as_form(exmat.array))

    @classmethod
    def doubled(cls, exmat: ExMat, lam: Lambda) -> QContext:
        """The torus of X^q_Λ: blocks (+, −) over q, plus (+*, −*) over q* when Λ = 0."""
        eps = exmat.array
        n = exmat.n
        zero = np.zeros_like(eps)
        if lam is Lambda.ZERO:
            blocks = ("+", "-", "+*", "-*")
            form = np.block([[eps, zero, zero, zero], [zero, -eps, zero, zero],
                             [zero, zero, zero, zero], [zero, zero, zero, zero]])
            star = np.block([[zero, zero, zero, zero], [zero, zero, zero, zero],
                             [zero, zero, eps, zero], [zero, zero, zero, -eps]])
        else:
            blocks = ("+", "-")
            form = np.block([[eps, zero], [zero, -eps]])
            star = np.zeros_like(form)
        labels = tuple(f"X{i + 1}{block}" for block in blocks for i in range(n))
        return cls(_as_form(form), _as_form(star), labels, lam, blocks)

    @property
    def n(self) -> int:
        return len(self.form)

    @property
    def rank(self) -> int:
        """Rank of the underlying seed (n divided by the number of blocks)."""
        return self.n // max(1, len(self.blocks))

    def block_offset(self, block: str) -> int:
        if block not in self.blocks:
            raise UsageError(f"Unknown block {block!r}; available: {list(self.blocks)}")
        return self.blocks.index(block) * self.rank

    def pairing(self, a: Exponent, b: Exponent) -> tuple[int, int]:
        p = ps = 0
        for i, ai in enumerate(a):
            if not ai:
                continue
            row, srow = self.form[i], self.star_form[i]
            for j, bj in enumerate(b):
                if bj:
                    p += ai * row[j] * bj
                    ps += ai * srow[j] * bj
        return p, ps

    def phase(self, a: Exponent, b: Exponent, factor: int = 1) -> FracElement:
        """q^{factor·⟨a,b⟩} q*^{factor·⟨a,b⟩*}."""
        p, ps = self.pairing(a, b)
        return Q ** (factor * p) * QS ** (factor * ps)

    def ordering_phase(self, a: Exponent) -> FracElement:
        """Coefficient c with X^a = c·X_1^{a_1}⋯X_n^{a_n}."""
        p = ps = 0
        for i in range(self.n):
            for j in range(i + 1, self.n):
                p += self.form[i][j] * a[i] * a[j]
                ps += self.star_form[i][j] * a[i] * a[j]
        return Q ** (-p) * QS ** (-ps)

    def commute(self, left: frozenset[Exponent], right: frozenset[Exponent]) -> bool:
        return all(self.pairing(a, b) == (0, 0) for a in left for b in right)

    def unit(self, i: int) -> Exponent:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def zero_exponent(self) -> Exponent:
        return (0,) * self.n


@dataclass(frozen=True)
class Factor:
    """(1 + base)^sign with sign = ±1."""

    base: QElem
    sign: int

    def conjugate(self, a: Exponent) -> Factor:
        return Factor(self.base.conjugate(a), self.sign)

    def __str__(self) -> str:
        return f"(1+{self.base})^{self.sign}"


@dataclass(frozen=True)
class Word:
    factors: tuple[Factor, ...]
    exponent: Exponent

    def __str__(self) -> str:
        parts = [str(f) for f in self.factors]
        if any(self.exponent):
            parts.append("X^(" + ",".join(str(e) for e in self.exponent) + ")")
        return "*".join(parts) or "1"


def _add_exponents(a: Exponent, b: Exponent, sign: int = 1) -> Exponent:
    return tuple(x + sign * y for x, y in zip(a, b))


def _negative_leading(b: Exponent) -> bool:
    for e in b:
        if e:
            return e < 0
    return False


def _extract_monomials(
    ctx: QContext, factors: Sequence[Factor]
) -> tuple[FracElement, list[Factor], Exponent]:
    """Rewrite (1 + cX^b)^s with b negative-leading as (cX^b)^s (1 + c^{-1}X^{-b})^s.

    The extracted monomials are moved to the right of all factors; the
    returned coefficient and exponent describe their product.
    """
    coeff = ONE
    pending = ctx.zero_exponent()
    out: list[Factor] = []
    for factor in factors:
        factor = factor.conjugate(pending)
        single = factor.base.single_word()
        if single and not single[1].factors and _negative_leading(single[1].exponent):
            c, word = single
            s = factor.sign
            b = tuple(s * e for e in word.exponent)
            flipped = QElem.monomial(ctx, tuple(-e for e in word.exponent), 1 / c)
            out.append(Factor(flipped, s))
            coeff = coeff * c**s * ctx.phase(b, pending)
            pending = _add_exponents(b, pending)
        else:
            out.append(factor)
    return coeff, out, pending


def _normalize_factors(ctx: QContext, factors: Sequence[Factor]) -> tuple[Factor, ...]:
    """Cancel adjacent inverse pairs and sort adjacent commuting factors."""
    current = list(factors)
    changed = True
    while changed:
        changed = False
        stack: list[Factor] = []
        for factor in current:
            if stack and stack[-1].base == factor.base and stack[-1].sign == -factor.sign:
                stack.pop()
                changed = True
            else:
                stack.append(factor)
        current = stack
        for i in range(len(current) - 1):
            left, right = current[i], current[i + 1]
            if str(left) > str(right) and ctx.commute(left.base.support, right.base.support):
                current[i], current[i + 1] = right, left
                changed = True
    return tuple(current)


def _normalize_word(
    ctx: QContext, factors: Sequence[Factor], exponent: Exponent
) -> tuple[FracElement, Word]:
    """Normal form of F_1⋯F_m·X^a as a coefficient and a word."""
    coeff, factors, pending = _extract_monomials(ctx, factors)
    coeff = coeff * ctx.phase(pending, exponent)
    return coeff, Word(_normalize_factors(ctx, factors), _add_exponents(pending, exponent))


class QElem:
    """An element of the skew field of fractions of a quantum torus."""

    def __init__(self, ctx: QContext, terms: dict[Word, FracElement] | None = None):
        self.ctx = ctx
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    # -- construction -----------------------------------------------------

    @classmethod
    def zero(cls, ctx: QContext) -> QElem:
        return cls(ctx)

    @classmethod
    def scalar(cls, ctx: QContext, c) -> QElem:
        return cls(ctx, {Word((), ctx.zero_exponent()): coerce(c)})

    @classmethod
    def one(cls, ctx: QContext) -> QElem:
        return cls.scalar(ctx, ONE)

    @classmethod
    def monomial(cls, ctx: QContext, exponent: Sequence[int], coeff=ONE) -> QElem:
        exponent = tuple(int(e) for e in exponent)
        if len(exponent) != ctx.n:
            raise UsageError(f"Exponent has length {len(exponent)}, expected {ctx.n}")
        return cls(ctx, {Word((), exponent): coerce(coeff)})

    @classmethod
    def generator(cls, ctx: QContext, i: int) -> QElem:
        return cls.monomial(ctx, ctx.unit(i))

    @classmethod
    def ordered_monomial(cls, ctx: QContext, exponent: Sequence[int]) -> QElem:
        """The ordered product X_1^{a_1}⋯X_n^{a_n}."""
        exponent = tuple(int(e) for e in exponent)
        return cls.monomial(ctx, exponent, 1 / ctx.ordering_phase(exponent))

    @classmethod
    def binomial(cls, base: QElem, sign: int) -> QElem:
        """(1 + base)^sign, folded to a scalar when base is one."""
        ctx = base.ctx
        if sign not in (1, -1):
            raise UsageError(f"Binomial exponent must be ±1, got {sign}")
        if base.is_zero():
            return cls.one(ctx)
        scalar = base.as_scalar()
        if scalar is not None:
            value = ONE + scalar
            if not value and sign < 0:
                raise ZeroDivisionError("(1 + base)^-1 with base = -1")
            return cls.scalar(ctx, value**sign)
        coeff, word = _normalize_word(ctx, [Factor(base, sign)], ctx.zero_exponent())
        return cls(ctx, {word: coeff})

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def as_scalar(self) -> FracElement | None:
        if not self.terms:
            return ZERO
        if len(self.terms) == 1:
            (word, c), = self.terms.items()
            if not word.factors and not any(word.exponent):
                return c
        return None

    def single_word(self) -> tuple[FracElement, Word] | None:
        if len(self.terms) == 1:
            (word, c), = self.terms.items()
            return c, word
        return None

    @cached_property
    def support(self) -> frozenset[Exponent]:
        """Every exponent vector occurring anywhere in the element."""
        exponents = set()
        for word in self.terms:
            exponents.add(word.exponent)
            for factor in word.factors:
                exponents |= factor.base.support
        return frozenset(exponents)

    def _check(self, other: QElem) -> None:
        if other.ctx != self.ctx:
            raise UsageError("Elements belong to different quantum tori")

    def _lift(self, other) -> QElem:
        if isinstance(other, QElem):
            self._check(other)
            return other
        if isinstance(other, (int, FracElement)) or hasattr(other, "numerator"):
            return QElem.scalar(self.ctx, other)
        return NotImplemented

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> QElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for word, c in other.terms.items():
            terms[word] = terms.get(word, ZERO) + c
        return QElem(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self) -> QElem:
        return QElem(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> QElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> QElem:
        return (-self) + other

    def __mul__(self, other) -> QElem:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms: dict[Word, FracElement] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                coeff, word = _word_product(self.ctx, w1, w2)
                terms[word] = terms.get(word, ZERO) + c1 * c2 * coeff
        return QElem(self.ctx, terms)

    def __rmul__(self, other) -> QElem:
        lifted = self._lift(other)
        if lifted is NotImplemented:
            return lifted
        return lifted * self

    def inverse(self) -> QElem:
        """Two-sided inverse; a sum of several words is inverted as (1 + (x−1))^{-1}."""
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero")
        single = self.single_word()
        if single is None:
            return QElem.binomial(self - 1, -1)
        c, word = single
        neg = tuple(-e for e in word.exponent)
        factors = [Factor(f.base, -f.sign).conjugate(neg) for f in reversed(word.factors)]
        coeff, normal = _normalize_word(self.ctx, factors, neg)
        return QElem(self.ctx, {normal: coeff / c})

    def __pow__(self, exponent: int) -> QElem:
        base = self if exponent >= 0 else self.inverse()
        result = QElem.one(self.ctx)
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def conjugate(self, a: Exponent) -> QElem:
        """X^a · self · X^{-a}."""
        if not any(a):
            return self
        terms = {}
        for word, c in self.terms.items():
            factors = tuple(f.conjugate(a) for f in word.factors)
            terms[Word(factors, word.exponent)] = c * self.ctx.phase(a, word.exponent, 2)
        return QElem(self.ctx, terms)

    def map_coefficients(self, func: Callable[[FracElement], FracElement]) -> QElem:
        terms = {}
        for word, c in self.terms.items():
            factors = tuple(Factor(f.base.map_coefficients(func), f.sign) for f in word.factors)
            terms[Word(factors, word.exponent)] = func(c)
        return QElem(self.ctx, terms)

    # -- comparison and rendering ----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QElem.scalar(self.ctx, other)
        if not isinstance(other, QElem):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    @cached_property
    def _hash(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word in sorted(self.terms, key=str):
            c = self.terms[word]
            body = str(word)
            if c == ONE:
                parts.append(body)
            else:
                parts.append(f"({c.as_expr()})" + ("" if body == "1" else f"*{body}"))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"QElem({self})"


def q_mul(a: QElem, b: QElem) -> QElem:
    """Product in the quantum torus; both factors must share a context."""
    if a.ctx != b.ctx:
        raise UsageError("Elements belong to different quantum tori")
    return a * b


def _word_product(ctx: QContext, w1: Word, w2: Word) -> tuple[FracElement, Word]:
    coeff = ctx.phase(w1.exponent, w2.exponent)
    moved = [f.conjugate(w1.exponent) for f in w2.factors]
    exponent = _add_exponents(w1.exponent, w2.exponent)
    extra, word = _normalize_word(ctx, list(w1.factors) + moved, exponent)
    return coeff * extra, word


def substitute(elem: QElem, images: Sequence[QElem]) -> QElem:
    """Apply the homomorphism X_i ↦ images[i] to elem.

    Images must satisfy the relations of elem's torus; the result lives in
    the torus of the images.
    """
    images = list(images)
    if len(images) != elem.ctx.n:
        raise UsageError(f"Expected {elem.ctx.n} images, got {len(images)}")
    target = images[0].ctx
    powers: dict[tuple[int, int], QElem] = {}

    def power(i: int, e: int) -> QElem:
        if (i, e) not in powers:
            powers[(i, e)] = images[i] ** e
        return powers[(i, e)]

    result = QElem.zero(target)
    for word, c in elem.terms.items():
        term = QElem.scalar(target, c)
        for factor in word.factors:
            term = term * QElem.binomial(substitute(factor.base, images), factor.sign)
        mono = QElem.scalar(target, elem.ctx.ordering_phase(word.exponent))
        for i, e in enumerate(word.exponent):
            if e:
                mono = mono * power(i, e)
        result = result + term * mono
    return result


def anti_automorphism(
    elem: QElem,
    generator_map: Sequence[int],
    coeff_map: Callable[[FracElement], FracElement],
) -> QElem:
    """The anti-automorphism sending X^a to X^{g(a)} and c to coeff_map(c).

    Valid when coeff_map negates the pairing between the permuted monomials,
    which is what makes the Weyl monomials map to Weyl monomials.
    """
    ctx = elem.ctx

    def move(a: Exponent) -> Exponent:
        image = [0] * ctx.n
        for i, e in enumerate(a):
            image[generator_map[i]] += e
        return tuple(image)

    result = QElem.zero(ctx)
    for word, c in elem.terms.items():
        term = QElem.monomial(ctx, move(word.exponent), coeff_map(c))
        for factor in reversed(word.factors):
            base = anti_automorphism(factor.base, generator_map, coeff_map)
            term = term * QElem.binomial(base, factor.sign)
        result = result + term
    return result


def star(elem: QElem) -> QElem:
    """The involutive anti-automorphism * of a doubled torus.

    Λ = −1 fixes generators and sends q to q^{-1}. Λ = +1 swaps the (+) and
    (−) blocks and fixes q. Λ = 0 swaps each block with its starred copy and
    exchanges q with q*^{-1}.
    """
    ctx = elem.ctx
    if ctx.lam is None:
        raise UsageError("The * structure is defined on doubled tori only")
    n = ctx.rank
    if ctx.lam is Lambda.NEGATIVE:
        generator_map = list(range(ctx.n))

        def coeff_map(c):
            return _field_map(c, 1 / Q, QS)
    elif ctx.lam is Lambda.POSITIVE:
        generator_map = [(i + n) % (2 * n) for i in range(2 * n)]

        def coeff_map(c):
            return c
    else:
        generator_map = [(i + 2 * n) % (4 * n) for i in range(4 * n)]

        def coeff_map(c):
            return _field_map(c, 1 / QS, 1 / Q)
    return anti_automorphism(elem, generator_map, coeff_map)


def _field_map(c: FracElement, q_image: FracElement, qs_image: FracElement) -> FracElement:
    return COEFF_FIELD(substitute_coeff(c, q_image, qs_image))
