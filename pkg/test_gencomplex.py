"""
Generalized Complex Number Tests

Ring arithmetic, matrix realisations, exp/log and the admissible functional
calculus on R_Λ for Λ ∈ {−1, 0, +1}.
"""

import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest

LAMBDAS = (-1, 0, 1)


def _random_gc(rng: random.Random, lam: int):
    from src.gencomplex import GC

    return GC(Fraction(rng.randint(-9, 9), rng.randint(1, 5)), Fraction(rng.randint(-9, 9), rng.randint(1, 5)), lam)


def test_multiplication_examples():
    """Multiplication rule on the documented examples."""
    print("=" * 60)
    print("TEST 1: gc_mul examples")
    print("=" * 60)

    from src.gencomplex import GC, gc_mul
    from src.errors import UsageError

    assert gc_mul(GC(0, 1, 1), GC(0, 1, 1)) == GC(-1, 0, 1)
    print("[PASS] Λ=+1: ℓ·ℓ = −1")

    assert gc_mul(GC(1, 1, -1), GC(1, -1, -1)) == GC(0, 0, -1)
    print("[PASS] Λ=−1: (1+ℓ)(1−ℓ) = 0, a zero divisor")

    assert gc_mul(GC(2, 3, 0), GC(5, 7, 0)) == GC(10, 29, 0)
    print("[PASS] Λ=0: (2+3ℓ)(5+7ℓ) = 10 + 29ℓ")

    with pytest.raises(UsageError):
        gc_mul(GC(1, 1, 0), GC(1, 1, 1))
    print("[PASS] Mismatched tags raise UsageError")


def test_ring_axioms_exact():
    """Associativity, commutativity and distributivity hold exactly on rationals."""
    print("\n" + "=" * 60)
    print("TEST 2: Ring axioms on 1000 random exact triples")
    print("=" * 60)

    rng = random.Random(0)
    for _ in range(1000):
        lam = rng.choice(LAMBDAS)
        a, b, c = (_random_gc(rng, lam) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c

    print("[PASS] Exact ring axioms hold for all three Λ")


def test_embedding():
    """gc_embed gives [[x, y], [−Λy, x]] and is multiplicative."""
    print("\n" + "=" * 60)
    print("TEST 3: Matrix embedding")
    print("=" * 60)

    from src.gencomplex import GC, ell_matrix, gc_embed, gc_mul

    assert gc_embed(GC(1, 2, 0)).tolist() == [[1, 2], [0, 1]]
    assert gc_embed(GC(0, 1, 1)).tolist() == [[0, 1], [-1, 0]]
    assert gc_embed(GC(3, 0, -1)).tolist() == [[3, 0], [0, 3]]
    print("[PASS] Documented embeddings")

    rng = random.Random(1)
    for _ in range(200):
        lam = rng.choice(LAMBDAS)
        a, b = _random_gc(rng, lam), _random_gc(rng, lam)
        assert (gc_embed(gc_mul(a, b)) == gc_embed(a).dot(gc_embed(b))).all()
    print("[PASS] embed(a·b) = embed(a)·embed(b) exactly")

    for lam in LAMBDAS:
        ell = ell_matrix(lam)
        assert np.allclose(ell @ ell, -lam * np.eye(2))
    print("[PASS] ℓ̂² = −Λ")


def test_diagonalize():
    """Eigen-scalars for Λ = ±1; Λ = 0 is a Jordan block."""
    print("\n" + "=" * 60)
    print("TEST 4: Diagonalisation")
    print("=" * 60)

    from src.errors import UnsupportedCaseError
    from src.gencomplex import GC, gc_diagonalize

    assert gc_diagonalize(GC(1, 1, -1)) == (2, 0)
    assert gc_diagonalize(GC(0, 1, 1)) == (1j, -1j)
    with pytest.raises(UnsupportedCaseError):
        gc_diagonalize(GC(1, 1, 0))

    print("[PASS] (2, 0), (i, −i) and the Λ=0 refusal")


def test_exp_log():
    """gc_exp closed forms and gc_log as its inverse."""
    print("\n" + "=" * 60)
    print("TEST 5: Exponential and logarithm")
    print("=" * 60)

    from src.errors import DomainError
    from src.gencomplex import GC, gc_close, gc_exp, gc_log

    assert gc_close(gc_exp(GC(0, 5, 0)), GC(1.0, 5.0, 0))
    assert gc_close(gc_exp(GC(0, math.pi, 1)), GC(-1.0, 0.0, 1))
    assert gc_close(gc_exp(GC(0, 1, -1)), GC(math.cosh(1), math.sinh(1), -1))
    print("[PASS] e^{5ℓ}, e^{πℓ}, e^{ℓ} for Λ = 0, +1, −1")

    assert gc_close(gc_log(GC(math.e, math.e, 0)), GC(1.0, 1.0, 0))
    assert gc_close(gc_log(GC(math.cosh(1), math.sinh(1), -1)), GC(0.0, 1.0, -1))
    for lam in LAMBDAS:
        assert gc_close(gc_log(GC(1, 0, lam)), GC(0.0, 0.0, lam))
    print("[PASS] Documented logarithms")

    # Principal branch: log(−1) has imaginary part π, not −π
    assert gc_log(GC(-1, 0, 1)).im == pytest.approx(math.pi)
    print("[PASS] Λ=+1 principal branch in (−π, π]")

    rng = np.random.default_rng(2)
    for _ in range(200):
        lam = int(rng.choice(LAMBDAS))
        a = GC(float(rng.uniform(-2, 2)), float(rng.uniform(-1.5, 1.5)), lam)
        b = GC(float(rng.uniform(-2, 2)), float(rng.uniform(-1.5, 1.5)), lam)
        assert gc_close(gc_exp(a + b), gc_exp(a) * gc_exp(b), 1e-12)
        assert gc_close(gc_log(gc_exp(a)), a, 1e-12)
    print("[PASS] exp(a+b) = exp(a)exp(b) and log∘exp = id")

    for bad in (GC(1, 2, -1), GC(0, 0, 1), GC(-1, 3, 0)):
        with pytest.raises(DomainError):
            gc_log(bad)
    print("[PASS] Points outside R_Λ^+ raise DomainError")


def test_inverse_and_power():
    """Units invert; zero divisors raise an EvaluationError carrying the argument."""
    print("\n" + "=" * 60)
    print("TEST 6: Inverses and powers")
    print("=" * 60)

    from src.errors import EvaluationError
    from src.gencomplex import GC, gc_inv, gc_pow

    a = GC(2, 3, 1)
    assert a * gc_inv(a) == GC.one(1)
    assert gc_pow(a, 3) == a * a * a
    assert gc_pow(a, -2) * gc_pow(a, 2) == GC.one(1)
    print("[PASS] Inverse and integer powers are exact")

    zero_divisor = GC(1, 1, -1)
    with pytest.raises(EvaluationError) as info:
        gc_inv(zero_divisor)
    assert info.value.argument == zero_divisor
    print("[PASS] 1+ℓ is not a unit of R_−1")


def test_admissible_calculus():
    """apply_admissible recombines branches and matches gc_exp for f = exp."""
    print("\n" + "=" * 60)
    print("TEST 7: Admissible functional calculus")
    print("=" * 60)

    from src.errors import EvaluationError
    from src.gencomplex import GC, GCC, AdmissibleFn, apply_admissible, gc_exp, gcc_close

    exp_fns = {
        lam: AdmissibleFn.from_analytic(lam, cmath.exp, cmath.exp if lam == 0 else None, name="exp")
        for lam in LAMBDAS
    }
    assert gcc_close(apply_admissible(exp_fns[0], GC(0, 3, 0)), GCC(1, 3, 0))
    assert gcc_close(apply_admissible(exp_fns[1], GC(0, math.pi / 2, 1)), GCC(0, 1, 1))
    print("[PASS] exp at (0, 3) for Λ=0 and (0, π/2) for Λ=+1")

    square = AdmissibleFn.from_analytic(0, lambda x: x * x, lambda x: 2 * x, name="square")
    assert gcc_close(apply_admissible(square, GC(3, 2, 0)), GCC(9, 12, 0))
    print("[PASS] (3 + 2ℓ)² = 9 + 12ℓ through f₀ and f₀′")

    rng = np.random.default_rng(3)
    for _ in range(100):
        lam = int(rng.choice(LAMBDAS))
        a = GC(float(rng.uniform(-2, 2)), float(rng.uniform(-1, 1)), lam)
        assert gcc_close(apply_admissible(exp_fns[lam], a), GCC.from_gc(gc_exp(a)), 1e-12)
    print("[PASS] apply_admissible(exp) agrees with gc_exp")

    reciprocal = AdmissibleFn.from_analytic(-1, lambda x: 1 / x)
    with pytest.raises(EvaluationError) as info:
        apply_admissible(reciprocal, GC(1, 1, -1))
    assert info.value.argument == 0.0
    print("[PASS] Branch pole raises EvaluationError with the argument")

    with pytest.raises(ValueError):
        AdmissibleFn(0, f0=math.exp)
    print("[PASS] Λ=0 functions need an explicit derivative")


def test_complexified_star():
    """star is a conjugate-linear involution; ℓ·ℓ* is refused for Λ = 0."""
    print("\n" + "=" * 60)
    print("TEST 8: Complexified ring C_Λ")
    print("=" * 60)

    from src.errors import UnsupportedCaseError
    from src.gencomplex import GCC, gcc_add, gcc_close, gcc_mul, gcc_star

    rng = np.random.default_rng(4)

    def draw(lam):
        values = rng.normal(size=6)
        star = complex(values[4], values[5]) if lam == 0 else 0j
        return GCC(complex(values[0], values[1]), complex(values[2], values[3]), lam, star)

    for _ in range(100):
        lam = int(rng.choice(LAMBDAS))
        a, b = draw(lam), draw(lam)
        c = complex(*rng.normal(size=2))
        assert gcc_close(gcc_star(gcc_star(a)), a)
        assert gcc_close(gcc_star(gcc_add(a, b)), gcc_add(gcc_star(a), gcc_star(b)))
        scaled = GCC(c * a.re, c * a.im, lam, c * a.im_star)
        conj = GCC(c.conjugate(), 0, lam)
        assert gcc_close(gcc_star(scaled), gcc_mul(conj, gcc_star(a)))
    print("[PASS] star² = id, additive and conjugate-linear")

    with pytest.raises(UnsupportedCaseError):
        gcc_mul(GCC(0, 1, 0), GCC(0, 0, 0, 1))
    print("[PASS] ℓ·ℓ* is not multiplied")


def test_json_round_trip():
    """Exact parts serialise as "p/q" strings."""
    print("\n" + "=" * 60)
    print("TEST 9: JSON encoding")
    print("=" * 60)

    from src.gencomplex import GC, gc_from_json, gc_to_json

    value = GC(Fraction(1, 3), Fraction(-2), 0)
    data = gc_to_json(value)
    assert data == {"lambda": 0, "re": "1/3", "im": "-2"}
    assert gc_from_json(data) == value
    assert gc_to_json(GC(0.5, 1.25, 1)) == {"lambda": 1, "re": 0.5, "im": 1.25}
    print(f"[PASS] {data}")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("GENERALIZED COMPLEX NUMBER TESTS")
    print("=" * 60 + "\n")

    test_multiplication_examples()
    test_ring_axioms_exact()
    test_embedding()
    test_diagonalize()
    test_exp_log()
    test_inverse_and_power()
    test_admissible_calculus()
    test_complexified_star()
    test_json_round_trip()

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    run_all_tests()
