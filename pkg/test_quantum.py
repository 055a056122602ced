"""
Quantum Mutation Tests

Quantum tori, μ_k^q = μ♯_k ∘ μ'_k, its q → 1 limit, the ψ series checks and
the clock/shift matrix models behind the relation backends, and the * structure
of the doubled tori.
"""

import numpy as np
import pytest

TORUS = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))


def _random_word(rng, plain, binomials):
    """Two plain letters and one binomial letter, in random order."""
    letters = [plain[int(rng.integers(len(plain)))] for _ in range(2)]
    letters.insert(int(rng.integers(3)), binomials[int(rng.integers(len(binomials)))])
    word = letters[0]
    for letter in letters[1:]:
        word = word * letter
    return word


def test_torus_commutation():
    """X_i X_j = q^{2ε_ij} X_j X_i and Weyl ordering."""
    print("=" * 60)
    print("TEST 1: Quantum torus relations")
    print("=" * 60)

    from src.cluster import ExMat
    from src.errors import UsageError
    from src.quantum import Q, QContext, QElem

    ctx = QContext.from_exmat(ExMat(TORUS))
    x = [QElem.generator(ctx, i) for i in range(3)]
    for i in range(3):
        for j in range(3):
            assert x[i] * x[j] == (x[j] * x[i]) * Q ** (2 * TORUS[i][j])
    print("[PASS] Commutation on the punctured-torus matrix")

    assert x[0] * x[0].inverse() == QElem.one(ctx)
    assert x[1] ** -2 * x[1] ** 2 == 1
    print("[PASS] Generators are invertible")

    ordered = QElem.ordered_monomial(ctx, (1, 1, 0))
    assert ordered == x[0] * x[1]
    print(f"[PASS] X1·X2 = {ordered}")

    with pytest.raises(UsageError):
        QContext(((0, 1), (1, 0)))
    print("[PASS] Non-skew forms are refused")


def test_mutation_and_limit():
    """The q → 1 limit of μ_k^q is the classical pullback."""
    print("\n" + "=" * 60)
    print("TEST 2: Quantum mutation and classical limit")
    print("=" * 60)

    from src.classical import classical_mutation
    from src.cluster import ExMat, Seed, minimal_relation
    from src.quantum import QElem, compose_quantum, limit_images, mu_prime, mu_quantum, mu_sharp

    for matrix in (((0, 1), (-1, 0)), ((0, -2), (2, 0)), TORUS):
        seed = Seed(ExMat(matrix))
        for k in range(seed.rank):
            images = limit_images(mu_quantum(seed, k).images)
            assert images == list(classical_mutation(seed, k).images)
    print("[PASS] lim_{q→1} μ_k^q = μ_k^* on rank 2 and the torus")

    seed = Seed(ExMat(((0, 1), (-1, 0))))
    prime = mu_prime(seed, 0)
    assert prime[0] == QElem.generator(prime[0].ctx, 0).inverse()
    sharp = mu_sharp(seed, 0)
    assert sharp[0] == QElem.generator(sharp[0].ctx, 0)
    print("[PASS] μ'_k inverts X_k and μ♯_k fixes it")

    for name in ("R2", "R4"):
        exmat, moves = minimal_relation(name)
        assert compose_quantum(Seed(exmat), moves).is_identity()
    print("[PASS] Commuting mutations and relabellings reduce to the identity")

    with pytest.raises(IndexError):
        mu_quantum(seed, 2)
    print("[PASS] Out-of-range k raises IndexError")


def test_doubled_torus():
    """Blocks of X^q_Λ and the * anti-automorphism."""
    print("\n" + "=" * 60)
    print("TEST 3: Λ-doubled tori")
    print("=" * 60)

    from src.cluster import ExMat, Seed
    from src.errors import UsageError
    from src.gencomplex import Lambda
    from src.quantum import QContext, QElem, doubled_mutation, star

    exmat = ExMat(((0, 1), (-1, 0)))
    for lam in Lambda:
        ctx = QContext.doubled(exmat, lam)
        assert ctx.rank == 2
        assert len(ctx.blocks) == (4 if lam is Lambda.ZERO else 2)
        for i in range(ctx.n):
            x = QElem.generator(ctx, i)
            assert star(star(x)) == x
        mapped = doubled_mutation(Seed(exmat), 0, lam)
        assert len(mapped.images) == ctx.n
        print(f"[PASS] Λ={lam.value:+d}: {len(ctx.blocks)} blocks, ** = id")

    trivial = doubled_mutation(Seed(ExMat.zeros(2)), 1, Lambda.POSITIVE)
    assert all(img == QElem.generator(trivial.source, i) for i, img in enumerate(trivial.images) if i % 2 == 0)
    print("[PASS] ε = 0 leaves the other generators fixed")

    with pytest.raises(UsageError):
        star(QElem.generator(QContext.from_exmat(exmat), 0))
    print("[PASS] * needs a doubled torus")


def test_psi_series():
    """ψ difference equation, pentagon and μ♯ as ψ-conjugation to order 8."""
    print("\n" + "=" * 60)
    print("TEST 4: ψ series")
    print("=" * 60)

    from src.cluster import ExMat, Seed
    from src.quantum import psi_series, verify_psi_difference, verify_psi_pentagon, verify_sharp_is_psi_conjugation

    from src.quantum.coeff import ONE, Q

    coeffs = psi_series(8)
    assert len(coeffs) == 9
    assert coeffs[1] == Q / (Q**2 - ONE)
    difference = verify_psi_difference(8)
    assert difference.passed
    assert difference.agreement == 8
    print("[PASS] ψ(q²z) = (1 + qz)ψ(z) and 1/ψ matches Euler's sum through degree 8")

    check = verify_psi_pentagon(8)
    assert check.passed
    assert check.agreement == 8
    print("[PASS] ψ(U)ψ(V) = ψ(V)ψ(qVU)ψ(U) through degree 8")

    control = verify_psi_pentagon(8, perturb=3)
    assert not control.passed
    assert control.agreement < 3
    print(f"[PASS] Perturbed c_3 breaks agreement at degree {control.agreement + 1}")

    for e in range(-2, 3):
        seed = Seed(ExMat(((0, e), (-e, 0))))
        assert all(c.passed for c in verify_sharp_is_psi_conjugation(seed, 0, 8))
    print("[PASS] μ♯ is ψ-conjugation for ε_ik ∈ {−2, …, 2}")


def test_matrix_models():
    """W_iW_j = q^{2ε_ij}W_jW_i and relation deviations at three odd N."""
    print("\n" + "=" * 60)
    print("TEST 5: Matrix models")
    print("=" * 60)

    from src.cluster import ExMat
    from src.errors import UsageError
    from src.quantum import build_matrix_model, commutation_residual, default_orders

    for matrix in (((0, 1), (-1, 0)), TORUS):
        e = ExMat(matrix)
        for order in default_orders(e):
            model = build_matrix_model(e, order)
            assert commutation_residual(e, model) < 1e-10
    print("[PASS] Construction residuals below 1e-10")

    with pytest.raises(UsageError):
        build_matrix_model(ExMat(((0, 1), (-1, 0))), 4)
    print("[PASS] Even N is refused")


def test_backends():
    """Every backend passes every relation on its minimal seed."""
    print("\n" + "=" * 60)
    print("TEST 6: Relation backends")
    print("=" * 60)

    from src.cluster import RELATIONS, minimal_relation, parse_moves
    from src.config import create_relation_backend
    from src.quantum import ClassicalBackend, MatrixBackend, SeriesBackend

    classical, series, matrix = ClassicalBackend(), SeriesBackend(8), MatrixBackend(tolerance=1e-8)
    for name in RELATIONS:
        exmat, moves = minimal_relation(name)
        assert classical.verify(exmat, moves, name).passed
        assert series.verify(exmat, moves, name).passed
        result = matrix.verify(exmat, moves, name)
        assert result.passed
        assert result.deviation <= 1e-8
        assert len(result.details["per_order"]) == 3
        print(f"[PASS] {name}: classical, series, matrix (deviation {result.deviation:.1e})")

    exmat, _ = minimal_relation("R1")
    broken = parse_moves("m1,m2", 2)
    assert not classical.verify(exmat, broken, "broken").passed
    print("[PASS] A non-relation fails the classical backend")

    assert isinstance(create_relation_backend("series"), SeriesBackend)
    with pytest.raises(ValueError):
        create_relation_backend("symbolic")
    print("[PASS] Factory builds known backends and refuses others")


def test_star_anti_automorphism():
    """(ab)* = b*a* and a** = a on random words, with the q convention of each Λ."""
    print("\n" + "=" * 60)
    print("TEST 7: * on random words")
    print("=" * 60)

    from src.cluster import ExMat
    from src.gencomplex import Lambda
    from src.quantum import Q, QS, QContext, QElem, star

    exmat = ExMat(((0, 1), (-1, 0)))
    expected_q = {Lambda.NEGATIVE: 1 / Q, Lambda.POSITIVE: Q, Lambda.ZERO: 1 / QS}
    rng = np.random.default_rng(7)
    for lam in Lambda:
        ctx = QContext.doubled(exmat, lam)
        x = [QElem.generator(ctx, i) for i in range(ctx.n)]
        assert star(QElem.scalar(ctx, Q)) == QElem.scalar(ctx, expected_q[lam])

        plain = list(x) + [xi.inverse() for xi in x]
        plain += [x[0] + x[1] * Q, QElem.scalar(ctx, Q), x[0] * x[-1] + 2]
        binomials = [QElem.binomial(xi, sign) for xi in x for sign in (1, -1)]
        for _ in range(20):
            a = _random_word(rng, plain, binomials)
            b = _random_word(rng, plain, binomials)
            assert star(a * b) == star(b) * star(a), f"Λ={lam.value:+d}: {a} | {b}"
            assert star(star(a)) == a
        print(f"[PASS] Λ={lam.value:+d}: 20 word pairs, q ↦ {expected_q[lam].as_expr()}")


def test_classical_limit_and_blocks():
    """classical_limit on words and poles; μ_k on each block of the doubled torus."""
    print("\n" + "=" * 60)
    print("TEST 8: Classical limit and block mutation")
    print("=" * 60)

    from src.classical import RatExpr
    from src.cluster import ExMat, Seed
    from src.errors import DomainError
    from src.gencomplex import Lambda
    from src.quantum import Q, QS, QContext, QElem, classical_limit, mu_quantum_lambda

    exmat = ExMat(((0, 1), (-1, 0)))
    ctx = QContext.from_exmat(exmat)
    x1, x2 = QElem.generator(ctx, 0), QElem.generator(ctx, 1)
    z1, z2 = RatExpr.generator(0, 2), RatExpr.generator(1, 2)
    assert classical_limit(x1 * x2) == z1 * z2
    assert classical_limit(x1 * Q**3 + x2.inverse()) == z1 + 1 / z2
    assert classical_limit(QElem.binomial(x1 * Q, -1) * x2) == z2 / (1 + z1)
    print("[PASS] q → 1 on monomials, sums and binomial factors")

    with pytest.raises(DomainError):
        classical_limit(QElem.scalar(ctx, 1 / (Q - 1)))
    print("[PASS] A pole at q = 1 raises DomainError")

    # X'_1X'_2 = q_block^{-2}X'_2X'_1 for the mutated matrix
    swap = {"+": Q**-2, "-": Q**2, "+*": QS**-2, "-*": QS**2}
    seed = Seed(exmat)
    for lam in Lambda:
        doubled = QContext.doubled(exmat, lam)
        for block in doubled.blocks:
            offset = doubled.block_offset(block)
            images = mu_quantum_lambda(seed, 0, lam, block)
            assert len(images) == 2
            assert images[0] * images[1] == images[1] * images[0] * swap[block]
            for img in images:
                assert all(e == 0 for a in img.support for j, e in enumerate(a) if not offset <= j < offset + 2)
            z = [RatExpr.generator(offset + i, doubled.n) for i in range(2)]
            assert classical_limit(images[0]) == 1 / z[0]
            assert classical_limit(images[1]) == z[1] * (1 + z[0])
        print(f"[PASS] Λ={lam.value:+d}: blocks {list(doubled.blocks)} mutate in place with the right q")

    with pytest.raises(IndexError):
        mu_quantum_lambda(seed, 2, Lambda.ZERO, "+*")
    print("[PASS] Out-of-range k raises IndexError")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("QUANTUM MUTATION TESTS")
    print("=" * 60 + "\n")

    test_torus_commutation()
    test_mutation_and_limit()
    test_doubled_torus()
    test_psi_series()
    test_matrix_models()
    test_backends()
    test_star_anti_automorphism()
    test_classical_limit_and_blocks()

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    run_all_tests()
