"""
Classical Mutation Tests

Pullbacks of the cluster X-mutation as exact rational functions, the
Λ-Poisson bracket, A-variable Laurent spot checks, the ensemble map and
evaluation at R_Λ points.
"""

import math

import numpy as np
import pytest

TORUS = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))


def _z(i: int, n: int):
    from src.classical import RatExpr

    return RatExpr.generator(i, n)


def test_mutation_formula():
    """μ_k^* on generators, including the ε_ik = 0 case."""
    print("=" * 60)
    print("TEST 1: classical_mutation")
    print("=" * 60)

    from src.classical import classical_mutation
    from src.cluster import ExMat, Seed

    pullback = classical_mutation(Seed(ExMat(((0, 1), (-1, 0)))), 0)
    z1, z2 = _z(0, 2), _z(1, 2)
    assert pullback.images[0] == 1 / z1
    assert pullback.images[1] == z2 * (1 + z1)
    assert pullback.target.exmat == ExMat(((0, -1), (1, 0)))
    print(f"[PASS] μ_1^* X'_2 = {pullback.images[1]}")

    pullback = classical_mutation(Seed(ExMat(((0, 1, 0), (-1, 0, 0), (0, 0, 0)))), 0)
    assert pullback.images[2] == _z(2, 3)
    print("[PASS] ε_ik = 0 leaves X_i unchanged")

    pullback = classical_mutation(Seed(ExMat(TORUS)), 1)
    z = [_z(i, 3) for i in range(3)]
    assert pullback.images[0] == z[0] * (1 + 1 / z[1]) ** -2
    assert pullback.images[2] == z[2] * (1 + z[1]) ** 2
    print("[PASS] Exponent ±2 on the torus matrix")

    with pytest.raises(IndexError):
        classical_mutation(Seed(ExMat(TORUS)), 5)
    print("[PASS] Out-of-range k raises IndexError")


def test_relations():
    """μ_kμ_k, the quadrilateral and the pentagon compose to identity pullbacks."""
    print("\n" + "=" * 60)
    print("TEST 2: Relations as rational-function identities")
    print("=" * 60)

    from src.classical import compose_pullbacks, identity_pullback, pullback_along, relation_is_identity
    from src.cluster import RELATIONS, ExMat, Seed, minimal_relation, parse_moves
    from src.errors import UsageError

    for name in RELATIONS:
        for sign in ((1, -1) if name in ("R1", "R3") else (1,)):
            exmat, moves = minimal_relation(name, sign)
            assert relation_is_identity(exmat, moves), f"{name} sign {sign}"
            print(f"[PASS] {name} (ε_12 = {sign:+d})")

    seed = Seed(ExMat(TORUS))
    f = pullback_along(seed, parse_moves("m1,m2", 3))
    assert compose_pullbacks(identity_pullback(seed), f).images == f.images
    print("[PASS] identity ∘ f = f")

    five = pullback_along(Seed(ExMat(((0, 1), (-1, 0)))), parse_moves("m1,m2,m1,m2,m1", 2))
    assert five.images == (_z(1, 2), _z(0, 2))
    print(f"[PASS] Five mutations equal the swap pullback: {[str(i) for i in five.images]}")

    rank2 = pullback_along(Seed(ExMat(((0, 1), (-1, 0)))), parse_moves("m1", 2))
    with pytest.raises(UsageError):
        compose_pullbacks(f, rank2)
    print("[PASS] Seed mismatch raises UsageError")

    assert str((1 + _z(0, 2)) / _z(1, 2) ** 2) == "(1+Z1)/(Z2^2)"
    print("[PASS] Canonical string form")


def test_poisson_bracket():
    """Log-canonical bracket and compatibility with mutation."""
    print("\n" + "=" * 60)
    print("TEST 3: Poisson bracket")
    print("=" * 60)

    from src.classical import RatExpr, check_poisson_compat, poisson_bracket, random_poisson_compat
    from src.cluster import ExMat, Seed

    e2 = ExMat(((0, 1), (-1, 0)))
    z1, z2 = _z(0, 2), _z(1, 2)
    assert poisson_bracket(z1, z2, e2) == RatExpr((z1 * z2).value, ell=1)
    assert poisson_bracket(z1, z1, e2).is_zero()
    print("[PASS] {Z1, Z2} = ℓ Z1 Z2 and {f, f} = 0")

    e3 = ExMat(((0, 1, 0), (-1, 0, 0), (0, 0, 0)))
    y = [_z(i, 3) for i in range(3)]
    assert poisson_bracket(y[0], y[1] + y[2], e3) == RatExpr((y[0] * y[1]).value, ell=1)
    print("[PASS] {Z1, Z2 + Z3} = ℓ Z1 Z2")

    f, g = y[0] * y[1] + 1, y[1] / (1 + y[2])
    t = ExMat(TORUS)
    assert poisson_bracket(f, g, t) == -poisson_bracket(g, f, t)
    print("[PASS] Antisymmetry on rational functions")

    assert check_poisson_compat(Seed(e2), 0).passed
    assert all(check_poisson_compat(Seed(t), k).passed for k in range(3))
    assert check_poisson_compat(Seed(ExMat.zeros(3)), 1).passed
    print("[PASS] Compatibility on rank 2, the torus and ε = 0")

    results = random_poisson_compat(50, 4, 2, seed=0)
    assert len(results) == 50
    assert all(report.passed for _, report in results)
    print("[PASS] 50 random seeds of rank ≤ 4")


def test_casimirs_and_laurent():
    """Z^θ for θ ∈ ker ε is central; A-variable composites stay Laurent; p* intertwines mutations."""
    print("\n" + "=" * 60)
    print("TEST 4: Casimirs and Laurent phenomenon")
    print("=" * 60)

    from src.classical import (
        a_mutation,
        ensemble_map,
        ensemble_spot_check,
        is_casimir,
        laurent_spot_check,
        pullback_along,
    )
    from src.cluster import (
        ExMat,
        Move,
        Seed,
        exmat_from_tri,
        four_punctured_sphere,
        kernel_vectors,
        random_exmat,
        theta_from_punctures,
    )

    rng = np.random.default_rng(4)
    checked = 0
    for _ in range(20):
        e = random_exmat(rng, int(rng.integers(2, 6)))
        for theta in kernel_vectors(e):
            assert is_casimir(theta, e)
            checked += 1
    sphere = four_punctured_sphere()
    for theta in theta_from_punctures(sphere):
        assert is_casimir(theta, exmat_from_tri(sphere))
        checked += 1
    print(f"[PASS] {checked} kernel vectors give Casimirs")

    ok, paths = laurent_spot_check(ExMat(((0, 1), (-1, 0))), 5)
    assert ok
    assert paths == 2 + 2 + 2 + 2 + 2
    ok, paths = laurent_spot_check(ExMat(TORUS), 3)
    assert ok
    assert paths == 3 + 6 + 12
    print("[PASS] A-variables stay Laurent along rank-2 and torus paths")

    # X-coordinates themselves are not Laurent after a single mutation
    x_image = pullback_along(Seed(ExMat(((0, 1), (-1, 0)))), [Move.mutation(1)]).images[0]
    assert not x_image.is_laurent()
    a1, a2 = _z(0, 2), _z(1, 2)
    exchange = a_mutation(Seed(ExMat(((0, 1), (-1, 0)))), 0).images[0]
    assert exchange == (a2 + 1) / a1
    print(f"[PASS] X-image {x_image} is not Laurent; A'_1 = (1 + A_2)/A_1")

    assert ensemble_map(Seed(ExMat(TORUS)))[0] == _z(1, 3) ** 2 / _z(2, 3) ** 2
    ok, paths = ensemble_spot_check(ExMat(((0, 1), (-1, 0))), 5)
    assert ok and paths == 10
    ok, paths = ensemble_spot_check(ExMat(TORUS), 2)
    assert ok and paths == 9
    print("[PASS] p* intertwines X- and A-mutation")


def test_evaluation():
    """eval_at_point on R_Λ points and refusal of zero-divisor denominators."""
    print("\n" + "=" * 60)
    print("TEST 5: Evaluation at R_Λ points")
    print("=" * 60)

    from src.classical import RatExpr, check_puncture_constraint, eval_at_point
    from src.cluster import punctured_torus
    from src.errors import EvaluationError
    from src.gencomplex import GC, gc_close, gc_exp

    z1, z2 = _z(0, 2), _z(1, 2)
    point = [GC(1, 1, -1), GC(1, -1, -1)]
    assert eval_at_point(z1 * z2, point) == GC(0, 0, -1)
    with pytest.raises(EvaluationError):
        eval_at_point(1 / (z1 * z2), point)
    print("[PASS] Zero-divisor denominator raises EvaluationError")

    assert eval_at_point(RatExpr.constant(1, 2), point) == GC(1, 0, -1)
    value = eval_at_point((1 + z1) * z2, [GC(math.e - 1, 0, 0), GC(1, 0, 0)])
    assert gc_close(value, GC(math.e, 0.0, 0))
    print("[PASS] Constants and (1+Z1)Z2 at Λ=0")

    rng = np.random.default_rng(5)
    f, g = (1 + z1) / z2, z1 * z2 + z2**2
    for lam in (-1, 0, 1):
        for _ in range(10):
            pt = [gc_exp(GC(float(rng.normal()), float(rng.normal()), lam)) for _ in range(2)]
            assert gc_close(eval_at_point(f * g, pt), eval_at_point(f, pt) * eval_at_point(g, pt), 1e-12)
    print("[PASS] Evaluation is multiplicative on random positive points")

    torus = punctured_torus()
    ones = [GC(1, 0, 1)] * 3
    assert all(c.satisfied for c in check_puncture_constraint(torus, ones).values())
    v = [0.3, -0.1, -0.2]
    pt = [gc_exp(GC(x, 0.2 * x, -1)) for x in v]
    assert check_puncture_constraint(torus, pt)["p"].satisfied
    generic = [gc_exp(GC(0.5, 0.1, 1))] * 3
    assert not check_puncture_constraint(torus, generic)["p"].satisfied
    print("[PASS] Puncture constraint on the torus")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("CLASSICAL MUTATION TESTS")
    print("=" * 60 + "\n")

    test_mutation_formula()
    test_relations()
    test_poisson_bracket()
    test_casimirs_and_laurent()
    test_evaluation()

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    run_all_tests()
