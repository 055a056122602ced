"""
Cluster Core Tests

Exchange-matrix mutation, permutations, move sequences, triangulations,
puncture vectors and the seed/triangulation file formats.
"""

import itertools
import json
import tempfile
from pathlib import Path

import numpy as np
import pytest

TORUS = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))


def test_mutation_examples():
    """Quiver mutation on the documented matrices."""
    print("=" * 60)
    print("TEST 1: mutate_exmat examples")
    print("=" * 60)

    from src.cluster import ExMat, mutate_exmat

    assert mutate_exmat(ExMat(((0, 1), (-1, 0))), 0) == ExMat(((0, -1), (1, 0)))
    print("[PASS] Rank 2 sign flip")

    assert mutate_exmat(ExMat(TORUS), 0) == ExMat(((0, -2, 2), (2, 0, -2), (-2, 2, 0)))
    print("[PASS] Punctured-torus matrix at k=1")

    with pytest.raises(IndexError):
        mutate_exmat(ExMat(TORUS), 3)
    print("[PASS] Out-of-range index raises IndexError")


def test_involution_and_pentagon():
    """μ_kμ_k = id on random seeds; pentagon on every pair with |ε_ij| = 1."""
    print("\n" + "=" * 60)
    print("TEST 2: Involution and pentagon at the ε level")
    print("=" * 60)

    from src.cluster import ExMat, apply_moves_exmat, mutate_exmat, random_exmat, relation_moves

    rng = np.random.default_rng(0)
    exmats = [random_exmat(rng, int(rng.integers(2, 7)), 2) for _ in range(100)]
    for e in exmats:
        for k in range(e.n):
            assert mutate_exmat(mutate_exmat(e, k), k) == e
    print(f"[PASS] Involution on {len(exmats)} random seeds of rank ≤ 6")

    for sign in (1, -1):
        e = ExMat(((0, sign), (-sign, 0)))
        assert apply_moves_exmat(e, relation_moves("R3", 2)) == e
    print("[PASS] Pentagon for ε_12 = ±1")

    pairs = 0
    for e in exmats:
        for i, j in itertools.combinations(range(e.n), 2):
            if abs(e[i, j]) == 1:
                assert apply_moves_exmat(e, relation_moves("pentagon", e.n, i, j)) == e
                pairs += 1
    print(f"[PASS] Pentagon on {pairs} random pairs")


def test_permutations():
    """Relabelling, its composition law and R4/R5."""
    print("\n" + "=" * 60)
    print("TEST 3: Permutations")
    print("=" * 60)

    from src.cluster import (
        ExMat,
        apply_moves_exmat,
        compose_permutations,
        minimal_relation,
        permute_exmat,
        random_exmat,
    )
    from src.errors import UsageError

    e2 = ExMat(((0, 1), (-1, 0)))
    assert permute_exmat(e2, (0, 1)) == e2
    assert permute_exmat(e2, (1, 0)) == ExMat(((0, -1), (1, 0)))
    print("[PASS] Identity and rank 2 swap")

    rng = np.random.default_rng(1)
    for _ in range(50):
        e = random_exmat(rng, 4)
        s1, s2 = tuple(rng.permutation(4)), tuple(rng.permutation(4))
        assert permute_exmat(permute_exmat(e, s1), s2) == permute_exmat(e, compose_permutations(s2, s1))
    print("[PASS] permute(permute(ε, σ₁), σ₂) = permute(ε, σ₂∘σ₁)")

    for name in ("R4", "R5"):
        e, moves = minimal_relation(name)
        assert apply_moves_exmat(e, moves) == e
    print("[PASS] R4 and R5 on the torus matrix")

    with pytest.raises(UsageError):
        permute_exmat(e2, (0, 0))
    print("[PASS] Non-bijective maps are refused")


def test_move_parsing():
    """Move strings are 1-based, comma-separated and in time order."""
    print("\n" + "=" * 60)
    print("TEST 4: Move sequences")
    print("=" * 60)

    from src.cluster import ExMat, Move, Seed, apply_moves, format_moves, parse_moves, replay
    from src.errors import UsageError

    moves = parse_moves("m1,m3,p(1 2)", 3)
    assert moves == [Move.mutation(0), Move.mutation(2), Move.permutation((1, 0, 2))]
    assert format_moves(moves) == "m1,m3,p(1 2)"
    print(f"[PASS] Parsed {format_moves(moves)}")

    seed = apply_moves(Seed(ExMat(TORUS)), moves)
    assert len(seed.history) == 3
    assert replay(seed) == seed.exmat
    print("[PASS] Seed history replays to its matrix")

    for bad in ("m4", "x1", "p(1 5)"):
        with pytest.raises(UsageError):
            parse_moves(bad, 3)
    print("[PASS] Malformed moves raise UsageError")


def test_triangulations():
    """exmat_from_tri on the stock surfaces and flip coherence."""
    print("\n" + "=" * 60)
    print("TEST 5: Triangulations")
    print("=" * 60)

    from src.cluster import (
        ExMat,
        Tri,
        canonical_form,
        exmat_from_tri,
        flip_tri,
        four_punctured_sphere,
        ideal_square,
        mutate_exmat,
        permute_exmat,
        punctured_torus,
        surface_genus,
        theta_from_punctures,
    )
    from src.errors import TriangulationError

    torus = punctured_torus()
    e = exmat_from_tri(torus)
    assert any(permute_exmat(e, s) == ExMat(TORUS) for s in itertools.permutations(range(3)))
    assert surface_genus(torus) == 1
    print(f"[PASS] Punctured torus ε = {e.tolist()} up to relabelling")

    sphere = four_punctured_sphere()
    es = exmat_from_tri(sphere)
    assert np.abs(es.array).max() <= 1
    assert all(es[i, i] == 0 for i in range(es.n))
    assert surface_genus(sphere) == 0
    print("[PASS] 4-punctured sphere entries in {−1, 0, 1}")

    rng = np.random.default_rng(2)
    for tri in (torus, sphere):
        for _ in range(20):
            current = tri
            for _ in range(int(rng.integers(1, 21))):
                arc = tri.arcs[int(rng.integers(len(tri.arcs)))]
                try:
                    flipped = flip_tri(current, arc)
                except TriangulationError:
                    continue
                assert exmat_from_tri(flipped) == mutate_exmat(exmat_from_tri(current), current.arc_index(arc))
                current = flipped
    print("[PASS] exmat_from_tri ∘ flip = mutate ∘ exmat_from_tri on 40 random sequences")

    for arc in sphere.arcs:
        assert canonical_form(flip_tri(flip_tri(sphere, arc), arc)) == canonical_form(sphere)
    print("[PASS] Flipping twice returns the original triangulation")

    square = ideal_square()
    with pytest.raises(TriangulationError):
        flip_tri(square, 0)
    flipped = flip_tri(square, 4)
    assert exmat_from_tri(flipped) == mutate_exmat(exmat_from_tri(square), 4)
    print("[PASS] Boundary arcs are not flippable; the diagonal is")

    with pytest.raises(TriangulationError):
        Tri((0, 1), ((0, 0, 1),), (("A", "B", "C"),))
    print("[PASS] Self-folded triangles are rejected")

    thetas = theta_from_punctures(square)
    assert sum(sum(t.coefficients) for t in thetas) == 2 * len(square.arcs)
    print("[PASS] Valences over all punctures sum to 2·#arcs")


def test_kernel_and_punctures():
    """Integer kernel bases and puncture vectors in ker ε."""
    print("\n" + "=" * 60)
    print("TEST 6: Kernel vectors")
    print("=" * 60)

    from src.cluster import (
        ExMat,
        exmat_from_tri,
        four_punctured_sphere,
        kernel_vectors,
        punctured_torus,
        random_exmat,
        theta_from_punctures,
    )

    assert [v.coefficients for v in kernel_vectors(ExMat(TORUS))] == [(1, 1, 1)]
    assert kernel_vectors(ExMat(((0, 1), (-1, 0)))) == []
    assert [v.coefficients for v in kernel_vectors(ExMat.zeros(2))] == [(1, 0), (0, 1)]
    print("[PASS] Documented kernels")

    thetas = theta_from_punctures(punctured_torus())
    assert [t.coefficients for t in thetas] == [(2, 2, 2)]
    print("[PASS] Punctured torus θ = (2, 2, 2)")

    sphere = four_punctured_sphere()
    es = exmat_from_tri(sphere)
    thetas = theta_from_punctures(sphere)
    assert len(thetas) == 4
    assert all(t.in_kernel(es) for t in thetas)
    print("[PASS] Sphere puncture vectors lie in ker ε")

    rng = np.random.default_rng(3)
    for _ in range(50):
        e = random_exmat(rng, int(rng.integers(2, 6)))
        vectors = kernel_vectors(e)
        assert len(vectors) == e.n - np.linalg.matrix_rank(e.array)
        assert all(v.in_kernel(e) for v in vectors)
    print("[PASS] Kernel rank matches the nullity on random seeds")


def test_seed_files():
    """Seed and triangulation JSON round trips and field-named errors."""
    print("\n" + "=" * 60)
    print("TEST 7: Seed and triangulation files")
    print("=" * 60)

    from src.cluster import (
        ExMat,
        Seed,
        four_punctured_sphere,
        load_seed,
        load_tri,
        parse_seed,
        save_seed,
        save_tri,
    )
    from src.errors import ConfigError

    with tempfile.TemporaryDirectory() as tmp:
        seed = Seed(ExMat(TORUS), ("a", "b", "c"))
        save_seed(seed, Path(tmp) / "seed.json")
        assert load_seed(Path(tmp) / "seed.json") == seed

        sphere = four_punctured_sphere()
        save_tri(sphere, Path(tmp) / "sphere.json")
        assert load_tri(Path(tmp) / "sphere.json").triangles == sphere.triangles

        broken = Path(tmp) / "broken.json"
        broken.write_text("{ not json", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_seed(broken)
    print("[PASS] Files written and read back")

    with pytest.raises(ConfigError) as info:
        parse_seed({"rank": 2, "epsilon": [[0, "x"], [-1, 0]]})
    assert info.value.field.startswith("epsilon")
    print(f"[PASS] Bad entry names field '{info.value.field}'")

    with pytest.raises(ConfigError):
        parse_seed(json.loads('{"rank": 2, "epsilon": [[0, 1], [1, 0]]}'))
    print("[PASS] Non-skew-symmetric matrices are refused")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("CLUSTER CORE TESTS")
    print("=" * 60 + "\n")

    test_mutation_examples()
    test_involution_and_pentagon()
    test_permutations()
    test_move_parsing()
    test_triangulations()
    test_kernel_and_punctures()
    test_seed_files()

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    run_all_tests()
