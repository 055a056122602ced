"""
Quantum Dilogarithm Tests

Φ^h by slanted Barnes integrals, the compact ψ^q ratio, the flat F₀ and the
combined F_Λ, checked against their functional equations on small grids.
"""

import cmath
import math

import numpy as np
import pytest


def test_lattice_and_constants():
    """c_h, the zero/pole lattice and contour admissibility."""
    print("=" * 60)
    print("TEST 1: Lattice and contour parameters")
    print("=" * 60)

    from src.errors import DomainError
    from src.qdilog import ContourSpec, c_h, locate_zero_pole, pole_lattice

    assert c_h(1.0) == pytest.approx(cmath.exp(-1j * math.pi / 6))
    print(f"[PASS] c_1 = {c_h(1.0):.6f}")

    assert locate_zero_pole(1.0, 0, 0, "zero") == pytest.approx(2j * math.pi)
    assert locate_zero_pole(1.0, 0, 0, "pole") == pytest.approx(-2j * math.pi)
    assert all(abs(p) <= 20 for _, _, p in pole_lattice(0.5, 20.0))
    print("[PASS] First zero at 2πi, first pole at −2πi for h = 1")

    spec = ContourSpec.default(1j)
    assert spec.theta == pytest.approx(-math.pi / 4)
    assert ContourSpec.default(2.0).a == pytest.approx(0.25)
    for bad in ((0, 0.5, 0.0), (-1, 0.5, 0.0), (1j, 0.5, 0.0), (1j, 0.5, 0.3), (1.0, 1.5, 0.0)):
        with pytest.raises(DomainError):
            ContourSpec(*bad)
    print("[PASS] Inadmissible (h, a, θ) are refused")


def test_phi_values():
    """Unitarity for real h, conjugation and Φ^{-h} = 1/Φ^h."""
    print("\n" + "=" * 60)
    print("TEST 2: Φ^h evaluation")
    print("=" * 60)

    from src.errors import DomainError, PoleError
    from src.qdilog import Method, check_conjugation, check_unitarity, locate_zero_pole, phi

    assert check_unitarity(1.0, [-2.0, 0.0, 1.5]).passed
    print("[PASS] |Φ^1(x)| = 1 on the real line")

    value = phi(1.0, -30.0)
    assert abs(value.value - 1) < 1e-8
    assert value.method is Method.BARNES
    print("[PASS] Φ^h(x) → 1 as x → −∞")

    assert check_conjugation(1 + 0.5j, 0.3 + 0.2j).passed
    print("[PASS] conj(Φ^h(z))·Φ^{h̄}(z̄) = 1")

    forward = phi(0.7, 0.4 + 0.3j).value
    backward = phi(-0.7, 0.4 + 0.3j).value
    assert abs(forward * backward - 1) < 1e-8
    print("[PASS] Φ^{−h} = (Φ^h)^{−1}")

    with pytest.raises(PoleError) as info:
        phi(1.0, locate_zero_pole(1.0, 0, 0, "pole"))
    assert info.value.lattice == (0, 0, "pole")
    with pytest.raises(DomainError):
        phi(0, 1.0)
    print("[PASS] Poles and h = 0 are refused")


def test_difference_equations():
    """Both difference equations at 1e−8 (real h) and 1e−6 (imaginary h); wrong sign fails."""
    print("\n" + "=" * 60)
    print("TEST 3: Difference equations")
    print("=" * 60)

    from src.qdilog import check_difference_eqs, sample_grid

    for h in (1.0, 1j):
        results = check_difference_eqs(h, sample_grid(h, 2))
        assert all(r.passed for r in results)
        tolerance = results[0].tolerance
        assert tolerance == (1e-8 if h == 1.0 else 1e-6)
        print(f"[PASS] h={h}: worst {max(r.residual for r in results):.1e} ≤ {tolerance:g}")

    control = check_difference_eqs(1.0, [0.2 + 0.1j], wrong_sign=True)
    assert all(r.residual > 1e-2 for r in control)
    print("[PASS] The wrong-sign multiplier is detected")


def test_involutivity_and_ratio():
    """Φ^h(z)Φ^h(−z) = c_h e^{z²/4πih} and the compact ratio at h ∈ {0.5i, i, 2i}."""
    print("\n" + "=" * 60)
    print("TEST 4: Involutivity and compact ratio")
    print("=" * 60)

    from src.qdilog import check_compact_ratio, check_involutivity, check_pole_blowup

    for h in (1.0, 0.5 + 0.5j):
        for z in (0.3, -0.5 + 0.2j):
            result = check_involutivity(h, z)
            assert result.passed, f"h={h}, z={z}: {result.residual:.2e}"
    print("[PASS] Involutivity within 1e−8")

    from src.config.loader import QDilogConfig

    defaults = QDilogConfig().hs
    assert defaults[:2] == [0.3, 0.7]
    for h in (0.3, 0.7, 0.5j, 1j):
        result = check_involutivity(h, 0.3 + 0.1j)
        assert result.passed, f"h={h}: {result.residual:.2e}"
    print("[PASS] Involutivity at the default h values, 0.3 included")

    for h in (0.5j, 1j, 2j):
        for z in (0.0, 0.4 - 0.3j):
            assert check_compact_ratio(h, z).passed
    print("[PASS] Slanted integral matches ψ ratio within 1e−6")

    assert all(r.passed for r in check_pole_blowup(1.0))
    print("[PASS] |Φ| blows up next to the first pole and vanishes next to the first zero")


def test_compact_product():
    """ψ^q truncation, its refusals and the Φ^{iℏ} log grid."""
    print("\n" + "=" * 60)
    print("TEST 5: Compact quantum dilogarithm")
    print("=" * 60)

    from src.errors import DomainError, PoleError
    from src.qdilog import Method, phi_ih_log_grid, phi_ih_ratio, psi_compact

    q = 0.5
    value = psi_compact(q, 0.3)
    expected = 1 / np.prod([1 + q ** (2 * n - 1) * 0.3 for n in range(1, 80)])
    assert abs(value.value - expected) < 1e-15
    assert value.method is Method.PRODUCT
    print(f"[PASS] ψ^0.5(0.3) = {value.value.real:.12f}")

    with pytest.raises(DomainError):
        psi_compact(1.0, 0.3)
    with pytest.raises(PoleError):
        psi_compact(0.5, -2.0)
    print("[PASS] |q| ≥ 1 and 1 + qz = 0 are refused")

    zs = np.array([0.1 + 0.05j, -0.4, 0.8 - 0.1j])
    grid = np.exp(phi_ih_log_grid(0.6, zs))
    pointwise = np.array([phi_ih_ratio(0.6, z).value for z in zs])
    assert np.allclose(grid, pointwise, rtol=1e-10)
    print("[PASS] Log-space grid agrees with pointwise ratios")


def test_flat_and_combined():
    """F₀ by contour and closed form; F_Λ involutive and unimodular."""
    print("\n" + "=" * 60)
    print("TEST 6: F₀ and F_Λ")
    print("=" * 60)

    from src.errors import DomainError
    from src.qdilog import check_f0_contour, check_f0_difference, check_f_lambda, f0, f_lambda

    assert f0(0.0, 0.0) == 1
    assert abs(f0(0.5, 1.2)) == pytest.approx(1.0)
    print("[PASS] F₀(x, 0) = 1 and |F₀| = 1 for real y")

    assert check_f0_contour([-1.0, 0.5], [-1.0, 0.7]).passed
    assert check_f0_difference().passed
    print("[PASS] Contour integral within 1e−8; F₀(x, y+πi) = (1 + e^x)F₀(x, y)")

    results = check_f_lambda(0.8, [(0.7, 1.3), (-0.4, 0.9)])
    assert len(results) == 6
    assert all(r.passed for r in results), [r.name for r in results if not r.passed]
    print("[PASS] F_Λ involutivity and unitarity for Λ = −1, 0, +1")

    assert f_lambda(-1, 0.8, 0.3, 0.0) == 1
    with pytest.raises(DomainError):
        f_lambda(1, -0.5, 0.3, 0.2)
    print("[PASS] F_Λ(x, 0) = 1 and ℏ ≤ 0 is refused")


def test_tables():
    """Real-line grid evaluation and value tables."""
    print("\n" + "=" * 60)
    print("TEST 7: Grids and tables")
    print("=" * 60)

    from src.qdilog import TABLE_COLUMNS, phi, phi_real_grid, value_table

    xs = np.array([-3.0, -0.5, 0.0, 1.2])
    grid = phi_real_grid(1.0, xs)
    pointwise = np.array([phi(1.0, x).value for x in xs])
    assert np.allclose(grid, pointwise, atol=1e-8)
    print("[PASS] Vectorised real grid matches pointwise Φ")

    rows = value_table(1.0, [0.1, -0.2 + 0.1j])
    assert [list(row) for row in rows] == [TABLE_COLUMNS, TABLE_COLUMNS]
    assert rows[0]["abs"] == pytest.approx(1.0)
    print(f"[PASS] Table columns {TABLE_COLUMNS}")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("QUANTUM DILOGARITHM TESTS")
    print("=" * 60 + "\n")

    test_lattice_and_constants()
    test_phi_values()
    test_difference_equations()
    test_involutivity_and_ratio()
    test_compact_product()
    test_flat_and_combined()
    test_tables()

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    run_all_tests()
