"""Numeric suites: quantum dilogarithm properties and operator identities."""

from __future__ import annotations

import logging
from functools import partial

import numpy as np
import sympy

from ..cluster import ExMat, load_seed, random_exmat
from ..config.loader import SuiteConfig
from ..gencomplex import Lambda
from ..opsim import (
    HBAR,
    bracket_matrix,
    check_kprime_conjugation,
    hsymbol_bracket,
    kprime_chain,
    pentagon_f0_substitution,
    substitution_grid_check,
    sum_exponential_residual,
    verify_f0_conjugation,
    verify_pentagon_2d,
    verify_pentagon_lambda_minus1,
    verify_pentagon_lambda_plus1,
    weyl_residual,
    x_ring,
    x_symbol,
    x_tilde,
    y_symbol,
    z_operator,
    zblock_commutator,
    zblock_expected,
)
from ..qdilog import check_difference_eqs, check_f_lambda, flat_suite, property_suite, sample_grid
from ..qdilog.properties import WRONG_SIGN_FLOOR
from .models import RECOVERABLE, CheckOutcome, SuiteRecorder

logger = logging.getLogger(__name__)

OPERATOR_TOLERANCE = 1e-8
ZBLOCK_SEEDS = 5

_RESIDUAL_ANCHORS = {
    "pole_blowup": "qdilog.poles",
    "zero_vanishing": "qdilog.poles",
    "difference_h": "qdilog.difference",
    "difference_unit": "qdilog.difference",
    "involutivity": "qdilog.involutivity",
    "compact_ratio": "qdilog.compact_ratio",
    "conjugation": "qdilog.conjugation",
    "contour_invariance": "qdilog.contour",
    "unitarity": "qdilog.unitarity",
    "f0_contour": "qdilog.f0_contour",
    "f0_difference": "qdilog.f0_difference",
}


def residual_anchor(name: str) -> str:
    """Anchor key for a qdilog Residual name."""
    if name.startswith("f_lambda"):
        return "qdilog.f_lambda"
    return _RESIDUAL_ANCHORS[name]


def _grouped(residuals: list) -> dict[str, list]:
    groups: dict[str, list] = {}
    for residual in residuals:
        groups.setdefault(residual.name, []).append(residual)
    return groups


def _record_residuals(rec: SuiteRecorder, residuals: list, suffix: str, anchor_key: str | None = None, **details) -> None:
    for name, group in _grouped(residuals).items():
        rec.check(
            f"{name}{suffix}",
            anchor_key or residual_anchor(name),
            partial(CheckOutcome.from_residuals, group, **details),
        )


# ---------------------------------------------------------------------------
# Quantum dilogarithm
# ---------------------------------------------------------------------------


def _wrong_sign_control(h: complex, samples: list[complex]) -> CheckOutcome:
    residuals = check_difference_eqs(h, samples, wrong_sign=True)
    smallest = min(r.residual for r in residuals)
    return CheckOutcome(smallest > WRONG_SIGN_FLOOR, smallest, WRONG_SIGN_FLOOR, {"h": h, "control_of": "difference"})


def _f_lambda_points(count: int) -> list[tuple[float, float]]:
    axis = np.linspace(-1.5, 1.5, count)
    return [(float(x), float(y)) for x in axis for y in axis]


def qdilog_suite(cfg: SuiteConfig) -> SuiteRecorder:
    """Property checks of Φ^h for each configured h, F₀, and F_Λ on a grid."""
    rec = SuiteRecorder("qdilog")
    for text, h in zip(cfg.qdilog.h_values, cfg.qdilog.hs):
        samples = sample_grid(h, cfg.qdilog.samples)
        try:
            residuals = property_suite(h, samples)
        except RECOVERABLE as e:
            rec.error(f"property_suite[h={text}]", "qdilog.difference", e)
            continue
        residuals = [r for r in residuals if not r.name.startswith("f_lambda")]
        _record_residuals(rec, residuals, f"[h={text}]", h=h)
        if cfg.controls:
            rec.check(f"difference[h={text}][control]", "control.negative", partial(_wrong_sign_control, h, samples[:2]))

    if cfg.qdilog.include_flat:
        _record_residuals(rec, flat_suite(), "")

    points = _f_lambda_points(cfg.qdilog.f_lambda_points)
    wanted = {f"[{lam}]" for lam in cfg.lambdas}
    for hbar in cfg.hbars:
        try:
            residuals = check_f_lambda(hbar, points)
        except RECOVERABLE as e:
            rec.error(f"f_lambda[hbar={hbar}]", "qdilog.f_lambda", e)
            continue
        residuals = [r for r in residuals if any(r.name.endswith(tag) for tag in wanted)]
        _record_residuals(rec, residuals, f"[hbar={hbar}]", hbar=hbar)
    logger.info(f"Quantum dilogarithm suite: {len(rec.records)} checks")
    return rec


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------


def _is_zero(matrix: sympy.Matrix) -> bool:
    return all(sympy.simplify(entry) == 0 for entry in matrix)


def _symbol_brackets(exmats: list[ExMat], lambdas: list[int]) -> CheckOutcome:
    """[x_i, y_j] = πiε_ij, [x̊_i, x̊_j] = 2πiℏε_ij, [x̃_i, x̃_j] = −2πiℏε_ij, [x̊_i, x̃_j] = 0,
    and the doubled z-operator commutators for a few seeds."""
    for index, e in enumerate(exmats):
        n = e.n
        eps = sympy.Matrix(e.tolist())
        xs = [x_symbol(e, i) for i in range(n)]
        ys = [y_symbol(e, i) for i in range(n)]
        rings = [x_ring(e, i) for i in range(n)]
        tildes = [x_tilde(e, i) for i in range(n)]
        mixed = sympy.Matrix(n, n, lambda i, j: hsymbol_bracket(xs[i], ys[j]))
        cross = sympy.Matrix(n, n, lambda i, j: hsymbol_bracket(rings[i], tildes[j]))
        checks = {
            "x_y": mixed - sympy.pi * sympy.I * eps,
            "x_ring": bracket_matrix(rings) - 2 * sympy.pi * sympy.I * HBAR * eps,
            "x_tilde": bracket_matrix(tildes) + 2 * sympy.pi * sympy.I * HBAR * eps,
            "ring_tilde": cross,
        }
        for name, difference in checks.items():
            if not _is_zero(difference):
                return CheckOutcome.exact(False, exmat=e.tolist(), bracket=name)
        if index >= ZBLOCK_SEEDS:
            continue
        for lam in lambdas:
            for sign in (1, -1):
                for i in range(n):
                    for j in range(n):
                        got = zblock_commutator(z_operator(e, i, lam, sign), z_operator(e, j, lam, sign))
                        if not _is_zero(got - zblock_expected(e, i, j, lam, sign)):
                            return CheckOutcome.exact(False, exmat=e.tolist(), z=(i, j), lam=lam, sign=sign)
    return CheckOutcome.exact(True, samples=len(exmats))


def _kprime(exmats: list[ExMat]) -> CheckOutcome:
    checked = 0
    for e in exmats:
        for k in range(e.n):
            results = check_kprime_conjugation(e, k)
            checked += len(results)
            failed = [key for key, ok in results.items() if not ok]
            if failed:
                return CheckOutcome.exact(False, exmat=e.tolist(), k=k, failed=failed)
        composite, _ = kprime_chain(e, list(range(e.n)))
        if composite.determinant not in (1, -1):
            return CheckOutcome.exact(False, exmat=e.tolist(), determinant=composite.determinant)
    return CheckOutcome.exact(True, images=checked, samples=len(exmats))


def _residual(value: float, tolerance: float, **details) -> CheckOutcome:
    return CheckOutcome(value <= tolerance, value, tolerance, details)


def _substitution_symbolic() -> CheckOutcome:
    result = pentagon_f0_substitution()
    spot = (sympy.Integer(11), sympy.Rational(9, 2))
    ok = result["equal"] and tuple(result["spot_lhs"]) == spot and tuple(result["spot_rhs"]) == spot
    return CheckOutcome.exact(ok, lhs=str(result["lhs"]), spot=str(result["spot_lhs"]))


def _pentagons(rec: SuiteRecorder, cfg: SuiteConfig) -> None:
    o = cfg.opsim
    for lam in cfg.lambdas:
        if lam == -1:
            for hbar in o.pentagon_hbars:
                rec.check(
                    f"pentagon[-1][hbar={hbar}]",
                    "opsim.pentagon_minus1",
                    lambda hbar=hbar: CheckOutcome.from_pentagon(
                        verify_pentagon_lambda_minus1(hbar, o.points_1d, o.extent_1d)
                    ),
                )
                if cfg.controls:
                    rec.check(
                        f"pentagon[-1][hbar={hbar}][control]",
                        "control.negative",
                        lambda hbar=hbar: CheckOutcome.control(
                            verify_pentagon_lambda_minus1(hbar, o.points_1d, o.extent_1d, drop_middle=True)
                        ),
                    )
        elif lam == 0:
            rec.check("substitution[symbolic]", "opsim.substitution", _substitution_symbolic)
            rec.check(
                "substitution[grid]",
                "opsim.substitution",
                lambda: CheckOutcome.from_pentagon(substitution_grid_check(o.points_2d, o.extent_2d)),
            )
            if cfg.controls:
                rec.check(
                    "substitution[grid][control]",
                    "control.negative",
                    lambda: CheckOutcome.control(substitution_grid_check(o.points_2d, o.extent_2d, drop_middle=True)),
                )
            try:
                _record_residuals(rec, verify_f0_conjugation(points=o.points_2d, extent=o.extent_2d), "", "opsim.f0_conjugation")
            except RECOVERABLE as e:
                rec.error("f0_conjugation", "opsim.f0_conjugation", e)
            rec.check(
                "pentagon[0][engine]",
                "opsim.pentagon_f_lambda",
                lambda: CheckOutcome.from_pentagon(verify_pentagon_2d(Lambda.ZERO, 1.0, o.points_2d, o.extent_2d)),
            )
        else:
            for hbar in o.pentagon_hbars:
                rec.check(
                    f"pentagon[1][hbar={hbar}]",
                    "opsim.pentagon_f_lambda",
                    lambda hbar=hbar: CheckOutcome.from_pentagon(
                        verify_pentagon_lambda_plus1(hbar, o.modular_dim)
                    ),
                )
                if cfg.controls:
                    rec.check(
                        f"pentagon[1][hbar={hbar}][control]",
                        "control.negative",
                        lambda hbar=hbar: CheckOutcome.control(
                            verify_pentagon_lambda_plus1(hbar, o.modular_dim, drop_middle=True)
                        ),
                    )


def opsim_suite(cfg: SuiteConfig) -> SuiteRecorder:
    """Symbol-level brackets and K′ conjugation, then grid identities and pentagons."""
    rec = SuiteRecorder("opsim")
    rng = np.random.default_rng(cfg.random_seed)
    exmats = [random_exmat(rng, int(rng.integers(2, 6)), 2) for _ in range(cfg.opsim.kprime_seeds)]
    if cfg.seed_path is not None:
        exmats.append(load_seed(cfg.seed_path).exmat)

    rec.check("symbol_brackets", "opsim.symbols", partial(_symbol_brackets, exmats, cfg.lambdas))
    rec.check("kprime_conjugation", "opsim.kprime", partial(_kprime, exmats))
    for hbar in cfg.hbars:
        rec.check(
            f"weyl[hbar={hbar}]",
            "opsim.weyl",
            partial(lambda h: _residual(weyl_residual(h, 0.3, 0.7), OPERATOR_TOLERANCE, hbar=h), hbar),
        )
        rec.check(
            f"sum_exponential[hbar={hbar}]",
            "opsim.sum_exponential",
            partial(lambda h: _residual(sum_exponential_residual(h, 0.4), OPERATOR_TOLERANCE, hbar=h), hbar),
        )
    if cfg.opsim.pentagons:
        _pentagons(rec, cfg)
    logger.info(f"Operator suite: {len(rec.records)} checks")
    return rec
