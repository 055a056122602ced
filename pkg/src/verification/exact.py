"""Exact suites: exchange matrices, triangulations, classical and quantum mutation."""

from __future__ import annotations

import itertools
import logging
from functools import partial

import numpy as np

from ..classical import (
    classical_mutation,
    ensemble_spot_check,
    eval_at_point,
    is_casimir,
    laurent_spot_check,
    random_poisson_compat,
    relation_is_identity,
)
from ..cluster import (
    RELATIONS,
    ExMat,
    Seed,
    Tri,
    apply_moves_exmat,
    exmat_from_tri,
    flip_tri,
    format_moves,
    four_punctured_sphere,
    kernel_vectors,
    load_seed,
    load_tri,
    minimal_relation,
    mutate_exmat,
    permute_exmat,
    punctured_torus,
    random_exmat,
    relation_moves,
    theta_from_punctures,
)
from ..config.factory import create_relation_backend
from ..config.loader import SuiteConfig
from ..errors import TriangulationError
from ..gencomplex import GC, Lambda, gc_exp, gc_log
from ..quantum import (
    QElem,
    doubled_mutation,
    substitute,
    verify_psi_difference,
    verify_psi_pentagon,
    verify_sharp_is_psi_conjugation,
)
from .models import CheckOutcome, SuiteRecorder

logger = logging.getLogger(__name__)

TORUS_EXMAT = ExMat(((0, 2, -2), (-2, 0, 2), (2, -2, 0)))
POINT_TOLERANCE = 1e-9
BACKEND_ANCHORS = {
    "classical": "quantum.limit",
    "series": "quantum.sharp_conjugation",
    "matrix": "quantum.matrix_relations",
}


def _rank2(value: int) -> ExMat:
    return ExMat(((0, value), (-value, 0)))


def _random_exmats(rng: np.random.Generator, count: int, max_rank: int, bound: int) -> list[ExMat]:
    return [random_exmat(rng, int(rng.integers(2, max_rank + 1)), bound) for _ in range(count)]


def _closed_surfaces(cfg: SuiteConfig) -> dict[str, Tri]:
    surfaces = {"punctured_torus": punctured_torus(), "four_punctured_sphere": four_punctured_sphere()}
    if cfg.triangulation_path is not None:
        surfaces[cfg.triangulation_path.stem] = load_tri(cfg.triangulation_path)
    return surfaces


# ---------------------------------------------------------------------------
# Exchange matrices and triangulations
# ---------------------------------------------------------------------------


def _involution(exmats: list[ExMat]) -> CheckOutcome:
    for e in exmats:
        for k in range(e.n):
            if mutate_exmat(mutate_exmat(e, k), k) != e:
                return CheckOutcome.exact(False, exmat=e.tolist(), k=k)
    return CheckOutcome.exact(True, samples=len(exmats))


def _pentagon_pairs(exmats: list[ExMat]) -> CheckOutcome:
    """R3 at the ε level for every pair with ε_ij = ±1."""
    pairs = 0
    for e in exmats:
        for i, j in itertools.combinations(range(e.n), 2):
            if abs(e[i, j]) != 1:
                continue
            pairs += 1
            if apply_moves_exmat(e, relation_moves("R3", e.n, i, j)) != e:
                return CheckOutcome.exact(False, exmat=e.tolist(), pair=(i, j))
    return CheckOutcome.exact(True, pairs=pairs)


def _exmat_relation(name: str, sign: int) -> CheckOutcome:
    exmat, moves = minimal_relation(name, sign)
    return CheckOutcome.exact(apply_moves_exmat(exmat, moves) == exmat, moves=format_moves(moves))


def _flip_coherence(tri: Tri, rng: np.random.Generator, sequences: int, length: int) -> CheckOutcome:
    flips = refused = 0
    for _ in range(sequences):
        current = tri
        for _ in range(int(rng.integers(1, length + 1))):
            arc = tri.arcs[int(rng.integers(len(tri.arcs)))]
            try:
                flipped = flip_tri(current, arc)
            except TriangulationError:
                refused += 1
                continue
            expected = mutate_exmat(exmat_from_tri(current), current.arc_index(arc))
            if exmat_from_tri(flipped) != expected:
                return CheckOutcome.exact(False, arc=arc, flips=flips)
            current = flipped
            flips += 1
    return CheckOutcome.exact(True, flips=flips, refused=refused)


def _punctured_torus() -> CheckOutcome:
    tri = punctured_torus()
    e = exmat_from_tri(tri)
    relabelled = any(
        permute_exmat(e, sigma) == TORUS_EXMAT for sigma in itertools.permutations(range(e.n))
    )
    thetas = theta_from_punctures(tri)
    theta_ok = [t.coefficients for t in thetas] == [(2, 2, 2)] and thetas[0].in_kernel(e)
    return CheckOutcome.exact(relabelled and theta_ok, exmat=e.tolist(), theta=[t.coefficients for t in thetas])


def _kernel(exmats: list[ExMat], surfaces: dict[str, Tri]) -> CheckOutcome:
    for e in exmats:
        vectors = kernel_vectors(e)
        nullity = e.n - int(np.linalg.matrix_rank(e.array))
        if len(vectors) != nullity or not all(v.in_kernel(e) for v in vectors):
            return CheckOutcome.exact(False, exmat=e.tolist(), vectors=[v.coefficients for v in vectors])
    for name, tri in surfaces.items():
        e = exmat_from_tri(tri)
        if not all(theta.in_kernel(e) for theta in theta_from_punctures(tri)):
            return CheckOutcome.exact(False, surface=name)
    return CheckOutcome.exact(True, samples=len(exmats), surfaces=sorted(surfaces))


def cluster_suite(cfg: SuiteConfig) -> SuiteRecorder:
    """ε-level relations, flip coherence and puncture vectors."""
    rec = SuiteRecorder("cluster")
    rng = np.random.default_rng(cfg.random_seed)
    exmats = _random_exmats(rng, cfg.classical.exmat_samples, 6, cfg.classical.entry_bound)
    exmats += [_rank2(1), _rank2(-1)]
    if cfg.seed_path is not None:
        exmats.append(load_seed(cfg.seed_path).exmat)

    rec.check("involution", "exmat.involution", partial(_involution, exmats))
    rec.check("pentagon[random]", "exmat.relations", partial(_pentagon_pairs, exmats))
    for name in RELATIONS:
        for sign in (1, -1):
            rec.check(f"relation[{name},{sign:+d}]", "exmat.relations", partial(_exmat_relation, name, sign))

    surfaces = _closed_surfaces(cfg)
    for name, tri in surfaces.items():
        rec.check(
            f"flip_coherence[{name}]",
            "tri.coherence",
            partial(_flip_coherence, tri, rng, cfg.classical.flip_sequences, cfg.classical.flip_length),
        )
    rec.check("punctured_torus", "tri.punctured_torus", _punctured_torus)
    kernel_samples = [e for e in exmats if e.n <= 5]
    rec.check("kernel", "exmat.kernel", partial(_kernel, kernel_samples, surfaces))
    logger.info(f"Cluster suite: {len(rec.records)} checks")
    return rec


# ---------------------------------------------------------------------------
# Classical mutation
# ---------------------------------------------------------------------------


def _classical_relation(name: str, sign: int) -> CheckOutcome:
    exmat, moves = minimal_relation(name, sign)
    return CheckOutcome.exact(relation_is_identity(exmat, moves), moves=format_moves(moves))


def _poisson(cfg: SuiteConfig) -> CheckOutcome:
    c = cfg.classical
    results = random_poisson_compat(c.random_seeds, c.max_rank, c.entry_bound, cfg.random_seed)
    failures = [
        {"exmat": e.tolist(), "k": report.k, "pairs": [(b.i, b.j) for b in report.failures]}
        for e, report in results
        if not report.passed
    ]
    return CheckOutcome.exact(not failures, samples=len(results), failures=failures)


def _center(exmats: list[ExMat], surfaces: dict[str, Tri]) -> CheckOutcome:
    cases = [(e, kernel_vectors(e)) for e in exmats]
    cases += [(exmat_from_tri(tri), theta_from_punctures(tri)) for tri in surfaces.values()]
    checked = 0
    for e, thetas in cases:
        for theta in thetas:
            checked += 1
            if not is_casimir(theta, e):
                return CheckOutcome.exact(False, exmat=e.tolist(), theta=theta.coefficients)
    return CheckOutcome.exact(True, vectors=checked)


def _laurent(exmat: ExMat, length: int) -> CheckOutcome:
    ok, paths = laurent_spot_check(exmat, length)
    return CheckOutcome.exact(ok, paths=paths, max_length=length)


def _ensemble(exmat: ExMat, length: int) -> CheckOutcome:
    ok, paths = ensemble_spot_check(exmat, length)
    return CheckOutcome.exact(ok, paths=paths, max_length=length)


def _gc_distance(a: GC, b: GC) -> float:
    scale = max(1.0, abs(float(b.re)), abs(float(b.im)))
    return max(abs(float(a.re) - float(b.re)), abs(float(a.im) - float(b.im))) / scale


def _lambda_points(lam: Lambda, exmat: ExMat, rng: np.random.Generator) -> CheckOutcome:
    """Push a random positive point through μ_k and back, for every k."""
    seed = Seed(exmat)
    point = [gc_exp(GC(float(rng.normal()), float(rng.normal()), lam)) for _ in range(exmat.n)]
    worst = 0.0
    for k in range(exmat.n):
        forward = classical_mutation(seed, k)
        image = [eval_at_point(f, point) for f in forward.images]
        for value in image:
            gc_log(value)
        back = classical_mutation(forward.target, k)
        again = [eval_at_point(f, image) for f in back.images]
        worst = max(worst, max(_gc_distance(a, b) for a, b in zip(again, point)))
    return CheckOutcome(worst <= POINT_TOLERANCE, worst, POINT_TOLERANCE, {"lambda": lam.value})


def classical_suite(cfg: SuiteConfig) -> SuiteRecorder:
    """Rational-function identities of the classical Λ-mutation."""
    rec = SuiteRecorder("classical")
    rng = np.random.default_rng(cfg.random_seed)
    for name in RELATIONS:
        signs = (1, -1) if name in ("R1", "R3") else (1,)
        for sign in signs:
            rec.check(f"relation[{name},{sign:+d}]", "classical.relations", partial(_classical_relation, name, sign))
    if cfg.seed_path is not None:
        seed = load_seed(cfg.seed_path)
        for k in range(seed.rank):
            moves = relation_moves("R1", seed.rank, k)
            rec.check(
                f"relation[R1,k={k + 1}][{cfg.seed_path.name}]",
                "classical.relations",
                partial(lambda e, m: CheckOutcome.exact(relation_is_identity(e, m)), seed.exmat, moves),
            )

    rec.check("poisson_compatibility", "classical.poisson", partial(_poisson, cfg))
    exmats = _random_exmats(rng, 20, 5, cfg.classical.entry_bound)
    rec.check("puncture_center", "classical.center", partial(_center, exmats, _closed_surfaces(cfg)))
    rec.check("laurent[pentagon]", "classical.laurent", partial(_laurent, _rank2(1), cfg.classical.laurent_length))
    rec.check("laurent[torus]", "classical.laurent", partial(_laurent, TORUS_EXMAT, min(cfg.classical.laurent_length, 3)))
    rec.check("ensemble[pentagon]", "classical.ensemble", partial(_ensemble, _rank2(1), cfg.classical.laurent_length))
    rec.check("ensemble[torus]", "classical.ensemble", partial(_ensemble, TORUS_EXMAT, min(cfg.classical.laurent_length, 2)))
    for lam in cfg.lambdas:
        lam = Lambda.parse(lam)
        rec.check(f"lambda_points[{lam.value}]", "classical.lambda_points", partial(_lambda_points, lam, TORUS_EXMAT, rng))
    logger.info(f"Classical suite: {len(rec.records)} checks")
    return rec


# ---------------------------------------------------------------------------
# Quantum mutation
# ---------------------------------------------------------------------------


def _backend_relation(backend, name: str) -> CheckOutcome:
    exmat, moves = minimal_relation(name)
    return CheckOutcome.from_relation(backend.verify(exmat, moves, name))


def _series(check) -> CheckOutcome:
    return CheckOutcome.exact(check.passed, order=check.order, agreement=check.agreement)


def _sharp_conjugation(order: int) -> CheckOutcome:
    agreements = {}
    for value in range(-2, 3):
        for check in verify_sharp_is_psi_conjugation(Seed(_rank2(value)), 0, order):
            agreements[f"eps={value}:{check.name}"] = check.agreement
    return CheckOutcome.exact(all(a >= order for a in agreements.values()), order=order, agreement=agreements)


def _pentagon_control(order: int) -> CheckOutcome:
    check = verify_psi_pentagon(order, perturb=min(3, order))
    return CheckOutcome.exact(check.agreement < order, agreement=check.agreement, order=order)


def _doubled_involution(lam: Lambda) -> CheckOutcome:
    seed = Seed(_rank2(1))
    first = doubled_mutation(seed, 0, lam)
    second = doubled_mutation(Seed(first.target), 0, lam)
    images = [substitute(img, first.images) for img in second.images]
    identity = all(img == QElem.generator(first.source, i) for i, img in enumerate(images))
    return CheckOutcome.exact(identity, generators=len(images), blocks=list(first.source.blocks))


def quantum_suite(cfg: SuiteConfig) -> SuiteRecorder:
    """Relation backends, ψ identities and the doubled torus."""
    rec = SuiteRecorder("quantum")
    q = cfg.quantum
    for backend_name in q.backends:
        backend = create_relation_backend(backend_name, q)
        for name in q.relations:
            rec.check(f"{backend_name}[{name}]", BACKEND_ANCHORS[backend_name], partial(_backend_relation, backend, name))
    rec.check("psi_difference", "quantum.psi_difference", lambda: _series(verify_psi_difference(q.series_order)))
    rec.check("psi_pentagon", "quantum.psi_pentagon", lambda: _series(verify_psi_pentagon(q.series_order)))
    if cfg.controls:
        rec.check("psi_pentagon[control]", "control.negative", partial(_pentagon_control, q.series_order))
    rec.check("sharp_is_psi_conjugation", "quantum.sharp_conjugation", partial(_sharp_conjugation, q.series_order))
    for lam in cfg.lambdas:
        lam = Lambda.parse(lam)
        rec.check(f"doubled_involution[{lam.value}]", "quantum.doubled", partial(_doubled_involution, lam))
    logger.info(f"Quantum suite: {len(rec.records)} checks")
    return rec
