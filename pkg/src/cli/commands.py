"""Subcommand handlers. Each returns the process exit status."""

from __future__ import annotations

import argparse
import json
import logging
import time

import numpy as np

from ..classical import eval_at_point, pullback_along
from ..cluster import (
    STOCK_TRIANGULATIONS,
    ExMat,
    Seed,
    apply_moves,
    exmat_from_tri,
    flip_tri,
    format_moves,
    kernel_vectors,
    load_seed,
    load_tri,
    minimal_relation,
    parse_moves,
    relation_moves,
    save_seed,
    save_tri,
    theta_from_punctures,
)
from ..config import (
    ALL_SUITES,
    QDilogConfig,
    QuantumConfig,
    create_relation_backend,
    load_config,
    parse_complex,
    validate_config,
)
from ..errors import UsageError
from ..gencomplex import gc_from_json, gc_to_json
from ..opsim import (
    HBAR,
    bracket_matrix,
    check_kprime_conjugation,
    kprime_linear,
    substitution_grid_check,
    verify_pentagon_lambda_minus1,
    verify_pentagon_lambda_plus1,
    x_ring,
    x_symbol,
    x_tilde,
    y_symbol,
)
from ..qdilog import TABLE_COLUMNS, ShiftMode, phi, phi_compact_ratio, value_table
from ..reporting import CheckRecord, CheckStatus, Report, anchor, emit_table, jsonable, summary_text, write_report
from ..settings import GRID_1D_EXTENT, GRID_1D_POINTS, GRID_2D_EXTENT, GRID_2D_POINTS, MODULAR_DIM
from ..verification import CheckOutcome, SuiteRecorder, qdilog_suite, run_suite_sync, write_outputs
from ..verification.exact import BACKEND_ANCHORS

logger = logging.getLogger(__name__)


def _print_json(data) -> None:
    print(json.dumps(jsonable(data), indent=2, ensure_ascii=False))


def _load_seed_arg(args: argparse.Namespace) -> Seed:
    if args.seed is not None:
        return load_seed(args.seed)
    try:
        rows = json.loads(args.exmat)
    except json.JSONDecodeError as e:
        raise UsageError(f"--exmat is not valid JSON: {e}") from e
    return Seed(ExMat(tuple(tuple(row) for row in rows)))


def _finish(report: Report, args: argparse.Namespace) -> int:
    print(summary_text(report))
    if getattr(args, "report", None) is not None:
        write_report(report, args.report, args.record_timings)
    return 0 if report.passed else 1


def _single_record(suite: str, name: str, anchor_key: str, outcome: CheckOutcome, start: float) -> Report:
    record = CheckRecord(
        suite=suite,
        name=name,
        anchor=anchor(anchor_key),
        status=CheckStatus.PASSED if outcome.passed else CheckStatus.FAILED,
        residual=outcome.residual,
        tolerance=outcome.tolerance,
        runtime=time.perf_counter() - start,
        details=jsonable(outcome.details),
    )
    return Report(records=[record], warnings=outcome.warnings)


# ---------------------------------------------------------------------------
# cluster
# ---------------------------------------------------------------------------


def cluster_mutate(args: argparse.Namespace) -> int:
    seed = _load_seed_arg(args)
    moves = parse_moves(args.moves, seed.rank)
    result = apply_moves(seed, moves)
    _print_json({"moves": format_moves(moves), "epsilon": result.exmat.tolist(), "labels": list(result.labels)})
    if args.out is not None:
        save_seed(result, args.out)
        logger.info(f"Wrote seed to {args.out}")
    return 0


def cluster_pushforward(args: argparse.Namespace) -> int:
    seed = _load_seed_arg(args)
    moves = parse_moves(args.moves, seed.rank)
    pullback = pullback_along(seed, moves)
    images = {f"Z{i + 1}'": str(image) for i, image in enumerate(pullback.images)}
    values = None
    if args.point:
        point = [gc_from_json(item) for item in json.loads(args.point)]
        if len(point) != seed.rank:
            raise UsageError(f"--point has {len(point)} coordinates, expected {seed.rank}")
        values = {key: gc_to_json(eval_at_point(image, point)) for key, image in zip(images, pullback.images)}
    if args.emit == "json":
        _print_json({"moves": format_moves(moves), "target": pullback.target.exmat.tolist(), "images": images, "values": values})
    else:
        for key, text in images.items():
            print(f"{key} = {text}")
            if values:
                print(f"    at point: {values[key]}")
    return 0


def cluster_kernel(args: argparse.Namespace) -> int:
    seed = _load_seed_arg(args)
    _print_json({"epsilon": seed.exmat.tolist(), "kernel": [v.coefficients for v in kernel_vectors(seed.exmat)]})
    return 0


def cluster_triangulation(args: argparse.Namespace) -> int:
    tri = load_tri(args.tri) if args.tri is not None else STOCK_TRIANGULATIONS[args.stock]()
    flips = [int(a) for a in args.flip.split(",") if a.strip()]
    for arc in flips:
        tri = flip_tri(tri, arc)
    e = exmat_from_tri(tri)
    thetas = theta_from_punctures(tri)
    _print_json(
        {
            "flips": flips,
            "epsilon": e.tolist(),
            "theta": {t.tag: t.coefficients for t in thetas},
            "theta_in_kernel": {t.tag: t.in_kernel(e) for t in thetas} if tri.closed else None,
            "triangles": tri.triangles,
        }
    )
    if args.out is not None:
        save_tri(tri, args.out)
    return 0


def qverify(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.epsilon is not None:
        seed = load_seed(args.epsilon)
        exmat = seed.exmat
        moves = relation_moves(args.relation, exmat.n, args.i - 1, args.j - 1)
    else:
        exmat, moves = minimal_relation(args.relation)
    update = {}
    if args.order is not None:
        update["series_order"] = args.order
    if args.orders:
        update["matrix_orders"] = [int(n) for n in args.orders.split(",")]
    config = QuantumConfig(matrix_tolerance=args.tolerance, **update)
    backend = create_relation_backend(args.backend, config)
    result = backend.verify(exmat, moves, args.relation)
    outcome = CheckOutcome.from_relation(result)
    outcome.details["moves"] = format_moves(moves)
    report = _single_record("quantum", f"{args.backend}[{args.relation}]", BACKEND_ANCHORS[args.backend], outcome, start)
    return _finish(report, args)


# ---------------------------------------------------------------------------
# qdilog
# ---------------------------------------------------------------------------


def qdilog_eval(args: argparse.Namespace) -> int:
    h = parse_complex(args.h)
    z = parse_complex(args.z)
    if args.method == "ratio" or (args.method == "auto" and h.real == 0 and h.imag > 0):
        result = phi_compact_ratio(h, z)
    else:
        result = phi(h, z, mode=ShiftMode(args.shift))
    _print_json(
        {
            "h": h,
            "z": z,
            "value": result.value,
            "abs": abs(result.value),
            "est_error": result.est_error,
            "method": result.method.value,
            "shifts": result.shifts,
        }
    )
    return 0


def qdilog_suite_command(args: argparse.Namespace) -> int:
    config = load_config().model_copy(
        update={
            "suites": ["qdilog"],
            "qdilog": QDilogConfig(h_values=args.h, samples=args.samples),
            "hbars": [],
        }
    )
    recorder: SuiteRecorder = qdilog_suite(config)
    report = Report(records=recorder.records, warnings=recorder.warnings, config=config.model_dump(mode="json"))
    return _finish(report, args)


def _axis(text: str) -> np.ndarray:
    try:
        start, stop, count = text.split(":")
        return np.linspace(float(start), float(stop), int(count))
    except ValueError as e:
        raise UsageError(f"Expected start:stop:count, got {text!r}") from e


def qdilog_table(args: argparse.Namespace) -> int:
    h = parse_complex(args.h)
    zs = [complex(x, y) for y in _axis(args.im) for x in _axis(args.re)]
    rows = value_table(h, zs)
    path = emit_table(rows, args.out, args.format, TABLE_COLUMNS)
    print(f"Wrote {len(rows)} rows to {path}")
    return 0


# ---------------------------------------------------------------------------
# opsim
# ---------------------------------------------------------------------------


def opsim_pentagon(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.lam == -1:
        result = verify_pentagon_lambda_minus1(
            args.hbar, args.n or GRID_1D_POINTS, args.extent or GRID_1D_EXTENT, drop_middle=args.control
        )
        anchor_key = "opsim.pentagon_minus1"
    elif args.lam == 0:
        result = substitution_grid_check(args.n or GRID_2D_POINTS, args.extent or GRID_2D_EXTENT, drop_middle=args.control)
        anchor_key = "opsim.substitution"
    else:
        result = verify_pentagon_lambda_plus1(args.hbar, args.n or MODULAR_DIM, drop_middle=args.control)
        anchor_key = "opsim.pentagon_f_lambda"
    if args.control:
        outcome = CheckOutcome.control(result)
        anchor_key = "control.negative"
    else:
        outcome = CheckOutcome.from_pentagon(result)
    return _finish(_single_record("opsim", result.name, anchor_key, outcome, start), args)


def opsim_conjugation(args: argparse.Namespace) -> int:
    seed = _load_seed_arg(args)
    k = args.k - 1
    results = check_kprime_conjugation(seed.exmat, k)
    _print_json({"k": args.k, "matrix": kprime_linear(seed.exmat, k).matrix, "images": results})
    return 0 if all(results.values()) else 1


def opsim_symbols(args: argparse.Namespace) -> int:
    seed = _load_seed_arg(args)
    e = seed.exmat
    families = {"x": x_symbol, "y": y_symbol, "x_ring": x_ring, "x_tilde": x_tilde}
    for name, builder in families.items():
        matrix = bracket_matrix([builder(e, i) for i in range(e.n)])
        print(f"[{name}_i, {name}_j] =")
        print(f"  {matrix.tolist()}")
    print(f"(ℏ is the symbol {HBAR})")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


def verify(args: argparse.Namespace) -> int:
    config = load_config(args.profile, args.config)
    update: dict = {}
    if args.suite == "all":
        update["suites"] = list(ALL_SUITES)
    elif args.suite == "none":
        update["suites"] = []
    else:
        update["suites"] = [args.suite]
    if args.lam is not None:
        update["lam"] = args.lam
    if args.hbar:
        update["hbars"] = args.hbar
    if args.workers is not None:
        update["workers"] = args.workers
    if args.seed_file is not None:
        update["seed_path"] = args.seed_file
    if args.tri_file is not None:
        update["triangulation_path"] = args.tri_file
    if args.random_seed is not None:
        update["random_seed"] = args.random_seed
    if args.no_controls:
        update["controls"] = False
    if args.record_timings:
        update["record_timings"] = True
    output = config.output.model_dump()
    if args.report is not None:
        output["report_path"] = args.report
    if args.summary is not None:
        output["summary_path"] = args.summary
    update["output"] = output

    config = validate_config({**config.model_dump(), **update}, source="command line")
    report = run_suite_sync(config)
    print(summary_text(report))
    for path in write_outputs(report, config):
        logger.info(f"Wrote {path}")
    return 0 if report.passed else 1


HANDLERS = {
    ("cluster", "mutate"): cluster_mutate,
    ("cluster", "pushforward"): cluster_pushforward,
    ("cluster", "kernel"): cluster_kernel,
    ("cluster", "triangulation"): cluster_triangulation,
    ("cluster", "qverify"): qverify,
    ("qverify", None): qverify,
    ("qdilog", "eval"): qdilog_eval,
    ("qdilog", "suite"): qdilog_suite_command,
    ("qdilog", "table"): qdilog_table,
    ("opsim", "pentagon"): opsim_pentagon,
    ("opsim", "conjugation"): opsim_conjugation,
    ("opsim", "symbols"): opsim_symbols,
    ("verify", None): verify,
}


def dispatch(args: argparse.Namespace) -> int:
    handler = HANDLERS[(args.command, getattr(args, "action", None))]
    return handler(args)
