"""Argument parser for the cluster-lambda command line."""

from __future__ import annotations

import argparse
from pathlib import Path

from ..cluster import STOCK_TRIANGULATIONS
from ..config.loader import ALL_SUITES


def _add_seed_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--seed", type=Path, help="Seed JSON file {rank, epsilon, labels}")
    source.add_argument("--exmat", help='Exchange matrix as JSON, e.g. "[[0,1],[-1,0]]"')


def _add_report(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--report", type=Path, help="Write a JSON report to this path")
    parser.add_argument(
        "--record-timings",
        action="store_true",
        help="Keep per-check runtimes in the JSON report",
    )


def _cluster_parser(subparsers) -> None:
    cluster = subparsers.add_parser("cluster", help="Exchange matrices, seeds and triangulations")
    commands = cluster.add_subparsers(dest="action", required=True)

    mutate = commands.add_parser("mutate", help="Apply a move sequence to a seed")
    _add_seed_source(mutate)
    mutate.add_argument("--moves", required=True, help='Moves in time order, e.g. "m1,m3,p(1 2)"')
    mutate.add_argument("--out", type=Path, help="Write the resulting seed JSON here")

    push = commands.add_parser("pushforward", help="Classical pullback along a move sequence")
    _add_seed_source(push)
    push.add_argument("--moves", required=True, help="Moves in time order")
    push.add_argument("--emit", choices=["json", "text"], default="text")
    push.add_argument(
        "--point",
        help='Evaluate at a point: JSON list of {"lambda", "re", "im"} objects, one per index',
    )

    kernel = commands.add_parser("kernel", help="Integer kernel basis of ε")
    _add_seed_source(kernel)

    tri = commands.add_parser("triangulation", help="Exchange matrix and puncture vectors of a triangulation")
    source = tri.add_mutually_exclusive_group(required=True)
    source.add_argument("--tri", type=Path, help="Triangulation JSON file")
    source.add_argument("--stock", choices=sorted(STOCK_TRIANGULATIONS))
    tri.add_argument("--flip", default="", help='Arcs to flip in order, e.g. "0,2,1"')
    tri.add_argument("--out", type=Path, help="Write the flipped triangulation JSON here")

    _qverify_arguments(commands.add_parser("qverify", help="Alias of the top-level qverify command"))


def _qverify_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--relation", required=True, help="R1..R5 or pentagon, quadrilateral, ...")
    parser.add_argument("--epsilon", type=Path, help="Seed JSON; default is the smallest seed for the relation")
    parser.add_argument("--i", type=int, default=1, help="First mutation index (1-based)")
    parser.add_argument("--j", type=int, default=2, help="Second mutation index (1-based)")
    parser.add_argument("--backend", choices=["classical", "series", "matrix"], default="series")
    parser.add_argument("--order", type=int, default=None, help="Series truncation order")
    parser.add_argument("--N", dest="orders", default=None, help='Odd matrix orders, e.g. "5,7,11"')
    parser.add_argument("--tolerance", type=float, default=1e-8, help="Matrix-model tolerance")
    _add_report(parser)


def _qdilog_parser(subparsers) -> None:
    qdilog = subparsers.add_parser("qdilog", help="Quantum dilogarithm evaluation and property checks")
    commands = qdilog.add_subparsers(dest="action", required=True)

    evaluate = commands.add_parser("eval", help="Evaluate Φ^h(z)")
    evaluate.add_argument("--h", required=True, help='h, e.g. "0.3", "i1.0" or "0.2+1i"')
    evaluate.add_argument("--z", required=True, help='z, e.g. "0.1+0.2i"')
    evaluate.add_argument("--method", choices=["auto", "integral", "ratio"], default="auto")
    evaluate.add_argument("--shift", choices=["unit", "h"], default="unit", help="Strip-escape family")

    suite = commands.add_parser("suite", help="Run the property suite for one or more h")
    suite.add_argument("--h", action="append", required=True, help="Repeat for several h")
    suite.add_argument("--samples", type=int, default=5, help="Grid points per axis, or the Weyl pair dimension for Λ=+1")
    _add_report(suite)

    table = commands.add_parser("table", help="Tabulate Φ^h over a rectangular z-grid")
    table.add_argument("--h", required=True)
    table.add_argument("--re", default="-3:3:13", help="start:stop:count of Re z")
    table.add_argument("--im", default="0:0:1", help="start:stop:count of Im z")
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.add_argument("--out", type=Path, required=True)


def _opsim_parser(subparsers) -> None:
    opsim = subparsers.add_parser("opsim", help="Operator-level symbol and grid checks")
    commands = opsim.add_subparsers(dest="action", required=True)

    pentagon = commands.add_parser("pentagon", help="Pentagon identity for F_Λ on a grid")
    pentagon.add_argument("--lambda", dest="lam", type=int, choices=[-1, 0, 1], required=True)
    pentagon.add_argument("--hbar", type=float, default=1.0)
    pentagon.add_argument("--n", type=int, default=None, help="Grid points per axis")
    pentagon.add_argument("--extent", type=float, default=None, help="Box length")
    pentagon.add_argument("--control", action="store_true", help="Drop the middle factor (must fail)")
    _add_report(pentagon)

    conjugation = commands.add_parser("conjugation", help="K′ conjugation formulas at the symbol level")
    _add_seed_source(conjugation)
    conjugation.add_argument("--k", type=int, required=True, help="Mutation index (1-based)")

    symbols = commands.add_parser("symbols", help="Bracket matrices of x, y, x̊, x̃")
    _add_seed_source(symbols)


def _verify_parser(subparsers) -> None:
    verify = subparsers.add_parser("verify", help="Run verification suites and aggregate a report")
    verify.add_argument("suite", choices=[*ALL_SUITES, "all", "none"])
    verify.add_argument("--profile", default=None, help="Profile name (default: CLUSTER_LAMBDA_PROFILE)")
    verify.add_argument("--config", type=Path, default=None, help="Profile file (default: src/config/profiles.yaml)")
    verify.add_argument("--lambda", dest="lam", type=int, choices=[-1, 0, 1], default=None)
    verify.add_argument("--hbar", type=float, action="append", help="Repeat for several ℏ")
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--seed-file", type=Path, default=None)
    verify.add_argument("--tri-file", type=Path, default=None)
    verify.add_argument("--random-seed", type=int, default=None)
    verify.add_argument("--summary", type=Path, default=None, help="Write the text summary here")
    verify.add_argument("--no-controls", action="store_true", help="Skip negative controls")
    _add_report(verify)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cluster-lambda",
        description="Cluster mutation over R_Λ, quantum dilogarithms and operator pentagon checks",
    )
    parser.add_argument("--quiet", "-q", action="store_true", help="Only log warnings and errors")
    subparsers = parser.add_subparsers(dest="command", required=True)
    _cluster_parser(subparsers)
    _qverify_arguments(subparsers.add_parser("qverify", help="Quantum relation check with one backend"))
    _qdilog_parser(subparsers)
    _opsim_parser(subparsers)
    _verify_parser(subparsers)
    return parser
