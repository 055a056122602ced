"""
Command-Line and Reporting Tests

Runs cluster-lambda subcommands in-process and checks their exit status,
output and the report/table files they write.
"""

import contextlib
import io
import json
import tempfile
from pathlib import Path

import pytest

TORUS = "[[0,2,-2],[-2,0,2],[2,-2,0]]"


def _run(*argv: str) -> tuple[int, str]:
    from src.cli import main

    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(["--quiet", *argv])
    return code, out.getvalue()


def test_parser():
    """Subcommands, required arguments and defaults."""
    print("=" * 60)
    print("TEST 1: Argument parser")
    print("=" * 60)

    from src.cli import build_parser

    parser = build_parser()
    args = parser.parse_args(["cluster", "mutate", "--exmat", TORUS, "--moves", "m1"])
    assert (args.command, args.action, args.moves) == ("cluster", "mutate", "m1")
    args = parser.parse_args(["qverify", "--relation", "R3"])
    assert args.backend == "series"
    assert args.tolerance == 1e-8
    args = parser.parse_args(["verify", "all", "--hbar", "0.5", "--hbar", "1.0"])
    assert args.hbar == [0.5, 1.0]
    print("[PASS] Arguments parsed with their defaults")

    for bad in (["cluster", "mutate", "--moves", "m1"], ["verify", "everything"], ["opsim", "pentagon"]):
        with pytest.raises(SystemExit), contextlib.redirect_stderr(io.StringIO()):
            parser.parse_args(bad)
    print("[PASS] Missing or invalid arguments exit")


def test_cluster_commands():
    """mutate, pushforward, kernel and triangulation."""
    print("\n" + "=" * 60)
    print("TEST 2: cluster subcommands")
    print("=" * 60)

    from src.cluster import ExMat, load_seed

    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "mutated.json"
        code, text = _run("cluster", "mutate", "--exmat", TORUS, "--moves", "m1", "--out", str(out))
        assert code == 0
        assert json.loads(text)["epsilon"] == [[0, -2, 2], [2, 0, -2], [-2, 2, 0]]
        assert load_seed(out).exmat == ExMat(((0, -2, 2), (2, 0, -2), (-2, 2, 0)))
    print("[PASS] cluster mutate prints and writes the mutated seed")

    code, text = _run("cluster", "pushforward", "--exmat", "[[0,1],[-1,0]]", "--moves", "m1,m2,m1,m2,m1", "--emit", "json")
    assert code == 0
    data = json.loads(text)
    assert data["images"] == {"Z1'": "Z2", "Z2'": "Z1"}
    print(f"[PASS] Five mutations push forward to {data['images']}")

    point = json.dumps([{"lambda": 0, "re": "1", "im": "0"}, {"lambda": 0, "re": "2", "im": "1"}])
    code, text = _run("cluster", "pushforward", "--exmat", "[[0,1],[-1,0]]", "--moves", "m1", "--point", point)
    assert code == 0
    assert "Z2' =" in text and "at point" in text
    print("[PASS] Text output with evaluation at an R_0 point")

    code, text = _run("cluster", "kernel", "--exmat", TORUS)
    assert json.loads(text)["kernel"] == [[1, 1, 1]]
    code, text = _run("cluster", "triangulation", "--stock", "torus", "--flip", "0")
    data = json.loads(text)
    assert code == 0
    assert list(data["theta"].values()) == [[2, 2, 2]]
    assert all(data["theta_in_kernel"].values())
    print("[PASS] Kernel and flipped punctured torus")


def test_quantum_and_operator_commands():
    """qverify, qdilog eval/table and opsim symbol commands."""
    print("\n" + "=" * 60)
    print("TEST 3: qverify, qdilog and opsim subcommands")
    print("=" * 60)

    from src.qdilog import TABLE_COLUMNS
    from src.reporting import read_table

    code, text = _run("qverify", "--relation", "pentagon", "--backend", "classical")
    assert code == 0
    assert "PASS" in text
    code, _ = _run("cluster", "qverify", "--relation", "R1", "--order", "6")
    assert code == 0
    print("[PASS] qverify at top level and under cluster")

    code, text = _run("qdilog", "eval", "--h", "1", "--z", "0.1")
    data = json.loads(text)
    assert code == 0
    assert data["abs"] == pytest.approx(1.0, abs=1e-8)
    code, text = _run("qdilog", "eval", "--h", "1i", "--z", "0.2")
    assert json.loads(text)["method"] == "compact_ratio"
    print("[PASS] qdilog eval picks the integral for real h and the ratio for imaginary h")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "phi.csv"
        code, _ = _run("qdilog", "table", "--h", "0.7", "--re=-1:1:3", "--out", str(path))
        assert code == 0
        rows = read_table(path)
        assert len(rows) == 3
        assert list(rows[0]) == TABLE_COLUMNS
        assert rows[1]["z_re"] == 0
    print("[PASS] qdilog table writes one row per grid point")

    code, text = _run("opsim", "conjugation", "--exmat", TORUS, "--k", "2")
    assert code == 0
    assert all(json.loads(text)["images"].values())
    code, text = _run("opsim", "symbols", "--exmat", "[[0,1],[-1,0]]")
    assert code == 0 and "x_ring" in text
    print("[PASS] opsim conjugation and symbols")


def test_exit_codes():
    """0 on success, 2 for unreadable input."""
    print("\n" + "=" * 60)
    print("TEST 4: Exit codes")
    print("=" * 60)

    with tempfile.TemporaryDirectory() as tmp:
        broken = Path(tmp) / "seed.json"
        broken.write_text('{"rank": 2, "epsilon": [[0, 1], [1, 0]]}', encoding="utf-8")
        with contextlib.redirect_stderr(io.StringIO()) as err:
            code, _ = _run("cluster", "kernel", "--seed", str(broken))
        assert code == 2
        assert "Error" in err.getvalue()
    print("[PASS] Non-skew seed file exits with 2")

    with contextlib.redirect_stderr(io.StringIO()):
        assert _run("cluster", "mutate", "--exmat", "not json", "--moves", "m1")[0] == 2
        assert _run("cluster", "mutate", "--exmat", TORUS, "--moves", "m7")[0] == 2
        assert _run("verify", "none", "--profile", "nonexistent")[0] == 2
    print("[PASS] Bad JSON, bad moves and unknown profiles exit with 2")

    assert _run("verify", "none")[0] == 0
    print("[PASS] verify none exits with 0")


def test_reports():
    """Report determinism and table round trips."""
    print("\n" + "=" * 60)
    print("TEST 5: Reports and tables")
    print("=" * 60)

    from src.reporting import (
        CheckRecord,
        CheckStatus,
        Report,
        anchor,
        emit_table,
        lint_anchors,
        load_report,
        read_table,
        summary_text,
        write_report,
    )

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "report.json"
        summary = Path(tmp) / "summary.txt"
        assert _run("verify", "none", "--report", str(path), "--summary", str(summary))[0] == 0
        first = path.read_text(encoding="utf-8")
        assert _run("verify", "none", "--report", str(path), "--summary", str(summary))[0] == 0
        assert path.read_text(encoding="utf-8") == first
        assert json.loads(first)["records"] == []
        assert summary.read_text(encoding="utf-8").startswith("PASS")
        print("[PASS] Identical runs write byte-identical reports")

        record = CheckRecord(
            suite="qdilog",
            name="unitarity",
            anchor=anchor("qdilog.unitarity"),
            status=CheckStatus.PASSED,
            residual=1.2e-12,
            tolerance=1e-8,
            runtime=0.25,
        )
        report = Report(records=[record], warnings=["grid too coarse"])
        write_report(report, path)
        loaded = load_report(path)
        assert loaded.records[0].runtime is None
        assert loaded.records[0].residual == 1.2e-12
        write_report(report, path, record_timings=True)
        assert load_report(path).records[0].runtime == 0.25
        assert lint_anchors(loaded) == []
        assert "[qdilog] 1/1 passed" in summary_text(report)
        print("[PASS] Runtimes only kept when asked; anchors registered")

        with pytest.raises(KeyError):
            anchor("qdilog.unknown")

        rows = [{"x": 0.1, "label": "a", "n": 3}, {"x": 1 / 3, "label": "b", "n": -1}]
        for fmt in ("csv", "json"):
            table = emit_table(rows, Path(tmp) / f"t.{fmt}", fmt, ["n", "x", "label"])
            back = read_table(table)
            assert [list(row) for row in back] == [["n", "x", "label"]] * 2
            assert back[1]["x"] == 1 / 3
            assert back[1]["n"] == -1
        with pytest.raises(ValueError):
            emit_table(rows, Path(tmp) / "t.csv", "csv", ["missing"])
        with pytest.raises(ValueError):
            emit_table(rows, Path(tmp) / "t.xml", "xml")
        print("[PASS] CSV and JSON tables keep column order and 17 significant digits")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("COMMAND-LINE AND REPORTING TESTS")
    print("=" * 60 + "\n")

    test_parser()
    test_cluster_commands()
    test_quantum_and_operator_commands()
    test_exit_codes()
    test_reports()

    print("\n" + "=" * 60)
    print("ALL TESTS PASSED!")
    print("=" * 60)


if __name__ == "__main__":
    run_all_tests()
