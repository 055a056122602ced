"""Report and table emission: JSON, CSV and a plain-text summary."""

from __future__ import annotations

import csv
import json
import logging
from collections.abc import Iterable
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .models import Report

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".17g"


def jsonable(value: Any) -> Any:
    """Convert complex, Fraction, numpy and tuple values into JSON-friendly ones."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [float(value.real), float(value.imag)]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (str, int, float)) or value is None:
        return value
    return str(value)


def report_to_json(report: Report, record_timings: bool = False) -> str:
    """Deterministic JSON: sorted keys, runtimes dropped unless record_timings."""
    data = report.model_dump(mode="json")
    if not record_timings:
        for record in data["records"]:
            record["runtime"] = None
    return json.dumps(jsonable(data), sort_keys=True, indent=2, ensure_ascii=False)


def write_report(report: Report, path: Path, record_timings: bool = False) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(report_to_json(report, record_timings) + "\n", encoding="utf-8")
    logger.info(f"Wrote report with {len(report.records)} records to {path}")
    return path


def load_report(path: Path) -> Report:
    return Report.model_validate_json(Path(path).read_text(encoding="utf-8"))


def summary_text(report: Report) -> str:
    """Human-readable summary grouped by suite."""
    lines = []
    suites: dict[str, list] = {}
    for record in report.records:
        suites.setdefault(record.suite, []).append(record)
    for suite, records in suites.items():
        passed = sum(r.passed for r in records)
        lines.append(f"[{suite}] {passed}/{len(records)} passed")
        for r in records:
            mark = "PASS" if r.passed else r.status.value.upper()
            residual = "" if r.residual is None else f" residual={r.residual:.3e}"
            tolerance = "" if r.tolerance is None else f" tol={r.tolerance:.1e}"
            lines.append(f"  [{mark}] {r.name}{residual}{tolerance}  ({r.anchor})")
    for warning in report.warnings:
        lines.append(f"warning: {warning}")
    counts = report.counts()
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(
        f"{verdict}: {counts['passed']} passed, {counts['failed']} failed, {counts['error']} errors"
    )
    return "\n".join(lines)


def _format_cell(value: Any) -> str:
    if isinstance(value, bool) or value is None:
        return "" if value is None else str(value)
    if isinstance(value, (float, np.floating)):
        return format(float(value), FLOAT_FORMAT)
    return str(value)


def emit_table(
    rows: Iterable[dict[str, Any]],
    path: Path,
    fmt: str = "csv",
    columns: list[str] | None = None,
) -> Path:
    """Write rows with a fixed column order; floats keep 17 significant digits.

    Raises:
        ValueError: If the format is unsupported or a row misses a column
    """
    rows = list(rows)
    columns = columns or (list(rows[0].keys()) if rows else [])
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    for row in rows:
        missing = [c for c in columns if c not in row]
        if missing:
            raise ValueError(f"Row is missing columns {missing}")
    if fmt == "csv":
        with open(path, "w", newline="", encoding="utf-8") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(columns)
            for row in rows:
                writer.writerow([_format_cell(row[c]) for c in columns])
    elif fmt == "json":
        ordered = [{c: jsonable(row[c]) for c in columns} for row in rows]
        path.write_text(json.dumps(ordered, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    else:
        raise ValueError(f"Unsupported table format: {fmt}. Supported: ['csv', 'json']")
    logger.info(f"Wrote {len(rows)} rows to {path}")
    return path


def _parse_cell(text: str) -> Any:
    if text == "":
        return None
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    return text


def read_table(path: Path) -> list[dict[str, Any]]:
    """Parse a table written by emit_table."""
    path = Path(path)
    if path.suffix == ".json":
        return json.loads(path.read_text(encoding="utf-8"))
    with open(path, newline="", encoding="utf-8") as f:
        return [{k: _parse_cell(v) for k, v in row.items()} for row in csv.DictReader(f)]
