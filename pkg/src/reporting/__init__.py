"""Check records, reports and their JSON/CSV/text forms."""

from .models import CheckRecord, CheckStatus, Report
from .anchors import ANCHORS, anchor, lint_anchors
from .emit import (
    emit_table,
    jsonable,
    load_report,
    read_table,
    report_to_json,
    summary_text,
    write_report,
)

__all__ = [
    # Models
    "CheckRecord",
    "CheckStatus",
    "Report",
    # Anchors
    "ANCHORS",
    "anchor",
    "lint_anchors",
    # Emission
    "emit_table",
    "jsonable",
    "load_report",
    "read_table",
    "report_to_json",
    "summary_text",
    "write_report",
]
