"""Verification suites and their orchestration."""

from .models import CheckOutcome, SuiteRecorder
from .exact import classical_suite, cluster_suite, quantum_suite
from .numeric import opsim_suite, qdilog_suite, residual_anchor
from .runner import SUITES, SuiteRunner, run_suite, run_suite_sync, write_outputs

__all__ = [
    # Models
    "CheckOutcome",
    "SuiteRecorder",
    # Suites
    "SUITES",
    "classical_suite",
    "cluster_suite",
    "opsim_suite",
    "qdilog_suite",
    "quantum_suite",
    "residual_anchor",
    # Orchestration
    "SuiteRunner",
    "run_suite",
    "run_suite_sync",
    "write_outputs",
]
