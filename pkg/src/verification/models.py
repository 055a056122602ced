"""Check outcomes and the per-suite recorder that turns them into report records."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from ..errors import ClusterLambdaError
from ..reporting import CheckRecord, CheckStatus, anchor, jsonable

logger = logging.getLogger(__name__)

RECOVERABLE = (ClusterLambdaError, ArithmeticError, ValueError, IndexError)


@dataclass
class CheckOutcome:
    """What a single check function returns.

    Attributes:
        passed: Whether the identity held
        residual: Observed deviation (None for exact checks)
        tolerance: Threshold the residual was compared against
        details: Parameters and diagnostics
        warnings: Accuracy warnings raised while checking
    """

    passed: bool
    residual: float | None = None
    tolerance: float | None = None
    details: dict[str, Any] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @classmethod
    def exact(cls, passed: bool, **details) -> CheckOutcome:
        return cls(bool(passed), details=details)

    @classmethod
    def from_residuals(cls, residuals: list, **details) -> CheckOutcome:
        """Worst of several Residual-like results sharing one tolerance."""
        worst = max(residuals, key=lambda r: r.residual / r.tolerance)
        return cls(
            all(r.passed for r in residuals),
            float(worst.residual),
            float(worst.tolerance),
            {**details, "samples": len(residuals), "worst": worst.details},
        )

    @classmethod
    def from_pentagon(cls, result) -> CheckOutcome:
        return cls(
            result.passed,
            float(result.deviation),
            float(result.tolerance),
            {
                "lambda": result.lam.value,
                "hbar": result.hbar,
                "points": result.points,
                "extent": result.extent,
                "deviations": result.deviations,
                "phases": result.phases,
            },
            list(result.warnings),
        )

    @classmethod
    def control(cls, result, threshold: float = 1e-1) -> CheckOutcome:
        """A negative control passes when the broken identity misses by more than threshold."""
        return cls(
            result.deviation > threshold,
            float(result.deviation),
            threshold,
            {"control_of": result.name, "lambda": result.lam.value, "points": result.points},
        )

    @classmethod
    def from_relation(cls, result) -> CheckOutcome:
        return cls(
            result.passed,
            float(result.deviation),
            None,
            {"backend": result.backend.value, **result.details},
        )


class SuiteRecorder:
    """Runs check callables for one suite and collects CheckRecords.

    Errors raised by the library (ClusterLambdaError and the builtin errors it
    derives from) become ERROR records; anything else propagates.
    """

    def __init__(self, suite: str):
        self.suite = suite
        self.records: list[CheckRecord] = []
        self.warnings: list[str] = []

    def check(self, name: str, anchor_key: str, func: Callable[[], CheckOutcome]) -> CheckRecord:
        start = time.perf_counter()
        try:
            outcome = func()
        except RECOVERABLE as e:
            return self.error(name, anchor_key, e, time.perf_counter() - start)

        status = CheckStatus.PASSED if outcome.passed else CheckStatus.FAILED
        record = CheckRecord(
            suite=self.suite,
            name=name,
            anchor=anchor(anchor_key),
            status=status,
            residual=outcome.residual,
            tolerance=outcome.tolerance,
            runtime=time.perf_counter() - start,
            details=jsonable(outcome.details),
        )
        self.records.append(record)
        self.warnings.extend(f"[{self.suite}] {name}: {w}" for w in outcome.warnings)
        if status is CheckStatus.FAILED:
            logger.warning(f"[{self.suite}] {name} failed (residual={outcome.residual})")
        else:
            logger.debug(f"[{self.suite}] {name} passed")
        return record

    def error(self, name: str, anchor_key: str, exc: BaseException, runtime: float | None = None) -> CheckRecord:
        """Record a check that could not be evaluated."""
        logger.error(f"[{self.suite}] {name}: {type(exc).__name__}: {exc}")
        record = CheckRecord(
            suite=self.suite,
            name=name,
            anchor=anchor(anchor_key),
            status=CheckStatus.ERROR,
            runtime=runtime,
            details={"error": f"{type(exc).__name__}: {exc}"},
        )
        self.records.append(record)
        return record
