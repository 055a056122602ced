"""Pydantic models for check records and aggregated reports."""

from __future__ import annotations

from enum import Enum
from typing import Any

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Outcome of one check."""

    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"


class CheckRecord(BaseModel):
    """One verified identity or property.

    Attributes:
        suite: Suite the check belongs to
        name: Check name, unique within the suite
        anchor: Registered anchor naming the statement being checked
        status: Outcome
        residual: Observed deviation (None for exact checks)
        tolerance: Threshold the residual is compared against
        runtime: Seconds spent, only kept when timings are recorded
        details: Parameters and diagnostics
    """

    suite: str
    name: str
    anchor: str
    status: CheckStatus
    residual: float | None = None
    tolerance: float | None = None
    runtime: float | None = None
    details: dict[str, Any] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASSED


class Report(BaseModel):
    """All records of a run plus the resolved configuration."""

    records: list[CheckRecord] = Field(default_factory=list)
    config: dict[str, Any] = Field(default_factory=dict)
    warnings: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        """False iff any record failed or errored; an empty report passes."""
        return all(record.passed for record in self.records)

    def counts(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for record in self.records:
            counts[record.status.value] += 1
        return counts

    def merge(self, other: Report) -> Report:
        """Concatenate records and warnings, keeping self's config."""
        return Report(
            records=self.records + other.records,
            config=self.config or other.config,
            warnings=self.warnings + other.warnings,
        )

    def suite(self, name: str) -> list[CheckRecord]:
        return [record for record in self.records if record.suite == name]
