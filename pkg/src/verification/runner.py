"""Suite orchestration: fan suites out to worker threads and merge their reports."""

from __future__ import annotations

import asyncio
import logging
from collections.abc import Callable, Mapping
from pathlib import Path

from ..cluster import load_seed, load_tri
from ..config.loader import SuiteConfig
from ..reporting import CheckRecord, CheckStatus, Report, anchor, summary_text, write_report
from .exact import classical_suite, cluster_suite, quantum_suite
from .models import SuiteRecorder
from .numeric import opsim_suite, qdilog_suite

logger = logging.getLogger(__name__)

SuiteFn = Callable[[SuiteConfig], SuiteRecorder]

SUITES: dict[str, SuiteFn] = {
    "cluster": cluster_suite,
    "classical": classical_suite,
    "quantum": quantum_suite,
    "qdilog": qdilog_suite,
    "opsim": opsim_suite,
}

# Anchor used when a whole suite crashes before producing records
SUITE_ANCHORS = {
    "cluster": "exmat.relations",
    "classical": "classical.relations",
    "quantum": "quantum.limit",
    "qdilog": "qdilog.difference",
    "opsim": "opsim.pentagon_f_lambda",
}


class SuiteRunner:
    """Runs the configured suites concurrently, bounded by config.workers.

    Each suite is CPU-bound and independent, so it runs in a worker thread;
    results are merged in the configured suite order.
    """

    def __init__(self, config: SuiteConfig, suites: Mapping[str, SuiteFn] | None = None):
        self.config = config
        self.suites = dict(SUITES if suites is None else suites)

    def check_inputs(self) -> None:
        """Load the optional seed and triangulation files once so bad input fails early.

        Raises:
            ConfigError: Naming the invalid field of the input file
        """
        if self.config.seed_path is not None:
            load_seed(self.config.seed_path)
        if self.config.triangulation_path is not None:
            load_tri(self.config.triangulation_path)

    async def _run_one(self, name: str, semaphore: asyncio.Semaphore) -> Report:
        async with semaphore:
            logger.info(f"Running suite '{name}'")
            recorder = await asyncio.to_thread(self.suites[name], self.config)
            report = Report(records=recorder.records, warnings=recorder.warnings)
            counts = report.counts()
            logger.info(
                f"Suite '{name}' finished: {counts['passed']} passed, "
                f"{counts['failed']} failed, {counts['error']} errors"
            )
            return report

    async def run(self) -> Report:
        self.check_inputs()
        unknown = [name for name in self.config.suites if name not in self.suites]
        if unknown:
            raise ValueError(f"Unsupported suite: {unknown}. Supported: {sorted(self.suites)}")

        semaphore = asyncio.Semaphore(self.config.workers)
        tasks = [self._run_one(name, semaphore) for name in self.config.suites]
        results = await asyncio.gather(*tasks, return_exceptions=True)

        report = Report(config=self.config.model_dump(mode="json"))
        for name, result in zip(self.config.suites, results):
            if isinstance(result, BaseException):
                logger.error(f"Suite '{name}' crashed: {type(result).__name__}: {result}")
                result = Report(
                    records=[
                        CheckRecord(
                            suite=name,
                            name="suite",
                            anchor=anchor(SUITE_ANCHORS.get(name, "exmat.relations")),
                            status=CheckStatus.ERROR,
                            details={"error": f"{type(result).__name__}: {result}"},
                        )
                    ]
                )
            report = report.merge(result)
        return report


async def run_suite(config: SuiteConfig) -> Report:
    """Run every suite the config selects; an empty selection gives an empty passing report."""
    return await SuiteRunner(config).run()


def run_suite_sync(config: SuiteConfig) -> Report:
    return asyncio.run(run_suite(config))


def write_outputs(report: Report, config: SuiteConfig) -> list[Path]:
    """Write the JSON report and the text summary where the config asks for them."""
    written = []
    output = config.output
    if output.report_path is not None:
        written.append(write_report(report, output.report_path, config.record_timings))
    if output.summary_path is not None:
        path = Path(output.summary_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(summary_text(report) + "\n", encoding="utf-8")
        written.append(path)
    return written
