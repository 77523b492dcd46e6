"""Identity outcomes and their per-suite summary."""

from __future__ import annotations

import pandas as pd
from attrs import asdict, define, field

COLUMNS = ["suite", "identity", "instance", "passed", "detail"]


@define
class IdentityResult:
    """One evaluation of one identity on one instance."""

    suite: str
    identity: str
    instance: str
    passed: bool
    detail: str = ""


@define
class SuiteRecorder:
    """Collects :class:`IdentityResult` rows for one suite."""

    suite: str
    results: list = field(factory=list)

    def check(self, identity: str, instance, left, right=True, detail: str = "") -> bool:
        """Record whether ``left == right``; mismatches keep both sides."""
        passed = left == right
        if not passed and not detail:
            detail = f"{left} != {right}"
        self.results.append(IdentityResult(self.suite, identity, str(instance), bool(passed), detail))
        return passed


def results_frame(results) -> pd.DataFrame:
    return pd.DataFrame([asdict(r) for r in results], columns=COLUMNS)


def summarize(results) -> pd.DataFrame:
    """Per suite and identity: number of checks and number of failures, in
    the order the identities were first checked."""
    frame = results_frame(results)
    frame["failed"] = ~frame["passed"].astype(bool)
    summary = frame.groupby(["suite", "identity"], sort=False).agg(
        checks=("passed", "size"), failures=("failed", "sum")
    )
    return summary.reset_index()


def report_lines(results) -> list:
    """Text report: one line per identity, the first failures, a total."""
    results = list(results)
    if not results:
        return ["total: 0 checks, 0 failures"]
    lines = []
    for row in summarize(results).itertuples(index=False):
        status = "ok" if row.failures == 0 else "FAIL"
        lines.append(
            f"{row.suite} | {row.identity}: {row.checks - row.failures}/{row.checks} {status}"
        )
    failures = [r for r in results if not r.passed]
    for result in failures[:20]:
        lines.append(f"failed {result.suite} | {result.identity} on {result.instance}: {result.detail}")
    lines.append(f"total: {len(results)} checks, {len(failures)} failures")
    return lines
