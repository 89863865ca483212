"""Machine-readable verification reports: one JSON object per check.

status is "pass" or "fail" for decidable checks and "evidence" for checks
that support a claim without proving it (fingerprints, mod-p sieves).
Any "fail" must surface as a nonzero process exit code.  elapsed_ms is the
only field excluded from the byte-for-byte determinism guarantee.
"""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass

PASS = "pass"
FAIL = "fail"
EVIDENCE = "evidence"


@dataclass
class VerificationReport:
    check_id: str
    status: str
    claim_ref: str
    details: dict
    elapsed_ms: int = 0

    def to_json_line(self) -> str:
        payload = {
            "check_id": self.check_id,
            "status": self.status,
            "claim_ref": self.claim_ref,
            "details": self.details,
            "elapsed_ms": self.elapsed_ms,
        }
        return json.dumps(payload, sort_keys=True)


class ReportSink:
    """Collects reports, mirrors them as JSON lines, and tracks failure."""

    def __init__(self, stream=None, human_stream=None, json_only: bool = False):
        self.stream = stream if stream is not None else sys.stdout
        self.human_stream = human_stream if human_stream is not None else sys.stderr
        self.json_only = json_only
        self.reports: list[VerificationReport] = []

    def emit(self, report: VerificationReport):
        self.reports.append(report)
        print(report.to_json_line(), file=self.stream)
        if not self.json_only:
            print(f"[{report.status.upper():8s}] {report.check_id}: {report.claim_ref}",
                  file=self.human_stream)

    def emit_raw(self, payload: dict):
        """A non-report JSON line, e.g. one object per found search point."""
        print(json.dumps(payload, sort_keys=True), file=self.stream)

    def run_check(self, check_id: str, claim_ref: str, fn):
        """Time a check returning (status, details) and emit the report."""
        start = time.monotonic()
        try:
            status, details = fn()
        except Exception as exc:  # surfaced as a failing report, not a crash
            status, details = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
        elapsed = int((time.monotonic() - start) * 1000)
        report = VerificationReport(check_id, status, claim_ref, details, elapsed)
        self.emit(report)
        return report

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.reports)

    def summary_line(self) -> str:
        counts = {PASS: 0, FAIL: 0, EVIDENCE: 0}
        for r in self.reports:
            counts[r.status] = counts.get(r.status, 0) + 1
        return (f"{len(self.reports)} checks: {counts[PASS]} pass, "
                f"{counts[FAIL]} fail, {counts[EVIDENCE]} evidence")
