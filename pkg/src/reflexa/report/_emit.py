"""Text and JSON rendering of reports.

Both forms are byte-stable: records keep suite order, mappings keep
insertion order and timings are only written when asked for.
"""

from __future__ import annotations

import json
from io import StringIO
from typing import Any, Literal

from ._records import CheckRecord, Report

Format = Literal["text", "json"]

_STATUS_TAG = {"pass": "PASS", "fail": "FAIL", "unknown": "UNKNOWN"}


def _compact(value: Any) -> str:
    return json.dumps(value, separators=(", ", ": "))


class ReportWriter:
    """Writes a report as plain text into an internal buffer."""

    def __init__(self, timing: bool = False) -> None:
        self._buf = StringIO()
        self._indent = 0
        self._indent_str = "    "
        self._timing = timing

    def getvalue(self) -> str:
        return self._buf.getvalue().rstrip("\n") + "\n"

    # -- Low-level output helpers -------------------------------------------

    def _line(self, text: str = "") -> None:
        if text:
            self._buf.write(self._indent_str * self._indent + text + "\n")
        else:
            self._buf.write("\n")

    # ======================================================================
    # Report
    # ======================================================================

    def write_report(self, report: Report) -> None:
        counts = report.counts()
        self._line(f"suite: {report.suite}")
        self._line(f"field: {report.field}")
        self._line(f"seed: {report.seed}")
        n = len(report.records)
        if n == 0:
            self._line("0 checks")
            return
        noun = "check" if n == 1 else "checks"
        self._line(f"{n} {noun}: {counts['pass']} pass, {counts['fail']} fail, {counts['unknown']} unknown")
        self._line()
        for r in report.records:
            self.write_record(r)

    def write_record(self, r: CheckRecord) -> None:
        head = f"{_STATUS_TAG[r.status]:<7} {r.name}  [{r.anchor}]"
        if self._timing and r.timing is not None:
            head += f"  ({r.timing:.3f}s)"
        self._line(head)
        self._indent += 1
        if r.message:
            self._line(r.message)
        if r.details:
            self._line(f"details: {_compact(r.details)}")
        if r.witness is not None:
            self._line(f"witness: {_compact(r.witness)}")
        if r.reproducer:
            self._line(f"reproduce: {r.reproducer}")
        self._indent -= 1


def report_to_dict(report: Report, timing: bool = False) -> dict:
    exclude = None if timing else {"records": {"__all__": {"timing"}}}
    data = report.model_dump(mode="json", exclude=exclude)
    data["counts"] = report.counts()
    return data


def emit_report(report: Report, format: Format = "text", timing: bool = False) -> bytes:
    """Render ``report``; ``json`` is the machine-readable contract."""
    if format == "json":
        return (json.dumps(report_to_dict(report, timing), indent=2) + "\n").encode("utf-8")
    w = ReportWriter(timing)
    w.write_report(report)
    return w.getvalue().encode("utf-8")
