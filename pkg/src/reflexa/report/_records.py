"""Check records and reports."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field, model_validator

from reflexa.model import Status, Verdict


class CheckRecord(BaseModel):
    """One executed check.

    ``anchor`` is the mathematical statement the check exercises;
    ``reproducer`` is the command line that reruns just this check and is
    filled in for failures.
    """

    name: str
    anchor: str = Field(min_length=1)
    status: Status
    message: str = ""
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = {}
    timing: float | None = None
    reproducer: str | None = None

    @model_validator(mode="after")
    def _fail_has_witness(self) -> CheckRecord:
        if self.status == "fail" and self.witness is None:
            raise ValueError(f"failing check {self.name!r} has no witness")
        return self

    @classmethod
    def from_verdict(cls, name: str, anchor: str, verdict: Verdict, **extra: Any) -> CheckRecord:
        return cls(
            name=name,
            anchor=anchor,
            status=verdict.status,
            message=verdict.message,
            witness=verdict.witness,
            details=verdict.details,
            **extra,
        )


class Report(BaseModel):
    suite: str
    field: str
    seed: int
    records: list[CheckRecord] = []

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "unknown": 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == "fail"]


def exit_code(report: Report) -> int:
    """0 when no check failed, 1 otherwise."""
    return 0 if report.ok else 1
