"""Outcome of a mathematical check."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, model_validator

Status = Literal["pass", "fail", "unknown"]


class Verdict(BaseModel):
    """Result of a check: a status, a short message and, on failure, a witness.

    Witnesses and details hold JSON-ready values (scalars are strings in
    the field's serialized form).
    """

    status: Status
    message: str = ""
    witness: dict[str, Any] | None = None
    details: dict[str, Any] = {}

    @model_validator(mode="after")
    def _fail_has_witness(self) -> Verdict:
        if self.status == "fail" and self.witness is None:
            raise ValueError("a failing verdict must carry a witness")
        return self

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    @classmethod
    def passed(cls, message: str = "", **details: Any) -> Verdict:
        return cls(status="pass", message=message, details=details)

    @classmethod
    def failed(cls, message: str, witness: dict[str, Any], **details: Any) -> Verdict:
        return cls(status="fail", message=message, witness=witness, details=details)

    @classmethod
    def unknown(cls, message: str, **details: Any) -> Verdict:
        return cls(status="unknown", message=message, details=details)
