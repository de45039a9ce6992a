"""Run options gathered from flags and the environment."""

from __future__ import annotations

import os
from collections.abc import Mapping
from typing import Any, Literal

from pydantic import BaseModel, Field, field_validator

from reflexa.errors import ReflexaError
from reflexa.linalg import Field as ScalarField
from reflexa.linalg import parse_field

SEED_VAR = "REFLEXA_SEED"


class Settings(BaseModel):
    """Options shared by every verb.

    ``field`` is ``None`` when the user did not choose one; commands that
    read a file then take the file's field.
    """

    field: str | None = None
    depth: int = Field(default=4, ge=0)
    universe: str = "reference"
    rank_bound: int = Field(default=4, ge=1)
    format: Literal["text", "json"] = "text"
    suite: str = "all"
    jobs: int = Field(default=1, ge=1)
    seed: int = 0
    only: str | None = None
    timing: bool = False

    @field_validator("field")
    @classmethod
    def _known_field(cls, v: str | None) -> str | None:
        if v is None:
            return v
        try:
            parse_field(v)
        except ReflexaError as exc:
            raise ValueError(str(exc)) from exc
        return v

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None, **options: Any) -> Settings:
        """Build from flag values; ``seed`` falls back to ``REFLEXA_SEED``."""
        env = os.environ if environ is None else environ
        options = {k: v for k, v in options.items() if v is not None}
        if "seed" not in options and env.get(SEED_VAR):
            try:
                options["seed"] = int(env[SEED_VAR])
            except ValueError as exc:
                raise ValueError(f"{SEED_VAR} must be an integer, got {env[SEED_VAR]!r}") from exc
        return cls(**options)

    @property
    def scalar_field(self) -> ScalarField:
        """The chosen field, Q by default."""
        return parse_field(self.field or "Q")
