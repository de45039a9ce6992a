"""Reading JSON input files into validated models."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from reflexa.errors import ReflexaError

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)


class InputError(ReflexaError):
    """Malformed or invalid input file, with the location when known."""

    def __init__(self, message: str, source_file: str = "<input>", source_line: int | None = None) -> None:
        self.source_file = source_file
        self.source_line = source_line
        self.detail = message
        loc = source_file if source_line is None else f"{source_file}:{source_line}"
        super().__init__(f"{loc}: {message}")


def _locate(text: str, loc: tuple) -> int | None:
    """Line of the JSON key path ``loc``, following string keys in document order."""
    pos, found = 0, None
    for part in loc:
        if not isinstance(part, str):
            continue
        k = text.find(json.dumps(part), pos)
        if k < 0:
            break
        pos, found = k, k
    if found is None:
        return None
    return text.count("\n", 0, found) + 1


def parse_model(text: str, model: type[M], source_file: str = "<input>") -> M:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg}", source_file, exc.lineno) from exc
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        err = exc.errors()[0]
        where = ".".join(str(p) for p in err["loc"]) or "document"
        line = _locate(text, tuple(err["loc"])) or 1
        raise InputError(f"{where}: {err['msg']}", source_file, line) from exc


def load_model(path: str | Path, model: type[M]) -> M:
    """Read and validate ``path`` as ``model``."""
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read file: {exc.strerror}", str(p)) from exc
    logger.debug("loaded %s as %s", p, model.__name__)
    return parse_model(text, model, str(p))


def dump_model(obj: BaseModel) -> str:
    """Stable JSON text for a model."""
    return json.dumps(obj.model_dump(mode="json", exclude_defaults=False), indent=2) + "\n"
