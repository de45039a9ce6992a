"""Argument parsing, dispatch and output for the ``reflexa`` command."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from typing import Any

from pydantic import BaseModel, ValidationError

from reflexa.codec import InputError, dump_model
from reflexa.errors import ReflexaError
from reflexa.report import Report, emit_report, exit_code

from ._commands import COMMANDS
from ._settings import Settings
from ._suites import SUITES

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _common_options() -> argparse.ArgumentParser:
    """Options accepted after every verb; unset ones stay ``None``."""
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--field", help="Q, GF:p or GFp (default: the input file's field, else Q)")
    p.add_argument("--depth", type=int, help="depth of built-in towers")
    p.add_argument("--universe", help="reference, base or a universe JSON file")
    p.add_argument("--rank-bound", dest="rank_bound", type=int, help="largest target rank tried (default 4)")
    p.add_argument("--format", choices=["text", "json"], help="report format (default text)")
    p.add_argument("--seed", type=int, help="seed for randomized checks (default $REFLEXA_SEED or 0)")
    p.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG on stderr")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="reflexa", description="Exact checks of linear duality on finite models.")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("check", parents=[common], help="run the checks for one input")
    p.add_argument("kind", choices=["module", "map", "tower", "bialg"])
    p.add_argument("input", help="JSON file (towers and bialgebras also take built-in names)")

    p = verbs.add_parser("dual", parents=[common], help="emit the dual of an input as JSON")
    p.add_argument("kind", choices=["module", "map", "tower", "bialg"])
    p.add_argument("input")

    p = verbs.add_parser("hom", parents=[common], help="solved dimensions of Hom(M, N) and Hom(M*, N)")
    p.add_argument("source", help="module JSON file for M")
    p.add_argument("target", help="module JSON file for N")

    p = verbs.add_parser("tower", parents=[common], help="operations on a tower")
    p.add_argument("action", choices=["stabilize", "decompose", "dual", "roundtrip", "kernel"])
    p.add_argument("input", help="tower JSON file or built-in name such as power-series:6")
    p.add_argument("--level", type=int, default=0, help="level the functional factors through (kernel)")
    p.add_argument("--row", help="comma separated functional on that level (kernel, default e_0)")

    p = verbs.add_parser("bialg", parents=[common], help="bialgebra duality and fixtures")
    p.add_argument("action", choices=["dual", "iso", "group", "function", "check", "grouplikes"])
    p.add_argument("inputs", nargs="+", help="bialgebra or group JSON files, or group names (Z2, Z3, Z2xZ2, S3, Zn)")

    p = verbs.add_parser("findual", parents=[common], help="arithmetic of recursive functionals on K[x]")
    p.add_argument("action", choices=["eval", "add", "mul", "min", "fit"])
    p.add_argument("inputs", nargs="+", help="functional JSON files (fit: a sequence prefix)")
    p.add_argument("--terms", type=int, default=10, help="number of values printed by eval")

    p = verbs.add_parser("report", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=list(SUITES), help="suite to run (default all)")
    p.add_argument("--only", help="run a single check by name")
    p.add_argument("--jobs", type=int, help="checks run in parallel (default 1)")
    p.add_argument("--timing", action="store_true", default=None, help="include timings")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def _settings(args: argparse.Namespace) -> Settings:
    return Settings.from_env(
        field=args.field,
        depth=args.depth,
        universe=args.universe,
        rank_bound=args.rank_bound,
        format=args.format,
        seed=args.seed,
        suite=getattr(args, "suite", None),
        only=getattr(args, "only", None),
        jobs=getattr(args, "jobs", None),
        timing=getattr(args, "timing", None),
    )


def _render(result: Any, settings: Settings) -> tuple[str, int]:
    if isinstance(result, Report):
        text = emit_report(result, settings.format, settings.timing).decode("utf-8")
        return text, exit_code(result)
    if isinstance(result, BaseModel):
        return dump_model(result), EXIT_OK
    return json.dumps(result, indent=2) + "\n", EXIT_OK


def _error(message: str) -> int:
    print(f"reflexa: {message}", file=sys.stderr)
    return EXIT_INPUT


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command line; 0 when every check passed, 1 on a failed check, 2 on bad input."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    _configure_logging(args.verbose)

    try:
        settings = _settings(args)
    except ValueError as exc:
        errors = exc.errors() if isinstance(exc, ValidationError) else None
        return _error(errors[0]["msg"] if errors else str(exc))

    logger.info("%s with field %s, seed %d", args.verb, settings.field or "from input", settings.seed)
    try:
        result = COMMANDS[args.verb](args, settings)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        return _error(str(exc.errors()[0]["msg"]))
    except (ReflexaError, OSError) as exc:
        return _error(str(exc))

    text, code = _render(result, settings)
    sys.stdout.write(text)
    return code


def main() -> None:
    """Console script entry point."""
    raise SystemExit(run(sys.argv[1:]))
