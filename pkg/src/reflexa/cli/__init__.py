"""The ``reflexa`` command line.

Example::

    $ reflexa check module m.json
    $ reflexa bialg dual Z2 --field Q
    $ reflexa report --suite all --field GF7 --format json

Exit status is 0 when every check passed, 1 when a check failed and 2 on
malformed input or options.
"""

from ._commands import COMMANDS, load_universe
from ._main import build_parser, main, run
from ._settings import SEED_VAR, Settings
from ._suites import SUITES, Check, SuiteContext, SuiteError, run_suite, suite_checks

__all__ = [
    "run",
    "main",
    "build_parser",
    "COMMANDS",
    "Settings",
    "SEED_VAR",
    "SUITES",
    "Check",
    "SuiteContext",
    "SuiteError",
    "run_suite",
    "suite_checks",
    "load_universe",
]
