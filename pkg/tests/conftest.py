"""Shared test helpers for the reflexa test suite."""

import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import strategies as st

from reflexa.cli import run
from reflexa.linalg import GF, QQ, Field, Matrix

GF7 = GF(7)
FIELDS = [QQ, GF7]


@pytest.fixture(params=FIELDS, ids=["Q", "GF7"])
def field(request):
    """Every field-generic test runs over Q and GF(7)."""
    return request.param


# ---------------------------------------------------------------------------
# Hypothesis strategies
# ---------------------------------------------------------------------------

def elements(field: Field, bound: int = 4):
    """Small raw elements of ``field``."""
    if field == QQ:
        return st.builds(Fraction, st.integers(-bound, bound), st.integers(1, 3))
    return st.integers(0, field.characteristic - 1)


@st.composite
def matrices(draw, field: Field, max_rows: int = 4, max_cols: int = 4, rows: int | None = None, cols: int | None = None):
    r = draw(st.integers(0, max_rows)) if rows is None else rows
    c = draw(st.integers(0, max_cols)) if cols is None else cols
    entries = draw(st.lists(elements(field), min_size=r * c, max_size=r * c))
    return Matrix(field, r, c, entries)


fields = st.sampled_from(FIELDS)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def to_sympy(m: Matrix) -> sympy.Matrix:
    """A rational matrix as a sympy matrix (exact)."""
    assert m.field == QQ
    return sympy.Matrix(m.rows, m.cols, [sympy.Rational(x.numerator, x.denominator) for x in m.entries])


def from_sympy(s: sympy.Matrix) -> Matrix:
    return Matrix(QQ, s.rows, s.cols, [Fraction(int(x.p), int(x.q)) for x in s])


def q(*rows) -> Matrix:
    """Rational matrix from literal rows."""
    return Matrix.from_rows(QQ, [list(r) for r in rows])


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------

def write_json(directory, name: str, data) -> str:
    path = directory / name
    path.write_text(json.dumps(data, indent=2) + "\n", encoding="utf-8")
    return str(path)


def run_cli(capsys, *argv):
    """Run the command line in-process; returns (exit code, stdout, stderr)."""
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err
