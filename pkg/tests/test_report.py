"""Tests for check records and report rendering."""

import json

import pytest
from pydantic import ValidationError

from reflexa.model import Verdict
from reflexa.report import CheckRecord, Report, emit_report, exit_code, report_to_dict


def _report(*records):
    return Report(suite="demo", field="Q", seed=3, records=list(records))


PASS = CheckRecord(name="demo.pass", anchor="M** = M", status="pass", message="ok", timing=0.25)
FAIL = CheckRecord(
    name="demo.fail",
    anchor="f** = f",
    status="fail",
    message="naturality square fails",
    witness={"trial": 4},
    reproducer="reflexa report --suite demo --only demo.fail",
)


# ---------------------------------------------------------------------------
# Verdicts and records
# ---------------------------------------------------------------------------

class TestVerdict:
    def test_constructors(self):
        assert Verdict.passed("fine", dims=[1, 2]).details == {"dims": [1, 2]}
        assert Verdict.unknown("cannot tell").status == "unknown"
        assert not Verdict.unknown("cannot tell").ok

    def test_failure_needs_witness(self):
        with pytest.raises(ValidationError, match="witness"):
            Verdict(status="fail", message="bad")


class TestCheckRecord:
    def test_from_verdict(self):
        r = CheckRecord.from_verdict("x", "A", Verdict.failed("bad", {"k": 1}, n=2), reproducer="rerun")
        assert r.status == "fail"
        assert r.witness == {"k": 1}
        assert r.details == {"n": 2}
        assert r.reproducer == "rerun"

    def test_failure_needs_witness(self):
        with pytest.raises(ValidationError, match="has no witness"):
            CheckRecord(name="x", anchor="A", status="fail")

    def test_anchor_required(self):
        with pytest.raises(ValidationError):
            CheckRecord(name="x", anchor="", status="pass")


class TestReport:
    def test_counts_and_exit_code(self):
        r = _report(PASS, FAIL)
        assert r.counts() == {"pass": 1, "fail": 1, "unknown": 0}
        assert r.failures() == [FAIL]
        assert exit_code(r) == 1
        assert exit_code(_report(PASS)) == 0

    def test_unknown_does_not_fail(self):
        u = CheckRecord(name="u", anchor="A", status="unknown")
        assert exit_code(_report(u)) == 0


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

class TestText:
    def test_empty(self):
        assert emit_report(_report()) == b"suite: demo\nfield: Q\nseed: 3\n0 checks\n"

    def test_single_pass(self):
        text = emit_report(_report(PASS)).decode()
        assert text == (
            "suite: demo\n"
            "field: Q\n"
            "seed: 3\n"
            "1 check: 1 pass, 0 fail, 0 unknown\n"
            "\n"
            "PASS    demo.pass  [M** = M]\n"
            "    ok\n"
        )

    def test_failure_lines(self):
        lines = emit_report(_report(PASS, FAIL)).decode().splitlines()
        assert "2 checks: 1 pass, 1 fail, 0 unknown" in lines
        assert "FAIL    demo.fail  [f** = f]" in lines
        assert '    witness: {"trial": 4}' in lines
        assert "    reproduce: reflexa report --suite demo --only demo.fail" in lines

    def test_timing_only_when_asked(self):
        assert b"0.250s" not in emit_report(_report(PASS))
        assert b"PASS    demo.pass  [M** = M]  (0.250s)" in emit_report(_report(PASS), timing=True)

    def test_byte_stable(self):
        r = _report(PASS, FAIL)
        assert emit_report(r) == emit_report(r.model_copy(deep=True))


class TestJson:
    def test_without_timing(self):
        data = json.loads(emit_report(_report(PASS, FAIL), "json"))
        assert data["counts"] == {"pass": 1, "fail": 1, "unknown": 0}
        assert [r["name"] for r in data["records"]] == ["demo.pass", "demo.fail"]
        assert all("timing" not in r for r in data["records"])

    def test_with_timing(self):
        data = report_to_dict(_report(PASS), timing=True)
        assert data["records"][0]["timing"] == 0.25

    def test_trailing_newline(self):
        assert emit_report(_report(), "json").endswith(b"}\n")
