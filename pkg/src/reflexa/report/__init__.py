"""Check records, reports and their text/JSON rendering."""

from ._emit import Format, ReportWriter, emit_report, report_to_dict
from ._records import CheckRecord, Report, exit_code

__all__ = [
    "CheckRecord",
    "Report",
    "exit_code",
    "Format",
    "ReportWriter",
    "emit_report",
    "report_to_dict",
]
