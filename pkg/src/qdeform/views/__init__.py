"""Terminal views."""

from .report_view import ReportView, make_console

__all__ = ["ReportView", "make_console"]
