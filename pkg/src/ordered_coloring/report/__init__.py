"""Reporting module."""

from ordered_coloring.report.report_generator import ReportGenerator

__all__ = ["ReportGenerator"]
