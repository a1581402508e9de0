"""
Report module - machine-readable reports and console summaries
"""

from .report_writer import write_report, build_payload, results_frame
from .summary_view import SummaryView

__all__ = ['write_report', 'build_payload', 'results_frame', 'SummaryView']
