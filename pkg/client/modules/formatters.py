#!/usr/bin/env python3
"""
Result formatters for the surface client
Chooses between the human report and the machine block
"""
from datetime import datetime

from report import Report, render_human, render_machine


class ResultFormatter:
    """Handles formatting of toolkit reports"""

    def __init__(self, format_type: str = "formatted", show_trace: bool = False, timestamp: bool = False):
        self.format_type = format_type  # formatted, machine
        self.show_trace = show_trace
        self.timestamp = timestamp

    def format_report(self, report: Report) -> str:
        if self.format_type == "machine":
            return render_machine(report, self.show_trace)
        formatted = render_human(report, self.show_trace)
        if self.timestamp:
            formatted += f"\n⏰ Generated at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}"
        return formatted
