#!/usr/bin/env python3
"""
Reports produced by the toolkit commands.

A section keeps its numbers in one ordered `facts` mapping; the human
rendering and the versioned key=value machine block are both generated from
it, so they cannot disagree.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

MACHINE_FORMAT_VERSION = "surface-report v1"


class Status(Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"


_BADGES = {Status.PASS: "✅ PASS", Status.FAIL: "❌ FAIL", Status.INCONCLUSIVE: "⚠️ INCONCLUSIVE"}


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    return str(value)


@dataclass
class ReportSection:
    title: str
    status: Status = Status.PASS
    anchor: str = ""
    facts: Dict[str, Any] = field(default_factory=dict)
    trace: List[str] = field(default_factory=list)
    message: Optional[str] = None

    def fact(self, key: str, value: Any) -> "ReportSection":
        self.facts[key] = value
        return self

    def expect(self, key: str, value: Any, expected: Any) -> bool:
        """Record a fact and fail the section if it differs from the expected value."""
        self.facts[key] = value
        if value != expected:
            self.fail(f"{key} = {format_value(value)}, expected {format_value(expected)}")
            return False
        return True

    def fail(self, message: str) -> None:
        self.status = Status.FAIL
        self.message = message if self.message is None else f"{self.message}; {message}"

    def inconclusive(self, message: str) -> None:
        if self.status is not Status.FAIL:
            self.status = Status.INCONCLUSIVE
        self.message = message if self.message is None else f"{self.message}; {message}"


@dataclass
class Report:
    sections: List[ReportSection] = field(default_factory=list)
    usage_error: Optional[str] = None

    def add(self, section: ReportSection) -> ReportSection:
        self.sections.append(section)
        return section

    @property
    def failed(self) -> List[ReportSection]:
        return [s for s in self.sections if s.status is Status.FAIL]

    @property
    def exit_code(self) -> int:
        """0 pass, 1 any failed section, 2 usage or parse error."""
        if self.usage_error is not None:
            return 2
        return 1 if self.failed else 0

    @classmethod
    def from_usage_error(cls, title: str, message: str) -> "Report":
        report = cls(usage_error=message)
        report.add(ReportSection(title, Status.FAIL, message=message))
        return report


def render_human(report: Report, show_trace: bool = False) -> str:
    lines: List[str] = []
    for section in report.sections:
        header = f"{_BADGES[section.status]}  {section.title}"
        if section.anchor:
            header += f"  ({section.anchor})"
        lines.append(header)
        if section.message:
            lines.append(f"    ↳ {section.message}")
        for key, value in section.facts.items():
            lines.append(f"    {key}: {format_value(value)}")
        if show_trace and section.trace:
            lines.append("    trace:")
            lines.extend(f"    {t}" for t in section.trace)
        lines.append("")
    passed = sum(1 for s in report.sections if s.status is Status.PASS)
    lines.append(f"📊 {passed}/{len(report.sections)} sections passed, exit code {report.exit_code}")
    return "\n".join(lines)


def render_machine(report: Report, show_trace: bool = False) -> str:
    lines = [f"# {MACHINE_FORMAT_VERSION}", f"exit_code={report.exit_code}"]
    for index, section in enumerate(report.sections, 1):
        lines.append(f"[section.{index}]")
        lines.append(f"title={section.title}")
        lines.append(f"status={section.status.value}")
        if section.anchor:
            lines.append(f"anchor={section.anchor}")
        if section.message:
            lines.append(f"message={section.message}")
        for key, value in section.facts.items():
            lines.append(f"{key}={format_value(value)}")
        if show_trace:
            lines.extend(f"trace.{i}={t}" for i, t in enumerate(section.trace, 1))
    return "\n".join(lines)


def parse_machine(text: str) -> List[Dict[str, str]]:
    """Read a machine block back into one dict per section."""
    sections: List[Dict[str, str]] = []
    lines = text.splitlines()
    if not lines or lines[0] != f"# {MACHINE_FORMAT_VERSION}":
        raise ValueError(f"Not a {MACHINE_FORMAT_VERSION} block")
    for line in lines[1:]:
        if line.startswith("[section."):
            sections.append({})
        elif sections:
            key, _, value = line.partition("=")
            sections[-1][key] = value
    return sections
