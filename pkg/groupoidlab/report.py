"""Report serialization: deterministic JSON and a markdown summary."""

from __future__ import annotations

import json
from collections import defaultdict
from pathlib import Path

from groupoidlab.types import Check, CheckReport


def report_json(report: CheckReport) -> str:
    """Byte-deterministic JSON for a report; checks are ordered by id."""
    return json.dumps(report.to_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_report(report: CheckReport, path: str | Path) -> None:
    Path(path).write_text(report_json(report), encoding="utf-8")


def _group_key(check: Check) -> str:
    """`<model>.<module>` for model checks, `<module>` otherwise."""
    parts = check.check_id.split(".")
    if parts[0] in ("function", "convolution") and len(parts) > 2:
        return ".".join(parts[:2])
    return parts[0]


def _fmt(value: float | None) -> str:
    return "n/a" if value is None else f"{value:.2e}"


class ReportBuilder:
    """Build markdown summaries of check reports."""

    def __init__(self, title: str = "groupoidlab check report"):
        self.title = title
        self.sections: list[str] = []

    def add_header(self, level: int, text: str) -> None:
        """Add a markdown header."""
        prefix = "#" * level
        self.sections.append(f"{prefix} {text}\n")

    def add_table(self, headers: list[str], rows: list[list[str]]) -> None:
        """Add a markdown table."""
        self.sections.append("| " + " | ".join(headers) + " |")
        self.sections.append("|" + "|".join(["---" for _ in headers]) + "|")
        for row in rows:
            self.sections.append("| " + " | ".join(row) + " |")
        self.sections.append("")

    def add_text(self, text: str) -> None:
        """Add a paragraph of text."""
        self.sections.append(text + "\n")

    def add_report(self, report: CheckReport) -> None:
        """Summary line, one row per module group and the list of failures."""
        summary = report.summary()
        self.add_header(2, report.label or "report")
        self.add_text(
            f"**{summary['passed']} of {summary['total']} checks passed**, "
            f"max residual {_fmt(summary['max_residual'])}."
        )

        groups: dict[str, list[Check]] = defaultdict(list)
        for check in report.sorted():
            groups[_group_key(check)].append(check)
        rows = []
        for key in sorted(groups):
            checks = groups[key]
            evaluated = [c for c in checks if c.residual is not None]
            worst = max(evaluated, key=lambda c: c.residual, default=None)
            rows.append(
                [
                    key,
                    str(len(checks)),
                    str(sum(c.passed for c in checks)),
                    _fmt(worst.residual if worst else None),
                    worst.check_id if worst else "-",
                ]
            )
        self.add_table(["group", "checks", "passed", "max residual", "worst check"], rows)

        failed = report.failed()
        if failed:
            self.add_header(3, "Failed checks")
            for check in failed:
                line = f"- `{check.check_id}`: {check.anchor} (residual {_fmt(check.residual)}, tol {check.tol:.0e})"
                if check.detail:
                    line += f"; {check.detail}"
                self.sections.append(line)
            self.sections.append("")

    def build(self) -> str:
        """Build the final markdown report."""
        header = f"# {self.title}\n\n"
        return header + "\n".join(self.sections)

    def save(self, path: str | Path) -> None:
        """Save report to file."""
        Path(path).write_text(self.build(), encoding="utf-8")


def markdown_summary(report: CheckReport, title: str = "groupoidlab check report") -> str:
    builder = ReportBuilder(title)
    builder.add_report(report)
    return builder.build()
