"""Core report types for verification results."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable


@dataclass(frozen=True)
class Check:
    """One verified identity.

    Attributes:
        check_id: Stable identifier, `<model>.<module>.<identity>.<index>`
        anchor: Human-readable statement of the identity
        residual: Relative residual, or None if the check could not be evaluated
        tol: Threshold the residual is compared against
        detail: Optional note (worst witness, error message, probe output)
    """

    check_id: str
    anchor: str
    residual: float | None
    tol: float
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.residual is not None and self.residual <= self.tol

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "check_id": self.check_id,
            "anchor": self.anchor,
            "residual": _finite_or_none(self.residual),
            "tol": float(self.tol),
            "pass": self.passed,
        }
        if self.detail is not None:
            data["detail"] = self.detail
        return data


@dataclass
class CheckReport:
    """Named collection of checks with deterministic ordering."""

    label: str = ""
    checks: dict[str, Check] = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        if check.check_id in self.checks:
            raise ValueError(f"duplicate check id: {check.check_id}")
        self.checks[check.check_id] = check
        return check

    def record(
        self,
        check_id: str,
        anchor: str,
        residual: float | None,
        tol: float,
        detail: str | None = None,
    ) -> Check:
        if residual is not None:
            residual = float(residual)
            if math.isnan(residual):
                residual = math.inf
        return self.add(Check(check_id, anchor, residual, tol, detail))

    def record_family(
        self,
        check_id: str,
        anchor: str,
        witnesses: Iterable[tuple[str, float]],
        tol: float,
    ) -> Check:
        """Record the worst residual over a family of witnesses."""
        worst_name, worst = None, 0.0
        count = 0
        for name, residual in witnesses:
            count += 1
            residual = float(residual)
            if math.isnan(residual):
                residual = math.inf
            if worst_name is None or residual > worst:
                worst_name, worst = name, residual
        detail = None if worst_name is None else f"worst {worst_name} of {count}"
        return self.record(check_id, anchor, worst, tol, detail)

    def merge(self, other: "CheckReport", prefix: str = "") -> None:
        for check in other.sorted():
            self.add(Check(prefix + check.check_id, check.anchor, check.residual, check.tol, check.detail))

    def sorted(self) -> list[Check]:
        return [self.checks[k] for k in sorted(self.checks)]

    def failed(self) -> list[Check]:
        return [c for c in self.sorted() if not c.passed]

    def __len__(self) -> int:
        return len(self.checks)

    def __getitem__(self, check_id: str) -> Check:
        return self.checks[check_id]

    def __contains__(self, check_id: str) -> bool:
        return check_id in self.checks

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def max_residual(self) -> float:
        values = [c.residual for c in self.checks.values() if c.residual is not None]
        return max(values, default=0.0)

    def summary(self) -> dict[str, Any]:
        return {
            "total": len(self.checks),
            "passed": sum(1 for c in self.checks.values() if c.passed),
            "max_residual": _finite_or_none(self.max_residual),
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "checks": [c.to_dict() for c in self.sorted()],
            "summary": self.summary(),
        }


def _finite_or_none(value: float | None) -> float | None:
    if value is None or not math.isfinite(value):
        return None
    return float(value)
