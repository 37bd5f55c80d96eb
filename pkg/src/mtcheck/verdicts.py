"""Check verdicts and the aggregated report."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

__all__ = ["CheckReport", "CheckVerdict", "Status", "overall_status"]


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIP = "skip"
    UNDECIDED = "undecided"


@dataclass
class CheckVerdict:
    check_name: str
    status: Status
    witness: Optional[dict[str, Any]] = None
    elapsed: float = 0.0  # seconds

    def __post_init__(self):
        self.status = Status(self.status)
        if self.status in (Status.FAIL, Status.UNDECIDED, Status.SKIP) and self.witness is None:
            raise ValueError(f"{self.status.value} verdict for {self.check_name} needs a witness/reason")

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.check_name, "status": self.status.value, "witness": self.witness}
        if timing:
            out["ms"] = round(self.elapsed * 1000.0, 3)
        return out


def overall_status(verdicts: list[CheckVerdict]) -> str:
    statuses = {v.status for v in verdicts}
    if Status.FAIL in statuses:
        return "fail"
    if Status.UNDECIDED in statuses:
        return "undecided"
    return "pass"


@dataclass
class CheckReport:
    name: str
    conductor: Optional[int]
    checks: list[CheckVerdict] = field(default_factory=list)
    profile: Optional[dict[str, Any]] = None

    @property
    def overall(self) -> str:
        return overall_status(self.checks)

    def verdict(self, name: str) -> CheckVerdict:
        for v in self.checks:
            if v.check_name == name:
                return v
        raise KeyError(name)

    def failures(self) -> list[CheckVerdict]:
        return [v for v in self.checks if v.status in (Status.FAIL, Status.UNDECIDED)]

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        return {
            "name": self.name,
            "overall": self.overall,
            "conductor": self.conductor,
            "profile": self.profile,
            "checks": [v.to_dict(timing) for v in self.checks],
        }

    def to_json(self, timing: bool = True, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)
