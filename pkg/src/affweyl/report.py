"""Check records shared by the verification modules and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class Check:
    name: str
    status: str
    expected: Any = None
    actual: Any = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "actual": self.actual, "detail": self.detail}


def check(name: str, ok: bool, expected=None, actual=None, detail: str = "") -> Check:
    """Build a pass/fail check; failures always carry expected and actual."""
    if ok:
        return Check(name, PASS, expected, actual, detail)
    return Check(name, FAIL, "" if expected is None else expected,
                 "" if actual is None else actual, detail)


@dataclass
class CheckReport:
    clause: str
    type: str
    rank: int
    i: int | None = None
    split_id: str | None = None
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def add(self, c: Check) -> Check:
        self.checks.append(c)
        return c

    def failures(self) -> list:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> dict:
        return {"clause": self.clause, "type": self.type, "rank": self.rank, "i": self.i,
                "split_id": self.split_id, "checks": [c.to_dict() for c in self.checks]}
