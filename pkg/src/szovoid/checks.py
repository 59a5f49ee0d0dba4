"""Structured results of individual verification checks."""

from __future__ import annotations

from dataclasses import dataclass

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"
INFO = "INFO"


@dataclass
class Check:
    """One verification line: a name, a verdict, and the measured values.

    FAIL is the only verdict that makes a run unsuccessful; SKIP marks a
    check gated off by configuration and INFO reports a value the run makes
    no demand on.
    """

    name: str
    status: str
    detail: str = ""

    @classmethod
    def of(cls, name: str, ok: bool, detail: str = "") -> "Check":
        return cls(name, PASS if ok else FAIL, detail)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def line(self) -> str:
        return f"{self.status:4s} {self.name}: {self.detail}" if self.detail \
            else f"{self.status:4s} {self.name}"


def all_passed(checks: list[Check]) -> bool:
    return not any(c.failed for c in checks)
