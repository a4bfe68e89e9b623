"""Small result records shared by the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named identity or relation check."""

    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  ({self.detail})" if self.detail and not self.passed else ""
        return f"[{status}] {self.name}{tail}"


@dataclass(frozen=True)
class SuiteReport:
    """A batch of named checks; passes only if every check does."""

    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail}
                       for c in self.checks],
        }


@dataclass(frozen=True)
class CheckReport:
    """Pass/fail over an enumerated search space, with first counterexample."""

    passed: bool
    checked: int
    counterexample: str | None = None
    notes: tuple[str, ...] = field(default=())

    def line(self) -> str:
        if self.passed:
            return f"PASS ({self.checked} cases)"
        return f"FAIL after {self.checked} cases: {self.counterexample}"

    def to_json(self) -> dict:
        return {"passed": self.passed, "checked": self.checked,
                "counterexample": self.counterexample, "notes": list(self.notes)}
