"""Structured pass/fail reports for the consistency-check suites."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckReport", "CheckResult"]


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    passed: bool
    expected: str
    got: str


@dataclass
class CheckReport:
    """An ordered list of named checks with expected/got values."""

    suite: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, check_id: str, passed: bool, expected: object, got: object) -> None:
        self.results.append(CheckResult(check_id, bool(passed), str(expected), str(got)))

    def check_equal(self, check_id: str, expected: object, got: object) -> None:
        self.add(check_id, expected == got, expected, got)

    @property
    def passed_count(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def failed_count(self) -> int:
        return sum(1 for r in self.results if not r.passed)

    @property
    def ok(self) -> bool:
        return self.failed_count == 0

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            if r.passed:
                out.append(f"PASS  {r.check_id}")
            else:
                out.append(f"FAIL  {r.check_id}: expected {r.expected}, got {r.got}")
        return out

    def summary(self) -> str:
        return f"{self.suite}: {self.passed_count} passed, {self.failed_count} failed"
