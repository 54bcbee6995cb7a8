"""Collects acceptance results and prints one verdict line per criterion."""
from __future__ import annotations

import dataclasses

import pytest

_RESULTS: dict[int, "Criterion"] = {}


@dataclasses.dataclass
class Criterion:
    number: int
    title: str
    checks: list = dataclasses.field(default_factory=list)
    seconds: float = 0.0

    def check(self, name: str, residual: float, tol: float) -> None:
        self.checks.append((name, float(residual), float(tol)))

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(r <= t for _, r, t in self.checks) and self.seconds < 10.0

    def line(self) -> str:
        worst = [f"{n}: {r:.2e} > {t:.0e}" for n, r, t in self.checks if not r <= t]
        if self.seconds >= 10.0:
            worst.append(f"took {self.seconds:.1f} s")
        detail = "; ".join(worst) if worst else f"{len(self.checks)} checks"
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number:>2} {self.title:<28} {detail} ({self.seconds:.2f} s)"


@pytest.fixture
def criterion():
    def make(number: int, title: str) -> Criterion:
        _RESULTS[number] = Criterion(number, title)
        return _RESULTS[number]

    return make


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        terminalreporter.write_line(_RESULTS[number].line())
