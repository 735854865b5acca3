from __future__ import annotations

import pytest

_ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def acceptance_log():
    def log(number: int, line: str) -> None:
        _ACCEPTANCE_LINES[number] = line
        print(line)
    return log


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(_ACCEPTANCE_LINES[n])
