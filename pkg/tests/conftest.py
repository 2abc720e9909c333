"""Shared fixtures and the per-criterion summary printed after the acceptance run."""

import pytest

from uvmac.exactalg import RatFunc

ACCEPTANCE_LINES: dict = {}


@pytest.fixture(scope="session")
def qtuv():
    return tuple(RatFunc.gen(s) for s in "qtuv")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
