import sys

import pytest

from diagramalg import Diagram

RHO = Diagram(8, ((1, -2, -5, -6), (2, 3, 5), (4,), (6, -8), (7,), (8,), (-1, -3, -4), (-7,)))
TAU = Diagram(8, ((1, 2, 4, -2), (3, 5, 6, -1), (7,), (8, -3, -5), (-4, -7), (-6,), (-8,)))


@pytest.fixture
def rho():
    return RHO


@pytest.fixture
def tau():
    return TAU


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
