import math
import sys

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

P_GRID = (1.25, 1.5, 2.0, 3.0, 5.0, 10.0)
X_GRID = tuple(round(0.05 * i, 2) for i in range(1, 20))


def classical_pi_p(p: float) -> float:
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


@pytest.fixture
def p_grid():
    return P_GRID


@pytest.fixture
def x_grid():
    return X_GRID


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[num])
