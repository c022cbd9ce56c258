import math
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coarseness.pointset import BLUE, RED, ColoredPointSet  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def square():
    # red on one diagonal, blue on the other
    return ColoredPointSet(((0, 0), (1, 0), (0, 1), (1, 1)), (RED, BLUE, BLUE, RED))


def hexagon(colors=(RED, BLUE, RED, BLUE, RED, BLUE)):
    pts = tuple((round(1000 * math.cos(math.pi * i / 3)), round(1000 * math.sin(math.pi * i / 3)))
                for i in range(6))
    return ColoredPointSet(pts, colors)


@pytest.fixture
def sq4():
    return square()


@pytest.fixture
def red_triangle():
    return ColoredPointSet(((0, 0), (4, 0), (1, 3)), (RED, RED, RED))


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
