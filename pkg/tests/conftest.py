import random

import pytest

from spinal.families import EGS, GGS, build_recursion, make_special_datum

ACCEPTANCE_LINES: list[str] = []
OBSERVATIONS: list[str] = []


@pytest.fixture(scope="session")
def d3():
    return make_special_datum(EGS, 3, [1, 0])


@pytest.fixture(scope="session")
def T3(d3):
    return build_recursion(d3)


@pytest.fixture(scope="session")
def gs3():
    return make_special_datum(GGS, 3, [1, 2])


@pytest.fixture
def rng():
    return random.Random(12345)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
    if OBSERVATIONS:
        terminalreporter.section("recorded observations")
        for line in OBSERVATIONS:
            terminalreporter.write_line(line)
