import random

import pytest

from ksbim.root_datum import build_root_datum

TYPES = ["A1", "A2", "B2"]


@pytest.fixture(scope="session")
def a1():
    return build_root_datum("A1")


@pytest.fixture(scope="session")
def a2():
    return build_root_datum("A2")


@pytest.fixture(scope="session")
def b2():
    return build_root_datum("B2")


@pytest.fixture(scope="session", params=TYPES)
def datum(request):
    return build_root_datum(request.param)


@pytest.fixture
def rng():
    return random.Random(20261019)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import REPORT
    except ImportError:
        return
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
