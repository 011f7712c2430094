import pytest
from hypothesis import settings

from glacm import Weights

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def w3333():
    return Weights((3, 3, 3, 3))


@pytest.fixture
def w2345():
    return Weights((2, 3, 4, 5))


@pytest.fixture
def w3456():
    return Weights((3, 4, 5, 6))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
