import pytest

from tftlib.plan import make_plan
from tftlib.ring import PrimeField


@pytest.fixture(scope="session")
def f13():
    return PrimeField(13)


@pytest.fixture(scope="session")
def field():
    return PrimeField()


@pytest.fixture(scope="session")
def plan13(f13):
    return make_plan(f13, 4)


ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line, status in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(f"{status}  {line}")
