import pytest

from jordanlab.catalog import DEFAULT_SUITE, get_entry
from jordanlab.maps import Spaces

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def catalog():
    """Default suite over Q, built once."""
    return {name: get_entry(name) for name in DEFAULT_SUITE}


@pytest.fixture(scope="session")
def spaces(catalog):
    return {name: Spaces(e.algebra) for name, e in catalog.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
