import pytest

from helpers import cycle, path


@pytest.fixture
def c3():
    return cycle(3)


@pytest.fixture
def p3():
    return path(3)


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
