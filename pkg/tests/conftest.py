import pytest

from perbeta.field import check_base

# ascending coefficients
FAMILY = {
    "golden": (-1, -1, 1),
    "plastic": (-1, -1, 0, 1),
    "two": (-2, 1),
    "salem_like": (3, 2, 3),
    "quad": (1, -4, 2),
}


@pytest.fixture(scope="session")
def bases():
    return {name: check_base(m) for name, m in FAMILY.items()}


@pytest.fixture(scope="session")
def golden(bases):
    return bases["golden"]


@pytest.fixture(scope="session")
def worked(bases):
    return bases["salem_like"]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
