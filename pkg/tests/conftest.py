import pytest

from ncgs import load_presentation
from ncgs.resolution import MainExampleAlgebra

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def main_pres():
    return load_presentation("main")


@pytest.fixture(scope="session")
def kxy():
    return load_presentation("kxy")


@pytest.fixture(scope="session")
def exrn():
    return load_presentation("exrn")


@pytest.fixture(scope="session")
def main_alg():
    return MainExampleAlgebra()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
