import pytest

from salpeter_bounds.radial_solver import SolverConfig

# criterion lines collected by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def config():
    return SolverConfig()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
