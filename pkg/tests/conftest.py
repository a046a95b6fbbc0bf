import pytest

from lltgraphs import canonical_form, llt_poly, pi_graph
from lltgraphs.cli import sweep_family

try:
    from hypothesis import settings

    settings.register_profile("suite", deadline=None, max_examples=60)
    settings.load_profile("suite")
except ImportError:
    pass

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def criterion_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sweep_main():
    """Every strip with <= 3 rows, lengths <= 3, offsets <= 4."""
    return sweep_family(3, 3, 4)


@pytest.fixture(scope="session")
def sweep_uni():
    """Every unicellular strip with <= 4 rows, offsets <= 3."""
    return sweep_family(4, 1, 3)


@pytest.fixture(scope="session")
def sweep_main_polys(sweep_main):
    return [llt_poly(strip, 3) for strip in sweep_main]


@pytest.fixture(scope="session")
def sweep_main_forms(sweep_main):
    return [canonical_form(pi_graph(strip)) for strip in sweep_main]
