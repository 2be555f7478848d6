import pytest

from cointerval_dga import build_cointerval, graph_family

EXAMPLE_INTERVALS = [(0, 3), (0, 1), (2, 3), (4, 5)]


@pytest.fixture
def G():
    """The four-interval worked example: edges 14, 23, 24, 34."""
    return build_cointerval(EXAMPLE_INTERVALS)


@pytest.fixture(scope="session")
def family5():
    return graph_family(5, 6)


@pytest.fixture(scope="session")
def family4():
    return graph_family(4, 6)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
