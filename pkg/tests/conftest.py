import pytest

from midproof.ks import peres_graph


@pytest.fixture(scope="session")
def peres():
    return peres_graph()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in RESULTS.items():
        terminalreporter.write_line(f"{status} {name}")
