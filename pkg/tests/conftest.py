import pytest
from hypothesis import HealthCheck, settings

from dihedral_soergel.realizations import catalog

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def universal():
    return catalog("universal")


@pytest.fixture(scope="session")
def a2():
    return catalog("a2")


@pytest.fixture(scope="session")
def b2():
    return catalog("b2")


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.summary_lines():
        terminalreporter.write_line(line)
