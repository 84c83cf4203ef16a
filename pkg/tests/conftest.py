import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from rankmetric import field

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def f16():
    return field(2, 1, 4)


@pytest.fixture(scope="session")
def f8():
    return field(2, 1, 3)


@pytest.fixture(scope="session")
def f256():
    return field(2, 2, 4)


@pytest.fixture(scope="session")
def f27():
    return field(3, 1, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
