import pytest
from hypothesis import HealthCheck, settings

from mvcrystal import root_datum

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def a1():
    return root_datum("A1")


@pytest.fixture(scope="session")
def a2():
    return root_datum("A2")


@pytest.fixture(scope="session")
def a3():
    return root_datum("A3")


@pytest.fixture(scope="session")
def d4():
    return root_datum("D4")
