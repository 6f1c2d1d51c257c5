# tests/conftest.py
import pytest

from secatbounds.config import Settings, set_settings
from secatbounds.groups import by_name, direct_power


@pytest.fixture(autouse=True)
def default_settings():
    """Every test runs against the built-in defaults, not the local config.yaml."""
    settings = Settings()
    set_settings(settings)
    yield settings
    set_settings(Settings())


@pytest.fixture
def trivial():
    return by_name("1")


@pytest.fixture
def z2():
    return by_name("Z2")


@pytest.fixture
def z3():
    return by_name("Z3")


@pytest.fixture
def z4():
    return by_name("Z4")


@pytest.fixture
def klein(z2):
    """Z/2 × Z/2 as a direct power, so the diagonal and the factors are easy to name."""
    return direct_power(z2, 2)


@pytest.fixture
def s3():
    return by_name("S3")


def element(G, label):
    return next(g for g in G.elements if G.label(g) == label)
