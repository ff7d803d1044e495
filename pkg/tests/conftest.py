import pytest

from wavemult import build_sigma, catalog


@pytest.fixture(scope="session")
def shannon():
    return catalog("shannon")


@pytest.fixture(scope="session")
def journe():
    return catalog("journe")


@pytest.fixture(scope="session")
def w1():
    return catalog("paper_w1")


@pytest.fixture(scope="session")
def w2():
    return catalog("paper_w2")


@pytest.fixture(scope="session")
def paper_sigma(w1, w2):
    return build_sigma(w1, w2)
