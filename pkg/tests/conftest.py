import pytest
from hypothesis import settings

from netmap import bundled_presentation

settings.register_profile("exact", deadline=None, max_examples=75)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def main_pres():
    return bundled_presentation("main")


@pytest.fixture(scope="session")
def double_pres():
    return bundled_presentation("double")


@pytest.fixture(scope="session")
def euclidean_pres():
    return bundled_presentation("euclidean")
