import pytest
from hypothesis import settings

from bisetfun.catalog import BUILTIN, TRIVIAL

settings.register_profile("suite", max_examples=30, deadline=None)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def groups():
    return BUILTIN


@pytest.fixture(scope="session")
def trivial():
    return TRIVIAL


@pytest.fixture(scope="session")
def C2(groups):
    return groups["C2"]


@pytest.fixture(scope="session")
def C3(groups):
    return groups["C3"]


@pytest.fixture(scope="session")
def C4(groups):
    return groups["C4"]


@pytest.fixture(scope="session")
def V4(groups):
    return groups["V4"]


@pytest.fixture(scope="session")
def S3(groups):
    return groups["S3"]
