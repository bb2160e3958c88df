"""
Shared fixtures
"""
import pytest

from app.config import get_settings
from app.log import configure_logging
from tests import corpus


@pytest.fixture(scope="session", autouse=True)
def logging_configured():
    configure_logging(get_settings())


@pytest.fixture
def g5():
    return corpus.g5()


@pytest.fixture
def g6():
    return corpus.g6()


@pytest.fixture
def g7():
    return corpus.g7()


@pytest.fixture
def affine_a2():
    return corpus.affine_a2()


@pytest.fixture
def i2_6():
    return corpus.i2_6()


@pytest.fixture
def a1_x_i2_3():
    return corpus.a1_x_i2_3()


@pytest.fixture
def graphs_dir():
    return get_settings().graphs_path
