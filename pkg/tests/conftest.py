import pytest

from ejpan import Generator, build
from ejpan.eisenstein import EJInt


@pytest.fixture(scope="session")
def ej23():
    return build(Generator(2, 3))


@pytest.fixture(scope="session")
def ej34():
    return build(Generator(3, 4))


@pytest.fixture(scope="session")
def k7():
    return build(Generator(1, 2))


@pytest.fixture(scope="session")
def ej22():
    return build(Generator(2, 2))


def node(net, x, y):
    return net.locate(EJInt(x, y))
