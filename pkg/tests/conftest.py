import pytest

from selfsim import catalog as cat
from selfsim.treecore import identity


@pytest.fixture
def adding():
    return cat.adding(2).generators[0]


@pytest.fixture
def double_adding():
    return cat.double_adding().generators[0]


@pytest.fixture
def e2():
    return identity(2)
