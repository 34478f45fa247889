import pytest

from grassmann_lab import build_graph, make_field


@pytest.fixture(scope="session")
def f2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def f3():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def j242(f2):
    return build_graph(f2, 4, 2)


@pytest.fixture(scope="session")
def j252(f2):
    return build_graph(f2, 5, 2)


@pytest.fixture(scope="session")
def j342(f3):
    return build_graph(f3, 4, 2)
