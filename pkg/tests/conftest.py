import pytest

from k4graph import build_catalog, build_k3_graph, build_k4_graph


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def k3_graph(catalog):
    return build_k3_graph(catalog)


@pytest.fixture(scope="session")
def k4_graph(catalog):
    return build_k4_graph(catalog)
