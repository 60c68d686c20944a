"""Test configuration and fixtures."""

from typing import Iterator

import networkx as nx
import pytest

from rigikit.config import settings
from rigikit.models.graph_models import SimpleGraph
from rigikit.services.graph_service import (
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    from_networkx,
    petersen_graph,
    prism_graph,
)


@pytest.fixture
def k4() -> SimpleGraph:
    """Complete graph on four vertices."""
    return complete_graph(4)


@pytest.fixture
def k5() -> SimpleGraph:
    return complete_graph(5)


@pytest.fixture
def petersen() -> SimpleGraph:
    """Petersen graph: cubic, Ramanujan, diameter 2."""
    return petersen_graph()


@pytest.fixture
def k33() -> SimpleGraph:
    return complete_bipartite_graph(3, 3)


@pytest.fixture
def cube() -> SimpleGraph:
    """3-cube, as the prism over a 4-cycle."""
    return prism_graph(4)


@pytest.fixture
def c6() -> SimpleGraph:
    return cycle_graph(6)


@pytest.fixture
def octahedron() -> SimpleGraph:
    """K_{2,2,2}: 4-regular on six vertices."""
    return from_networkx(nx.octahedral_graph())


@pytest.fixture
def small_atlas() -> list:
    """Every connected graph on 2..6 vertices from the networkx atlas."""
    graphs = []
    for graph in nx.graph_atlas_g()[1:]:
        if 2 <= graph.number_of_nodes() <= 6 and nx.is_connected(graph):
            graphs.append(from_networkx(graph))
    return graphs


@pytest.fixture
def isolated_settings() -> Iterator[None]:
    """Restore any settings a test overrides."""
    saved = settings.model_dump()
    yield
    for name, value in saved.items():
        setattr(settings, name, value)
