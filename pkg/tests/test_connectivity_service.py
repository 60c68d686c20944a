"""Tests for exact connectivity."""

import networkx as nx
import pytest

from rigikit.errors import DomainError, InvalidArgumentError
from rigikit.models.connectivity_models import CutKind
from rigikit.models.graph_models import Multigraph, SimpleGraph
from rigikit.services.connectivity_service import (
    edge_connectivity,
    edge_connectivity_after_deleting,
    is_k_edge_connected,
    jj_mixed_condition,
    max_flow,
    vertex_connectivity,
    verify_cut,
)
from rigikit.services.graph_service import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    scale,
    to_networkx,
)


def _barbell() -> SimpleGraph:
    """Two triangles joined by a bridge."""
    return SimpleGraph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)))


class TestEdgeConnectivity:
    """Test global minimum edge cuts."""

    def test_values(self, petersen, k4):
        """Test known edge connectivities."""
        assert edge_connectivity(petersen)[0] == 3
        assert edge_connectivity(k4)[0] == 3
        assert edge_connectivity(cycle_graph(7))[0] == 2
        assert edge_connectivity(_barbell())[0] == 1

    def test_certificate(self):
        """Test that the bridge is the certificate of the barbell."""
        value, certificate = edge_connectivity(_barbell())
        assert certificate.kind == CutKind.EDGE
        assert certificate.separator == ((2, 3),)
        assert certificate.side in (frozenset({0, 1, 2}), frozenset({3, 4, 5}))
        assert verify_cut(_barbell(), certificate)

    def test_multigraph_counts_parallel_edges(self):
        """Test that multiplicities add up across the cut."""
        assert edge_connectivity(scale(cycle_graph(5), 3))[0] == 6
        path = Multigraph(3, ((0, 1, 2), (1, 2, 5)))
        assert edge_connectivity(path)[0] == 2

    def test_disconnected(self):
        """Test that disconnected graphs have connectivity zero."""
        value, certificate = edge_connectivity(
            disjoint_union(complete_graph(3), complete_graph(3))
        )
        assert value == 0
        assert certificate.is_empty

    def test_matches_networkx(self, small_atlas):
        """Test against networkx on small connected graphs."""
        for graph in small_atlas:
            assert edge_connectivity(graph)[0] == nx.edge_connectivity(
                to_networkx(graph)
            )

    def test_too_small(self):
        """Test the two-vertex precondition."""
        with pytest.raises(DomainError):
            edge_connectivity(complete_graph(1))
        assert not is_k_edge_connected(complete_graph(1), 1)


class TestVertexConnectivity:
    """Test minimum vertex cuts."""

    def test_values(self, petersen, k4):
        """Test known vertex connectivities."""
        assert vertex_connectivity(petersen)[0] == 3
        assert vertex_connectivity(k4)[0] == 3
        assert vertex_connectivity(_barbell())[0] == 1

    def test_certificate(self, petersen):
        """Test that the certificate separates the graph."""
        value, certificate = vertex_connectivity(petersen)
        assert len(certificate.separator) == value
        assert verify_cut(petersen, certificate)

    def test_matches_networkx(self, small_atlas):
        """Test against networkx on small connected graphs."""
        for graph in small_atlas:
            assert vertex_connectivity(graph)[0] == nx.node_connectivity(
                to_networkx(graph)
            )


class TestFlowsAndDeletions:
    """Test max flow and deletion helpers."""

    def test_max_flow(self, petersen):
        """Test flows between vertices."""
        assert max_flow(petersen, 0, 7) == 3
        assert max_flow(Multigraph(3, ((0, 1, 4), (1, 2, 2))), 0, 2) == 2
        with pytest.raises(InvalidArgumentError):
            max_flow(petersen, 1, 1)
        with pytest.raises(InvalidArgumentError):
            max_flow(petersen, 0, 10)

    def test_is_k_edge_connected(self, petersen):
        """Test the k-edge-connectivity decision."""
        assert is_k_edge_connected(petersen, 3)
        assert not is_k_edge_connected(petersen, 4)

    def test_after_deleting(self, k4):
        """Test connectivity after vertex deletion."""
        assert edge_connectivity_after_deleting(complete_graph(6), [0]) == 4
        assert edge_connectivity_after_deleting(_barbell(), [2]) == 0
        with pytest.raises(DomainError):
            edge_connectivity_after_deleting(k4, [0, 1, 2])


class TestMixedCondition:
    """Test the mixed edge-connectivity condition."""

    def test_complete_graphs(self):
        """Test that K7 satisfies the condition and K6 does not."""
        assert jj_mixed_condition(complete_graph(7))
        assert not jj_mixed_condition(complete_graph(6))

    def test_low_degree(self, petersen):
        """Test that minimum degree below six fails."""
        assert not jj_mixed_condition(petersen)

    def test_too_small(self):
        """Test the four-vertex precondition."""
        with pytest.raises(DomainError):
            jj_mixed_condition(complete_graph(3))
