"""Tests for graph values, constructions and structural queries."""

import pytest

from rigikit.errors import CliqueStructureError, InvalidArgumentError
from rigikit.models.graph_models import Multigraph, SimpleGraph, as_multigraph
from rigikit.services.graph_service import (
    adjacency_matrix,
    clique_contract,
    clique_replace,
    complete_graph,
    cycle_graph,
    diameter,
    disjoint_union,
    is_bipartite,
    is_complete,
    is_connected,
    laplacian_matrix,
    multigraph_to_json,
    regular_degree,
    scale,
)


class TestGraphValues:
    """Test SimpleGraph and Multigraph invariants."""

    def test_edges_are_normalized(self):
        """Test that edge pairs are stored sorted."""
        graph = SimpleGraph(3, ((2, 0), (1, 0)))
        assert graph.edges == ((0, 1), (0, 2))
        assert graph.degrees == (2, 1, 1)

    def test_rejects_loops_and_parallel_edges(self):
        """Test simple graph validation."""
        with pytest.raises(InvalidArgumentError):
            SimpleGraph(2, ((0, 0),))
        with pytest.raises(InvalidArgumentError):
            SimpleGraph(2, ((0, 1), (1, 0)))
        with pytest.raises(InvalidArgumentError):
            SimpleGraph(2, ((0, 2),))

    def test_multigraph_merges_triples(self):
        """Test that repeated pairs add up and zero multiplicities vanish."""
        graph = Multigraph(3, ((1, 0, 2), (0, 1, 1), (1, 2, 0)))
        assert graph.multiplicity == ((0, 1, 3),)
        assert graph.m == 3
        assert graph.max_multiplicity == 3
        assert not graph.is_simple()
        assert graph.support == SimpleGraph(3, ((0, 1),))

    def test_multigraph_delete_edge(self):
        """Test that deleting removes a single parallel copy."""
        graph = Multigraph(2, ((0, 1, 2),))
        once = graph.delete_edge(1, 0)
        assert once.multiplicity == ((0, 1, 1),)
        assert once.delete_edge(0, 1).m == 0
        with pytest.raises(InvalidArgumentError):
            once.delete_edge(0, 1).delete_edge(0, 1)

    def test_edge_list_repeats_copies(self):
        """Test that edge_list has one entry per parallel copy."""
        graph = Multigraph(3, ((0, 1, 2), (1, 2, 1)))
        assert graph.edge_list() == [(0, 1), (0, 1), (1, 2)]

    def test_delete_vertices_renumbers(self, petersen):
        """Test vertex deletion."""
        reduced = petersen.delete_vertices([0])
        assert reduced.n == 9
        assert reduced.m == 12

    def test_complement(self, k4):
        """Test that the complement of K4 is edgeless."""
        assert k4.complement().m == 0
        assert cycle_graph(5).complement().m == 5


class TestStructure:
    """Test structural queries."""

    def test_regular_degree(self, petersen, k33):
        """Test regular degree detection."""
        assert regular_degree(petersen) == 3
        assert regular_degree(k33) == 3
        assert regular_degree(SimpleGraph(3, ((0, 1),))) is None

    def test_connectivity_and_diameter(self, petersen):
        """Test connectivity and diameter."""
        assert is_connected(petersen)
        assert diameter(petersen) == 2
        union = disjoint_union(complete_graph(3), complete_graph(3))
        assert not is_connected(union)
        assert diameter(union) is None

    def test_bipartite(self, k33, petersen, cube):
        """Test bipartiteness."""
        assert is_bipartite(k33)
        assert is_bipartite(cube)
        assert not is_bipartite(petersen)

    def test_matrices_count_multiplicity(self):
        """Test that adjacency and Laplacian carry multiplicities."""
        graph = Multigraph(2, ((0, 1, 3),))
        assert adjacency_matrix(graph) == [[0, 3], [3, 0]]
        assert laplacian_matrix(graph) == [[3, -3], [-3, 3]]

    def test_is_complete(self, k4):
        """Test that doubled complete graphs are not complete."""
        assert is_complete(k4)
        assert not is_complete(scale(k4, 2))
        assert is_complete(as_multigraph(k4))


class TestScale:
    """Test edge scaling tG."""

    def test_scale_multiplies(self, k4):
        """Test that every multiplicity is multiplied by t."""
        doubled = scale(k4, 2)
        assert doubled.m == 12
        assert set(doubled.degrees) == {6}
        assert scale(doubled, 3).max_multiplicity == 6

    def test_scale_rejects_zero(self, k4):
        """Test that t must be positive."""
        with pytest.raises(InvalidArgumentError):
            scale(k4, 0)

    def test_json(self, k4):
        """Test multigraph serialization."""
        data = multigraph_to_json(scale(k4, 2))
        assert data["support"] == "C~"
        assert [0, 1, 2] in data["multiplicity"]


class TestCliqueOperations:
    """Test clique replacement and contraction."""

    def test_replace_k4(self, k4):
        """Test that replacing the vertices of K4 by triangles gives 12 vertices."""
        replaced = clique_replace(k4, 3)
        assert replaced.n == 12
        assert replaced.m == 18
        assert regular_degree(replaced) == 3

    def test_contract_inverts_replace(self, k4, petersen):
        """Test that contraction recovers the replaced graph."""
        for base, k in ((k4, 3), (petersen, 3), (complete_graph(6), 5)):
            contracted = clique_contract(clique_replace(base, k), k)
            assert contracted.n == base.n
            assert contracted.is_simple()
            assert contracted.support == base

    def test_replace_multigraph(self):
        """Test replacement of the doubled triangle."""
        doubled_triangle = scale(complete_graph(3), 2)
        replaced = clique_replace(doubled_triangle, 4)
        assert replaced.n == 12
        assert regular_degree(replaced) == 4
        contracted = clique_contract(replaced, 4)
        assert contracted.multiplicity == ((0, 1, 2), (0, 2, 2), (1, 2, 2))

    def test_contract_errors(self, petersen, k4):
        """Test that graphs without a clique partition are refused."""
        with pytest.raises(CliqueStructureError):
            clique_contract(petersen, 3)
        with pytest.raises(CliqueStructureError):
            clique_contract(k4, 3)
        with pytest.raises(CliqueStructureError):
            clique_contract(cycle_graph(6), 3)

    def test_replace_errors(self, petersen):
        """Test replacement preconditions."""
        with pytest.raises(InvalidArgumentError):
            clique_replace(cycle_graph(5), 2)
        with pytest.raises(InvalidArgumentError):
            clique_replace(petersen, 4)
