"""Tests for matroid union, tree packing, strength and body frameworks."""

import math
from fractions import Fraction

import pytest
from sympy.utilities.iterables import multiset_partitions

from rigikit.errors import DomainError
from rigikit.models.graph_models import Multigraph
from rigikit.models.packing_models import crossing_edges
from rigikit.services.graph_service import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    scale,
)
from rigikit.services.matroid_service import OracleKind, matroid_union_rank
from rigikit.services.packing_service import (
    body_bar_globally_rigid,
    body_bar_rigid,
    body_count,
    body_hinge_globally_rigid,
    body_hinge_globally_rigid_literal,
    body_hinge_rigid,
    max_tree_packing,
    packs_k_trees_minus_any_edge,
    packs_k_trees_minus_any_edge_literal,
    packs_trees,
    strength,
)


def brute_force_strength(graph) -> Fraction:
    """Minimum of |X| / (parts - 1) over every vertex partition."""
    edges = tuple(graph.to_multigraph().edge_list())
    best = None
    for blocks in multiset_partitions(list(range(graph.n))):
        if len(blocks) < 2:
            continue
        partition = tuple(frozenset(block) for block in blocks)
        value = Fraction(len(crossing_edges(edges, partition)), len(blocks) - 1)
        best = value if best is None else min(best, value)
    return best


class TestMatroidUnion:
    """Test union ranks of graphic and bicircular matroids."""

    def test_graphic_pairs(self, k4, k5):
        """Test two graphic matroids: two forests."""
        assert matroid_union_rank(k4, OracleKind.GRAPHIC, OracleKind.GRAPHIC) == 6
        assert matroid_union_rank(k5, "graphic", "graphic") == 8

    def test_graphic_and_bicircular(self, k4, k5, octahedron):
        """Test a forest plus a pseudoforest."""
        assert matroid_union_rank(k4, "graphic", "bicircular") == 6
        assert matroid_union_rank(k5, "graphic", "bicircular") == 9
        assert matroid_union_rank(octahedron, "graphic", "bicircular") == 11

    def test_bicircular_pairs(self, k5):
        """Test that K5 splits into two Hamiltonian cycles."""
        assert matroid_union_rank(k5, "bicircular", "bicircular") == 10


class TestTreePacking:
    """Test maximum packings and their certificates."""

    @pytest.mark.parametrize("n, trees", [(2, 1), (3, 1), (4, 2), (5, 2), (6, 3)])
    def test_complete_graphs(self, n, trees):
        """Test K_n packs floor(n/2) trees."""
        graph = complete_graph(n)
        result = max_tree_packing(graph)
        assert result.tree_count == trees
        assert result.verify(tuple(graph.to_multigraph().edge_list()))

    def test_multigraph(self):
        """Test parallel edges count as separate tree edges."""
        graph = Multigraph(2, ((0, 1, 3),))
        assert max_tree_packing(graph).tree_count == 3
        assert packs_trees(graph, 3)
        assert not packs_trees(graph, 4)

    def test_scaled_graph(self, k4):
        """Test that scaling K4 by two doubles its packing."""
        assert max_tree_packing(scale(k4, 2)).tree_count == 4

    def test_certificates(self, small_atlas):
        """Test packing certificates on small graphs."""
        for graph in small_atlas:
            result = max_tree_packing(graph)
            assert result.verify(tuple(graph.to_multigraph().edge_list()))
            assert packs_trees(graph, result.tree_count)
            assert not packs_trees(graph, result.tree_count + 1)

    def test_disconnected(self):
        """Test that a disconnected graph packs nothing."""
        graph = disjoint_union(complete_graph(3), complete_graph(3))
        result = max_tree_packing(graph)
        assert result.tree_count == 0
        assert len(result.partition) == 2

    def test_trivial_requests(self, petersen):
        """Test k <= 0 and one-vertex inputs."""
        assert packs_trees(petersen, 0)
        assert packs_trees(complete_graph(1), 5)
        with pytest.raises(DomainError):
            max_tree_packing(complete_graph(1))


class TestStrength:
    """Test exact strength values."""

    def test_known_values(self, petersen, k4):
        """Test cycles, paths, complete graphs and the Petersen graph."""
        assert strength(cycle_graph(6)).value == Fraction(6, 5)
        assert strength(path_graph(5)).value == 1
        assert strength(k4).value == 2
        assert strength(complete_graph(5)).value == Fraction(5, 2)
        assert strength(petersen).value == Fraction(5, 3)
        assert str(strength(complete_graph(5))) == "5/2"

    def test_matches_brute_force(self, small_atlas):
        """Test strength against every vertex partition."""
        for graph in small_atlas:
            value = strength(graph)
            assert value.value == brute_force_strength(graph)
            assert value.verify()

    def test_tree_count_is_floor(self, small_atlas):
        """Test the packing number equals the floor of the strength."""
        for graph in small_atlas:
            value = strength(graph).value
            assert max_tree_packing(graph).tree_count == math.floor(value)

    def test_weak_cut(self):
        """Test a bridge makes strength 1 regardless of the dense sides."""
        graph = disjoint_union(complete_graph(5), complete_graph(5)).add_edge(0, 5)
        value = strength(graph)
        assert value.value == 1
        assert value.crossing == 1

    def test_disconnected(self):
        """Test that disconnected graphs have strength 0."""
        graph = disjoint_union(complete_graph(2), complete_graph(2))
        assert strength(graph).value == 0

    def test_deletion_forms_agree(self, small_atlas):
        """Test the strength form of 'G - e packs k trees' against deletions."""
        for graph in small_atlas:
            for k in (1, 2):
                assert packs_k_trees_minus_any_edge(
                    graph, k
                ) == packs_k_trees_minus_any_edge_literal(graph, k)


class TestBodyFrameworks:
    """Test body-bar and body-hinge rigidity."""

    def test_body_count(self):
        """Test d(d+1)/2."""
        assert [body_count(d) for d in (1, 2, 3, 4)] == [1, 3, 6, 10]

    def test_body_bar_plane(self, k4):
        """Test body-bar frameworks in the plane need three trees."""
        assert not body_bar_rigid(k4, 2)
        assert body_bar_rigid(complete_graph(6), 2)
        assert not body_bar_globally_rigid(complete_graph(6), 2)
        assert body_bar_globally_rigid(complete_graph(7), 2)

    def test_body_bar_multiplicity_guard(self, k4):
        """Test that multiplicities must stay below d(d+1)/2."""
        with pytest.raises(DomainError):
            body_bar_rigid(k4, 1)
        with pytest.raises(DomainError):
            body_bar_rigid(Multigraph(2, ((0, 1, 3),)), 2)

    def test_body_hinge_plane(self, k4):
        """Test body-hinge frameworks in the plane."""
        assert body_hinge_rigid(complete_graph(3), 2)
        assert not body_hinge_rigid(cycle_graph(4), 2)
        assert body_hinge_globally_rigid(k4, 2)
        assert not body_hinge_globally_rigid(cycle_graph(4), 2)

    def test_body_hinge_space(self):
        """Test that C5 is globally rigid in space and C6 only rigid."""
        assert body_hinge_rigid(cycle_graph(6), 3)
        assert not body_hinge_globally_rigid(cycle_graph(6), 3)
        assert body_hinge_globally_rigid(cycle_graph(5), 3)
        assert not body_hinge_rigid(cycle_graph(7), 3)

    @pytest.mark.parametrize("reading", ["scaled", "base"])
    def test_literal_form_agrees(self, reading):
        """Test the per-deletion form against the strength form."""
        for graph in (cycle_graph(5), cycle_graph(6), complete_graph(4)):
            assert body_hinge_globally_rigid_literal(
                graph, 3, reading
            ) == body_hinge_globally_rigid(graph, 3)

    def test_body_hinge_domain(self, k4):
        """Test that body-hinge needs d >= 2."""
        with pytest.raises(DomainError):
            body_hinge_rigid(k4, 1)
        with pytest.raises(DomainError):
            body_hinge_globally_rigid_literal(k4, 2)
