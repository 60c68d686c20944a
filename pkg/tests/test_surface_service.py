"""Tests for rigidity on surfaces of revolution."""

import networkx as nx
import pytest

from rigikit.errors import DomainError
from rigikit.models.graph_models import Multigraph
from rigikit.services.graph_service import (
    complete_graph,
    cycle_graph,
    disjoint_union,
    from_networkx,
)
from rigikit.services.surface_service import (
    SurfaceKind,
    globally_rigid_on_cylinder,
    redundantly_rigid_on_cylinder,
    rigid_on_surface,
)


class TestRigidOnSurface:
    """Test rigidity counts on the sphere, cylinder and other surfaces."""

    @pytest.mark.parametrize("surface", list(SurfaceKind))
    def test_complete_graphs(self, surface):
        """Test that complete graphs are rigid everywhere."""
        for n in range(1, 6):
            assert rigid_on_surface(complete_graph(n), surface)

    def test_sphere_is_planar_rigidity(self, k33, petersen):
        """Test that the sphere uses the planar count."""
        assert rigid_on_surface(k33, SurfaceKind.SPHERE)
        assert not rigid_on_surface(petersen, SurfaceKind.SPHERE)

    def test_cylinder(self, k33, octahedron):
        """Test that the cylinder needs two spanning trees."""
        assert not rigid_on_surface(k33, SurfaceKind.CYLINDER)
        assert rigid_on_surface(octahedron, "cylinder")

    def test_general_surface(self, k33, octahedron):
        """Test that other surfaces need a tree plus a spanning pseudoforest."""
        assert not rigid_on_surface(k33, SurfaceKind.GENERAL_REVOLUTION)
        assert rigid_on_surface(octahedron, SurfaceKind.GENERAL_REVOLUTION)

    def test_multigraph_support(self):
        """Test that parallel edges are ignored."""
        graph = Multigraph(3, ((0, 1, 2), (1, 2, 2)))
        assert not rigid_on_surface(graph, SurfaceKind.SPHERE)

    def test_disconnected(self):
        """Test that disconnected graphs are refused."""
        graph = disjoint_union(complete_graph(3), complete_graph(3))
        with pytest.raises(DomainError):
            rigid_on_surface(graph, SurfaceKind.SPHERE)
        with pytest.raises(DomainError):
            globally_rigid_on_cylinder(graph)


class TestCylinderGlobalRigidity:
    """Test redundant and global rigidity on the cylinder."""

    def test_octahedron(self, octahedron):
        """Test a 4-connected graph with slack."""
        assert redundantly_rigid_on_cylinder(octahedron)
        assert globally_rigid_on_cylinder(octahedron)

    def test_complete_graphs(self):
        """Test complete graphs are globally rigid."""
        for n in range(1, 6):
            assert globally_rigid_on_cylinder(complete_graph(n))

    def test_not_redundant(self):
        """Test a wheel with exactly two spanning trees."""
        graph = from_networkx(nx.wheel_graph(5))
        assert rigid_on_surface(graph, SurfaceKind.CYLINDER)
        assert not redundantly_rigid_on_cylinder(graph)
        assert not globally_rigid_on_cylinder(graph)

    def test_cycles(self):
        """Test cycles are flexible on the cylinder."""
        assert not globally_rigid_on_cylinder(cycle_graph(5))
