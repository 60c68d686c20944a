"""Rigidity of graphs on irreducible surfaces of revolution."""

import logging
from enum import Enum

from rigikit.errors import DomainError
from rigikit.models.graph_models import GraphLike, support_of
from rigikit.services.connectivity_service import vertex_connectivity
from rigikit.services.graph_service import is_connected
from rigikit.services.matroid_service import OracleKind, matroid_union_rank
from rigikit.services.packing_service import packs_trees
from rigikit.services.rigidity_service import is_rigid_2d

logger = logging.getLogger(__name__)


class SurfaceKind(str, Enum):
    """Irreducible surfaces of revolution, grouped by their rigidity counts."""

    SPHERE = "sphere"
    CYLINDER = "cylinder"
    GENERAL_REVOLUTION = "general_revolution"


def rigid_on_surface(graph: GraphLike, surface: SurfaceKind) -> bool:
    """
    Generic rigidity of a graph on a surface of revolution.

    Complete graphs are rigid on every such surface. Otherwise the sphere needs
    a spanning Laman subgraph, the cylinder two edge-disjoint spanning trees,
    and the remaining surfaces a spanning tree plus an edge-disjoint spanning
    subgraph whose every component has exactly one cycle.

    Args:
        graph: Connected graph
        surface: Surface class

    Returns:
        Whether generic frameworks of the graph on the surface are rigid

    Raises:
        DomainError: If the graph is disconnected
    """
    simple = support_of(graph)
    if not is_connected(simple):
        raise DomainError("Surface rigidity needs a connected graph")
    if simple.is_complete():
        return True

    surface = SurfaceKind(surface)
    if surface == SurfaceKind.SPHERE:
        return is_rigid_2d(simple)
    if surface == SurfaceKind.CYLINDER:
        return packs_trees(simple, 2)

    # Tree plus a basis of the bicircular matroid
    if simple.m < 2 * simple.n - 1:
        return False
    rank = matroid_union_rank(simple, OracleKind.GRAPHIC, OracleKind.BICIRCULAR)
    return rank == 2 * simple.n - 1


def redundantly_rigid_on_cylinder(graph: GraphLike) -> bool:
    """
    Rigid on the cylinder after deleting any edge.

    Deleting an edge of a complete graph leaves a non-complete graph, which must
    then pack two spanning trees.
    """
    simple = support_of(graph)
    if not is_connected(simple):
        raise DomainError("Surface rigidity needs a connected graph")
    if simple.m == 0:
        return simple.n <= 1
    for u, v in simple.edges:
        remainder = simple.delete_edge(u, v)
        if not is_connected(remainder):
            return False
        if not rigid_on_surface(remainder, SurfaceKind.CYLINDER):
            logger.debug("Cylinder rigidity lost without edge (%d, %d)", u, v)
            return False
    return True


def globally_rigid_on_cylinder(graph: GraphLike) -> bool:
    """Complete, or 2-connected and redundantly rigid on the cylinder."""
    simple = support_of(graph)
    if not is_connected(simple):
        raise DomainError("Surface rigidity needs a connected graph")
    if simple.is_complete():
        return True
    if vertex_connectivity(simple)[0] < 2:
        return False
    return redundantly_rigid_on_cylinder(simple)
