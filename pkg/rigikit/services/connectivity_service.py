"""Exact edge and vertex connectivity with cut certificates."""

import logging
from itertools import combinations
from typing import Iterable, Tuple

import networkx as nx
from networkx.algorithms.flow import dinitz

from rigikit.errors import DomainError, InvalidArgumentError
from rigikit.models.connectivity_models import CutCertificate, CutKind
from rigikit.models.graph_models import GraphLike, as_multigraph, support_of
from rigikit.services.graph_service import min_degree, to_networkx

logger = logging.getLogger(__name__)


def _first_component(graph: nx.Graph) -> frozenset:
    return frozenset(next(iter(nx.connected_components(graph))))


def edge_connectivity(graph: GraphLike) -> Tuple[int, CutCertificate]:
    """
    Global minimum edge cut, counting parallel edges.

    Stoer-Wagner runs on the support graph with multiplicities as weights.

    Args:
        graph: Graph or multigraph with at least two vertices

    Returns:
        Tuple of (edge connectivity, certificate)

    Raises:
        DomainError: If the graph has fewer than two vertices
    """
    if graph.n < 2:
        raise DomainError("Edge connectivity needs at least two vertices")
    nx_graph = to_networkx(graph)
    if not nx.is_connected(nx_graph):
        return 0, CutCertificate(CutKind.EDGE, (), _first_component(nx_graph))

    value, (shore, _) = nx.stoer_wagner(nx_graph, weight="weight")
    side = frozenset(shore)
    separator = tuple(
        (u, v)
        for u, v, _ in as_multigraph(graph).multiplicity
        if (u in side) != (v in side)
    )
    logger.debug("Edge connectivity %d across %d support edges", value, len(separator))
    return int(value), CutCertificate(CutKind.EDGE, separator, side)


def vertex_connectivity(graph: GraphLike) -> Tuple[int, CutCertificate]:
    """
    Exact vertex connectivity of the simple support.

    Complete graphs return n - 1 with an empty certificate; otherwise the
    separator is a minimum vertex cut found by unit-capacity flows on the
    split-vertex digraph.

    Args:
        graph: Graph with at least two vertices

    Returns:
        Tuple of (vertex connectivity, certificate)
    """
    if graph.n < 2:
        raise DomainError("Vertex connectivity needs at least two vertices")
    simple = support_of(graph)
    if simple.is_complete():
        return graph.n - 1, CutCertificate(CutKind.VERTEX)
    nx_graph = to_networkx(simple)
    if not nx.is_connected(nx_graph):
        return 0, CutCertificate(CutKind.VERTEX, (), _first_component(nx_graph))

    cut = nx.minimum_node_cut(nx_graph, flow_func=dinitz)
    remainder = nx_graph.copy()
    remainder.remove_nodes_from(cut)
    side = _first_component(remainder)
    return len(cut), CutCertificate(CutKind.VERTEX, tuple(sorted(cut)), side)


def verify_cut(graph: GraphLike, certificate: CutCertificate) -> bool:
    """Check that removing the separator cuts the recorded side off from the rest."""
    nx_graph = to_networkx(graph)
    if certificate.kind == CutKind.EDGE:
        nx_graph.remove_edges_from(certificate.separator)
    else:
        nx_graph.remove_nodes_from(certificate.separator)
    if not certificate.side or nx_graph.number_of_nodes() < 2:
        return False
    return not nx.is_connected(nx_graph)


def max_flow(graph: GraphLike, s: int, t: int) -> int:
    """
    Maximum s-t flow with edge multiplicities as capacities.

    Args:
        graph: Graph or multigraph
        s: Source vertex
        t: Sink vertex

    Returns:
        Flow value, equal to the number of edge-disjoint s-t paths
    """
    if s == t:
        raise InvalidArgumentError("Source and sink must differ")
    for v in (s, t):
        if not 0 <= v < graph.n:
            raise InvalidArgumentError(f"Vertex {v} out of range")
    value = nx.maximum_flow_value(
        to_networkx(graph), s, t, capacity="weight", flow_func=dinitz
    )
    return int(value)


def is_k_edge_connected(graph: GraphLike, k: int) -> bool:
    """
    Decide k-edge-connectivity.

    Graphs on fewer than two vertices are never k-edge-connected for k > 0.
    """
    if k <= 0:
        return True
    if graph.n < 2:
        return False
    return edge_connectivity(graph)[0] >= k


def edge_connectivity_after_deleting(graph: GraphLike, removed: Iterable[int]) -> int:
    """
    Edge connectivity of G - S.

    Args:
        graph: Graph or multigraph
        removed: Vertex set S

    Returns:
        Edge connectivity of the remaining graph

    Raises:
        DomainError: If fewer than two vertices remain
    """
    removed_set = set(removed)
    if graph.n - len(removed_set) < 2:
        raise DomainError("Deletion leaves fewer than two vertices")
    return edge_connectivity(graph.delete_vertices(removed_set))[0]


def jj_mixed_condition(graph: GraphLike) -> bool:
    """
    Mixed edge-connectivity sufficient condition for global rigidity in the plane.

    True iff G is 6-edge-connected, G - u is 4-edge-connected for every vertex u,
    and G - {v, w} is 2-edge-connected for every pair of vertices.

    Raises:
        DomainError: If the graph has fewer than four vertices
    """
    if graph.n < 4:
        raise DomainError("Mixed connectivity condition needs at least four vertices")
    simple = support_of(graph)
    if min_degree(simple) < 6:
        return False
    if edge_connectivity(simple)[0] < 6:
        return False

    # Single vertex deletions
    for u in range(simple.n):
        if edge_connectivity_after_deleting(simple, [u]) < 4:
            logger.debug("Mixed condition fails at vertex %d", u)
            return False

    # Pair deletions
    for v, w in combinations(range(simple.n), 2):
        if edge_connectivity_after_deleting(simple, [v, w]) < 2:
            logger.debug("Mixed condition fails at pair (%d, %d)", v, w)
            return False
    return True
