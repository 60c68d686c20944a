"""Spanning tree packing, strength, and body-bar / body-hinge rigidity."""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

import networkx as nx

from rigikit.errors import DomainError
from rigikit.models.graph_models import Edge, GraphLike, Multigraph, as_multigraph
from rigikit.models.packing_models import (
    PackingResult,
    Partition,
    StrengthValue,
    crossing_edges,
)
from rigikit.services.connectivity_service import edge_connectivity
from rigikit.services.graph_service import scale, to_networkx
from rigikit.services.matroid_service import GraphicOracle, UnionResult, matroid_union

logger = logging.getLogger(__name__)


def body_count(d: int) -> int:
    """D = d(d+1)/2, the degrees of freedom of a rigid body in R^d."""
    return d * (d + 1) // 2


def _components(n: int, edges: List[Edge]) -> Partition:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    return tuple(
        frozenset(c) for c in sorted(nx.connected_components(graph), key=min)
    )


def _run_packing(
    graph: Multigraph, k: int, initial: Optional[List[frozenset]] = None
) -> Tuple[List[Edge], UnionResult]:
    edges = graph.edge_list()
    oracles = [GraphicOracle(graph.n, edges) for _ in range(k)]
    return edges, matroid_union(oracles, initial=initial)


def _is_full(graph: Multigraph, result: UnionResult) -> bool:
    return all(len(part) == graph.n - 1 for part in result.parts)


def _deficiency_partition(
    graph: Multigraph, edges: List[Edge], result: UnionResult
) -> Partition:
    """
    Vertex partition proving that the union could not be completed.

    Its parts are the components of the exchange-reachable edges; when every
    edge was placed these are the singletons.
    """
    return _components(graph.n, [edges[x] for x in sorted(result.reachable)])


def packs_trees(graph: GraphLike, k: int) -> bool:
    """Decide whether the (multi)graph contains k edge-disjoint spanning trees."""
    multigraph = as_multigraph(graph)
    if k <= 0 or multigraph.n <= 1:
        return True
    if multigraph.m < k * (multigraph.n - 1):
        return False
    _, result = _run_packing(multigraph, k)
    return _is_full(multigraph, result)


def max_tree_packing(graph: GraphLike) -> PackingResult:
    """
    Maximum number of edge-disjoint spanning trees.

    The packing grows one tree at a time, reusing the previous forests as the
    starting point of the next matroid union run. The first failing run yields
    the deficiency partition.

    Args:
        graph: Graph or multigraph with at least two vertices

    Returns:
        PackingResult with the trees and a deficiency certificate

    Raises:
        DomainError: If the graph has fewer than two vertices
    """
    multigraph = as_multigraph(graph)
    n = multigraph.n
    if n < 2:
        raise DomainError("Tree packing needs at least two vertices")
    edges = multigraph.edge_list()

    if not nx.is_connected(to_networkx(multigraph)):
        partition = _components(n, edges)
        return PackingResult(n, 0, (), deficiency=(), partition=partition)

    trees: List[frozenset] = []
    while True:
        k = len(trees) + 1
        _, result = _run_packing(multigraph, k, initial=trees + [frozenset()])
        if not _is_full(multigraph, result):
            partition = _deficiency_partition(multigraph, edges, result)
            deficiency = crossing_edges(tuple(edges), partition)
            logger.debug(
                "Packing stops at %d trees; %d crossing edges over %d parts",
                k - 1, len(deficiency), len(partition),
            )
            return PackingResult(
                n,
                k - 1,
                tuple(tuple(sorted(edges[x] for x in tree)) for tree in trees),
                deficiency=deficiency,
                partition=partition,
            )
        trees = list(result.parts)


def strength(graph: GraphLike) -> StrengthValue:
    """
    Exact strength min |X| / (c(G - X) - 1) with a witness partition.

    Starting from the singleton partition, each candidate p/q is tested by
    asking whether qG packs p trees. A failing test returns a partition of
    strictly smaller ratio, which becomes the next candidate; a passing test
    proves the candidate optimal.

    Args:
        graph: Graph or multigraph with at least two vertices

    Returns:
        StrengthValue; disconnected graphs have strength 0
    """
    multigraph = as_multigraph(graph)
    n = multigraph.n
    if n < 2:
        raise DomainError("Strength needs at least two vertices")
    edges = tuple(multigraph.edge_list())

    if not nx.is_connected(to_networkx(multigraph)):
        partition = _components(n, list(edges))
        return StrengthValue(Fraction(0), partition, 0)

    partition: Partition = tuple(frozenset([v]) for v in range(n))
    crossing = len(edges)
    value = Fraction(crossing, n - 1)
    while True:
        p, q = value.numerator, value.denominator
        scaled = scale(multigraph, q)
        scaled_edges, result = _run_packing(scaled, p)
        if _is_full(scaled, result):
            return StrengthValue(value, partition, crossing)

        candidate = _deficiency_partition(scaled, scaled_edges, result)
        candidate_crossing = len(crossing_edges(edges, candidate))
        candidate_value = Fraction(candidate_crossing, len(candidate) - 1)
        logger.debug("Strength candidate %s improved to %s", value, candidate_value)
        if candidate_value >= value:
            raise RuntimeError("Deficiency partition did not lower the strength bound")
        partition, crossing, value = candidate, candidate_crossing, candidate_value


def packs_k_trees_minus_any_edge(graph: GraphLike, k: int) -> bool:
    """G - e packs k spanning trees for every edge e, decided as strength > k."""
    return strength(graph).value > k


def packs_k_trees_minus_any_edge_literal(graph: GraphLike, k: int) -> bool:
    """Per-edge form of packs_k_trees_minus_any_edge, one run per edge class."""
    multigraph = as_multigraph(graph)
    for u, v, _ in multigraph.multiplicity:
        if not packs_trees(multigraph.delete_edge(u, v), k):
            return False
    return True


# Body-bar frameworks

def _check_body_bar(graph: Multigraph, d: int) -> int:
    if d < 1:
        raise DomainError(f"Dimension must be at least 1, got {d}")
    bodies = body_count(d)
    if graph.max_multiplicity >= bodies:
        raise DomainError(
            f"Multiplicity {graph.max_multiplicity} not below d(d+1)/2 = {bodies}"
        )
    return bodies


def body_bar_rigid(graph: GraphLike, d: int) -> bool:
    """
    Generic body-bar rigidity in R^d: d(d+1)/2 edge-disjoint spanning trees.

    Raises:
        DomainError: If d < 1 or some multiplicity reaches d(d+1)/2
    """
    multigraph = as_multigraph(graph)
    bodies = _check_body_bar(multigraph, d)
    return packs_trees(multigraph, bodies)


def body_bar_globally_rigid(graph: GraphLike, d: int) -> bool:
    """
    Generic body-bar global rigidity in R^d: body-bar rigid after deleting any edge.

    Parallel copies are interchangeable, so one deletion per edge class suffices.
    """
    multigraph = as_multigraph(graph)
    bodies = _check_body_bar(multigraph, d)
    if multigraph.n <= 1:
        return True
    if not packs_trees(multigraph, bodies):
        return False
    for u, v, _ in multigraph.multiplicity:
        if not packs_trees(multigraph.delete_edge(u, v), bodies):
            logger.debug("Body-bar framework loses rigidity without (%d, %d)", u, v)
            return False
    return True


# Body-hinge frameworks

def _check_hinge_dimension(d: int) -> int:
    if d < 2:
        raise DomainError(f"Body-hinge rigidity needs d >= 2, got {d}")
    return body_count(d)


def body_hinge_rigid(graph: GraphLike, d: int) -> bool:
    """
    Generic body-hinge rigidity in R^d.

    With D = d(d+1)/2 the framework is rigid iff (D-1)G packs D spanning trees.

    Raises:
        DomainError: If d < 2
    """
    bodies = _check_hinge_dimension(d)
    if graph.n <= 1:
        return True
    return packs_trees(scale(graph, bodies - 1), bodies)


def body_hinge_globally_rigid(graph: GraphLike, d: int) -> bool:
    """
    Generic body-hinge global rigidity in R^d.

    In the plane this is 3-edge-connectivity. For d >= 3 it is the statement
    that (D-1)G - e packs D trees for every edge copy e, i.e. that the strength
    of (D-1)G exceeds D.

    Raises:
        DomainError: If d < 2
    """
    bodies = _check_hinge_dimension(d)
    if graph.n <= 1:
        return True
    if d == 2:
        return edge_connectivity(graph)[0] >= 3
    return strength(graph).value * (bodies - 1) > bodies


def body_hinge_globally_rigid_literal(
    graph: GraphLike, d: int, deletion_over: str = "scaled"
) -> bool:
    """
    Per-deletion form of body_hinge_globally_rigid for d >= 3.

    Args:
        graph: Graph or multigraph
        d: Dimension, at least 3
        deletion_over: "scaled" deletes each edge copy of (D-1)G in turn;
            "base" deletes one copy for each edge of G

    Returns:
        Whether every deletion still packs D trees
    """
    bodies = _check_hinge_dimension(d)
    if d == 2:
        raise DomainError("The per-deletion form applies to d >= 3")
    scaled = scale(graph, bodies - 1)
    if deletion_over == "scaled":
        deletions = scaled.edge_list()
    elif deletion_over == "base":
        deletions = [(u, v) for u, v, _ in as_multigraph(graph).multiplicity]
    else:
        raise ValueError(f"Unknown deletion reading {deletion_over!r}")
    for u, v in deletions:
        if not packs_trees(scaled.delete_edge(u, v), bodies):
            return False
    return True
