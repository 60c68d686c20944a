"""Graph constructions, structural queries and clique operations."""

import logging
from collections import Counter
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

import networkx as nx

from rigikit.errors import CliqueStructureError, InvalidArgumentError
from rigikit.models.graph_models import (
    GraphLike,
    Multigraph,
    SimpleGraph,
    as_multigraph,
    support_of,
)
from rigikit.services.graph6_service import emit_graph6

logger = logging.getLogger(__name__)


# Conversion

def to_networkx(graph: GraphLike) -> nx.Graph:
    """Simple networkx graph on 0..n-1 with multiplicities as the 'weight' attribute."""
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    if isinstance(graph, Multigraph):
        result.add_weighted_edges_from(graph.multiplicity)
    else:
        result.add_edges_from(graph.edges, weight=1)
    return result


def from_networkx(graph: nx.Graph) -> SimpleGraph:
    """Convert a networkx graph, numbering nodes in iteration order."""
    index = {node: i for i, node in enumerate(graph.nodes())}
    return SimpleGraph(
        len(index),
        tuple((index[u], index[v]) for u, v in graph.edges() if u != v),
    )


def multigraph_to_json(graph: Multigraph) -> Dict[str, Any]:
    """Serialize as simple support plus multiplicity table."""
    return {
        "support": emit_graph6(graph.support),
        "multiplicity": [[u, v, mult] for u, v, mult in graph.multiplicity],
    }


# Constructions

def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


def complete_graph(n: int) -> SimpleGraph:
    return from_networkx(nx.complete_graph(n))


def cycle_graph(n: int) -> SimpleGraph:
    return from_networkx(nx.cycle_graph(n))


def path_graph(n: int) -> SimpleGraph:
    return from_networkx(nx.path_graph(n))


def complete_bipartite_graph(a: int, b: int) -> SimpleGraph:
    return from_networkx(nx.complete_bipartite_graph(a, b))


def petersen_graph() -> SimpleGraph:
    return from_networkx(nx.petersen_graph())


def prism_graph(n: int) -> SimpleGraph:
    """Cartesian product C_n x K_2."""
    return from_networkx(nx.circular_ladder_graph(n))


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges: List[Tuple[int, int]] = []
    shift = 0
    for graph in graphs:
        edges.extend((u + shift, v + shift) for u, v in graph.edges)
        shift += graph.n
    return SimpleGraph(shift, tuple(edges))


# Structural queries

def is_connected(graph: GraphLike) -> bool:
    """
    Check connectivity by breadth-first search.

    Graphs on at most one vertex count as connected.
    """
    if graph.n <= 1:
        return True
    return bool(nx.is_connected(to_networkx(graph)))


def is_bipartite(graph: GraphLike) -> bool:
    return bool(nx.is_bipartite(to_networkx(graph)))


def degree_sequence(graph: GraphLike) -> List[int]:
    """Degrees (with multiplicity) in nonincreasing order."""
    return sorted(graph.degrees, reverse=True)


def regular_degree(graph: GraphLike) -> Optional[int]:
    """Return k when every vertex has degree k, otherwise None."""
    degrees = set(graph.degrees)
    if len(degrees) == 1:
        return degrees.pop()
    if graph.n == 0:
        return 0
    return None


def min_degree(graph: GraphLike) -> int:
    return min(graph.degrees, default=0)


def max_degree(graph: GraphLike) -> int:
    return max(graph.degrees, default=0)


def diameter(graph: GraphLike) -> Optional[int]:
    """Diameter by all-pairs BFS; None for disconnected or empty graphs."""
    if graph.n == 0 or not is_connected(graph):
        return None
    return int(nx.diameter(to_networkx(graph)))


def adjacency_matrix(graph: GraphLike) -> List[List[int]]:
    """Adjacency matrix with multiplicities as entries."""
    rows = [[0] * graph.n for _ in range(graph.n)]
    for u, v, mult in as_multigraph(graph).multiplicity:
        rows[u][v] = mult
        rows[v][u] = mult
    return rows


def laplacian_matrix(graph: GraphLike) -> List[List[int]]:
    """L = D - A, degrees counted with multiplicity."""
    rows = [[-entry for entry in row] for row in adjacency_matrix(graph)]
    for v, degree in enumerate(graph.degrees):
        rows[v][v] = degree
    return rows


# Constructions

def scale(graph: GraphLike, t: int) -> Multigraph:
    """
    Replace every edge with t parallel edges.

    Args:
        graph: Simple graph or multigraph
        t: Positive multiplier

    Returns:
        The multigraph tG

    Raises:
        InvalidArgumentError: If t < 1
    """
    if t < 1:
        raise InvalidArgumentError(f"Scale factor must be positive, got {t}")
    base = as_multigraph(graph)
    scaled = tuple((u, v, mult * t) for u, v, mult in base.multiplicity)
    return Multigraph(base.n, scaled)


def _cliques_through(graph: SimpleGraph, v: int, k: int) -> List[Tuple[int, ...]]:
    found = []
    for others in combinations(sorted(graph.neighbors(v)), k - 1):
        if all(graph.has_edge(a, b) for a, b in combinations(others, 2)):
            found.append(tuple(sorted((v,) + others)))
    return found


def clique_contract(graph: SimpleGraph, k: int) -> Multigraph:
    """
    Contract every k-clique of a k-regular graph to a single vertex.

    Args:
        graph: k-regular graph in which every vertex lies in exactly one k-clique
        k: Clique size (and degree)

    Returns:
        Multigraph H with one vertex per clique; multiplicities count the edges
        between clique pairs

    Raises:
        CliqueStructureError: If the graph is not k-regular, or some vertex lies in
            no k-clique or in more than one
    """
    if k < 2:
        raise InvalidArgumentError("Clique size must be at least 2")
    if regular_degree(graph) != k:
        raise CliqueStructureError(f"Graph is not {k}-regular")

    owner = [-1] * graph.n
    clique_count = 0
    for v in range(graph.n):
        found = _cliques_through(graph, v, k)
        if not found:
            raise CliqueStructureError(f"Vertex {v} lies in no {k}-clique")
        if len(found) > 1:
            raise CliqueStructureError(
                f"Vertex {v} lies in {len(found)} distinct {k}-cliques"
            )
        if owner[v] == -1:
            for member in found[0]:
                if owner[member] != -1:
                    raise CliqueStructureError(
                        f"Vertex {member} lies in two overlapping {k}-cliques"
                    )
                owner[member] = clique_count
            clique_count += 1

    # Count edges between clique pairs
    between: Counter = Counter()
    for u, v in graph.edges:
        if owner[u] != owner[v]:
            between[(owner[u], owner[v])] += 1
    logger.debug("Contracted %d %d-cliques", clique_count, k)
    return Multigraph.from_pairs(clique_count, between)


def clique_replace(graph: GraphLike, k: int) -> SimpleGraph:
    """
    Replace every vertex of a k-regular (multi)graph with a copy of K_k.

    The k edges at each vertex are attached to distinct clique vertices, in edge
    order. Vertex slot a of original vertex v becomes v*k + a.

    Args:
        graph: k-regular graph or multigraph
        k: Degree, at least 3

    Returns:
        k-regular simple graph on k*n vertices

    Raises:
        InvalidArgumentError: If k < 3 or the graph is not k-regular
    """
    if k < 3:
        raise InvalidArgumentError("Clique replacement needs k >= 3")
    if regular_degree(graph) != k:
        raise InvalidArgumentError(f"Graph is not {k}-regular")

    edges: List[Tuple[int, int]] = []
    for v in range(graph.n):
        edges.extend((v * k + a, v * k + b) for a, b in combinations(range(k), 2))

    slots = [0] * graph.n
    for u, v, mult in as_multigraph(graph).multiplicity:
        for _ in range(mult):
            edges.append((u * k + slots[u], v * k + slots[v]))
            slots[u] += 1
            slots[v] += 1
    return SimpleGraph(graph.n * k, tuple(edges))


def is_complete(graph: GraphLike) -> bool:
    """Complete simple support with no parallel edges."""
    if isinstance(graph, Multigraph) and not graph.is_simple():
        return False
    return support_of(graph).is_complete()
