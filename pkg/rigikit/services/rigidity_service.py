"""Generic rigidity in the plane via the (2,3) pebble game."""

import logging
from typing import List, Optional, Set, Tuple

import networkx as nx

from rigikit.errors import DomainError
from rigikit.models.graph_models import Edge, GraphLike, SimpleGraph, support_of
from rigikit.models.rigidity_models import (
    PEBBLES_PER_VERTEX,
    RIGID_BODY_FREEDOM,
    PebbleState,
)
from rigikit.services.connectivity_service import vertex_connectivity
from rigikit.services.graph_service import is_connected, regular_degree, to_networkx

logger = logging.getLogger(__name__)

# An edge uv is accepted when u and v together hold l + 1 free pebbles
ACCEPT_THRESHOLD = RIGID_BODY_FREEDOM + 1


# Pebble game

def _find_pebble(
    state: PebbleState, root: int, blocked: Set[int]
) -> Optional[List[int]]:
    """
    Depth-first search along arcs from root to a vertex with a free pebble.

    Returns the vertex path root, ..., w with w outside blocked, or None.
    Neighbors are visited in increasing vertex order.
    """
    parent = {root: root}
    stack = [root]
    while stack:
        v = stack.pop()
        fresh = []
        for w in sorted(state.out[v]):
            if w in parent or w in blocked:
                continue
            parent[w] = v
            if state.pebbles[w] > 0:
                path = [w]
                while path[-1] != root:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            fresh.append(w)
        stack.extend(reversed(fresh))
    return None


def _move_pebble(state: PebbleState, path: List[int]) -> None:
    """Reverse every arc on the path, bringing a free pebble back to path[0]."""
    for tail, head in zip(path, path[1:]):
        state.out[tail].remove(head)
        state.out[head].add(tail)
    state.pebbles[path[-1]] -= 1
    state.pebbles[path[0]] += 1


def _try_accept(state: PebbleState, u: int, v: int) -> bool:
    blocked = {u, v}
    while state.pebbles[u] + state.pebbles[v] < ACCEPT_THRESHOLD:
        moved = False
        for root in (u, v):
            if state.pebbles[root] >= PEBBLES_PER_VERTEX:
                continue
            path = _find_pebble(state, root, blocked)
            if path is not None:
                _move_pebble(state, path)
                moved = True
                break
        if not moved:
            return False

    root = u if state.pebbles[u] > 0 else v
    other = v if root == u else u
    state.pebbles[root] -= 1
    state.out[root].add(other)
    state.accepted.append((u, v) if u < v else (v, u))
    return True


def pebble_game(graph: GraphLike) -> PebbleState:
    """
    Run the (2,3) pebble game over the edges of the simple support in sorted order.

    Args:
        graph: Graph (multigraphs are reduced to their support)

    Returns:
        Final PebbleState; its accepted edges form a maximal (2,3)-sparse subset
    """
    simple = support_of(graph)
    state = PebbleState(simple.n)
    for u, v in simple.edges:
        if not _try_accept(state, u, v):
            logger.debug("Pebble game rejected edge (%d, %d)", u, v)
    return state


def rigidity_rank(graph: GraphLike) -> Tuple[int, Tuple[Edge, ...]]:
    """
    Rank of the edge set in the generic two-dimensional rigidity matroid.

    Args:
        graph: Graph with at least two vertices

    Returns:
        Tuple of (rank, independent edge set of that size)

    Raises:
        DomainError: If the graph has fewer than two vertices
    """
    if graph.n < 2:
        raise DomainError("Rigidity rank needs at least two vertices")
    state = pebble_game(graph)
    return state.rank, state.independent_set()


def is_sparse_23(edges: Tuple[Edge, ...], n: int) -> bool:
    """Check whether the edge set is (2,3)-sparse by running the pebble game on it."""
    if not edges:
        return True
    graph = SimpleGraph(n, edges)
    return pebble_game(graph).rank == graph.m


def is_rigid_2d(graph: GraphLike) -> bool:
    """
    Generic rigidity in the plane: a spanning (2,3)-tight subgraph exists.

    Graphs on at most one vertex are rigid.
    """
    if graph.n <= 1:
        return True
    rank, _ = rigidity_rank(graph)
    return rank == 2 * graph.n - RIGID_BODY_FREEDOM


def is_redundantly_rigid_2d(graph: GraphLike) -> bool:
    """
    Rigid after deleting any single edge.

    Only edges of one independent basis need to be tried: deleting any other
    edge leaves that basis in place.
    """
    if graph.n <= 1:
        return True
    simple = support_of(graph)
    if simple.m < 2 * simple.n - 2:
        return False
    rank, basis = rigidity_rank(simple)
    if rank != 2 * simple.n - RIGID_BODY_FREEDOM:
        return False
    for u, v in basis:
        if not is_rigid_2d(simple.delete_edge(u, v)):
            logger.debug("Edge (%d, %d) is not redundant", u, v)
            return False
    return True


def is_globally_rigid_2d(graph: GraphLike) -> bool:
    """
    Generic global rigidity in the plane.

    Complete graphs on at most three vertices are globally rigid; otherwise the
    graph must be 3-connected and redundantly rigid.
    """
    simple = support_of(graph)
    if simple.n <= 3:
        return simple.is_complete()
    if not is_redundantly_rigid_2d(simple):
        return False
    return vertex_connectivity(simple)[0] >= 3


def max_clique_at_most(graph: GraphLike, c: int) -> bool:
    """Decide whether every clique has at most c vertices."""
    for clique in nx.find_cliques(to_networkx(support_of(graph))):
        if len(clique) > c:
            return False
    return True


def vt_globally_rigid_characterization(graph: GraphLike) -> bool:
    """
    Global rigidity of a connected vertex-transitive k-regular graph from n, k
    and its clique number alone.

    Args:
        graph: Connected vertex-transitive graph of degree k >= 2

    Returns:
        Whether the graph is globally rigid in the plane

    Raises:
        DomainError: If the graph is disconnected, irregular, of degree < 2 or not
            vertex-transitive
    """
    from rigikit.services.canonical_service import is_vertex_transitive

    simple = support_of(graph)
    k = regular_degree(simple)
    if k is None or k < 2:
        raise DomainError("Characterization needs a regular graph of degree at least 2")
    if not is_connected(simple):
        raise DomainError("Characterization needs a connected graph")
    if not is_vertex_transitive(simple):
        raise DomainError("Graph is not vertex-transitive")

    n = simple.n
    if k == 2:
        return n <= 3
    if k == 3:
        return n <= 4
    if k == 4:
        return max_clique_at_most(simple, 3) or n <= 11
    if k == 5:
        return max_clique_at_most(simple, 4) or n <= 28
    return True
