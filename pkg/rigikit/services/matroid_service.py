"""Matroid union over edge-set independence oracles.

Elements are edge ids of a multigraph's edge list, so parallel copies are
distinct elements. The engine partitions as many elements as possible into
one independent set per oracle, augmenting along shortest paths in the
exchange graph.
"""

import logging
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import (
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from networkx.utils import UnionFind

from rigikit.models.graph_models import Edge, GraphLike, as_multigraph

logger = logging.getLogger(__name__)


class OracleKind(str, Enum):
    """Edge-set matroids available to the union engine."""

    GRAPHIC = "graphic"
    BICIRCULAR = "bicircular"


class PartView:
    """
    Independent set of one oracle, frozen between augmentations.

    The default exchange search tries every swap with the oracle's independence
    test; subclasses answer from structure.
    """

    def __init__(self, oracle: "MatroidOracle", members: FrozenSet[int]):
        self.oracle = oracle
        self.members = members

    def exchange_candidates(self, x: int) -> Optional[List[int]]:
        """
        Elements y with members - y + x independent.

        Returns:
            None when members + x is already independent, otherwise the
            (possibly empty) list of exchangeable members in increasing order
        """
        if self.oracle.is_independent(self.members | {x}):
            return None
        return [
            y
            for y in sorted(self.members)
            if self.oracle.is_independent((self.members - {y}) | {x})
        ]


class MatroidOracle(ABC):
    """Independence oracle over the edge ids of a fixed edge list."""

    def __init__(self, n: int, edges: Sequence[Edge]):
        self.n = n
        self.edges = list(edges)

    @abstractmethod
    def is_independent(self, members: Iterable[int]) -> bool:
        """Decide independence of a set of edge ids."""

    @property
    @abstractmethod
    def full_rank(self) -> int:
        """Rank of a spanning basis on n vertices (when one exists)."""

    def view(self, members: FrozenSet[int]) -> PartView:
        return PartView(self, members)


class _ForestView(PartView):
    def __init__(self, oracle: "MatroidOracle", members: FrozenSet[int]):
        super().__init__(oracle, members)
        self.adjacency: Dict[int, List[Tuple[int, int]]] = {}
        for edge_id in sorted(members):
            u, v = oracle.edges[edge_id]
            self.adjacency.setdefault(u, []).append((v, edge_id))
            self.adjacency.setdefault(v, []).append((u, edge_id))

    def exchange_candidates(self, x: int) -> Optional[List[int]]:
        # The fundamental cycle of x is its tree path
        source, target = self.oracle.edges[x]
        via: Dict[int, Tuple[int, int]] = {source: (source, -1)}
        queue = deque([source])
        while queue and target not in via:
            v = queue.popleft()
            for w, edge_id in self.adjacency.get(v, ()):
                if w not in via:
                    via[w] = (v, edge_id)
                    queue.append(w)
        if target not in via:
            return None
        path = []
        v = target
        while v != source:
            v, edge_id = via[v]
            path.append(edge_id)
        return sorted(path)


class GraphicOracle(MatroidOracle):
    """Forests: independent iff the edges contain no cycle."""

    def is_independent(self, members: Iterable[int]) -> bool:
        components = UnionFind(range(self.n))
        for edge_id in members:
            u, v = self.edges[edge_id]
            if components[u] == components[v]:
                return False
            components.union(u, v)
        return True

    @property
    def full_rank(self) -> int:
        return max(self.n - 1, 0)

    def view(self, members: FrozenSet[int]) -> PartView:
        return _ForestView(self, members)


class BicircularOracle(MatroidOracle):
    """Pseudoforests: independent iff every component has at most one cycle."""

    def is_independent(self, members: Iterable[int]) -> bool:
        components = UnionFind(range(self.n))
        chosen = list(members)
        for edge_id in chosen:
            components.union(*self.edges[edge_id])
        edge_count: Dict[int, int] = {}
        for edge_id in chosen:
            root = components[self.edges[edge_id][0]]
            edge_count[root] = edge_count.get(root, 0) + 1
        vertex_count: Dict[int, int] = {}
        for v in range(self.n):
            root = components[v]
            vertex_count[root] = vertex_count.get(root, 0) + 1
        return all(count <= vertex_count[root] for root, count in edge_count.items())

    @property
    def full_rank(self) -> int:
        return self.n


ORACLES = {
    OracleKind.GRAPHIC: GraphicOracle,
    OracleKind.BICIRCULAR: BicircularOracle,
}


@dataclass
class UnionResult:
    """
    Final state of a matroid union run.

    parts[i] is independent in oracle i; unplaced elements could not be added
    by any augmenting path; reachable is the set of elements reachable in the
    exchange graph from the unplaced ones (empty when everything was placed).
    """

    parts: List[FrozenSet[int]]
    unplaced: List[int]
    reachable: FrozenSet[int]

    @property
    def size(self) -> int:
        return sum(len(part) for part in self.parts)


def _exchange_step(
    views: List[PartView], owner: Dict[int, int], x: int
) -> Iterable[Tuple[int, Optional[List[int]]]]:
    for i, view in enumerate(views):
        if owner.get(x) == i:
            continue
        yield i, view.exchange_candidates(x)


def _augment(
    parts: List[Set[int]],
    views: List[PartView],
    owner: Dict[int, int],
    start: int,
) -> bool:
    """Breadth-first search for a shortest augmenting path from an unplaced element."""
    parent: Dict[int, Tuple[int, int]] = {}
    visited = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i, candidates in _exchange_step(views, owner, x):
            if candidates is None:
                # x enters part i directly; replay the path backwards
                current, target = x, i
                while True:
                    previous_owner = owner.get(current)
                    if previous_owner is not None:
                        parts[previous_owner].discard(current)
                    parts[target].add(current)
                    owner[current] = target
                    if current == start:
                        break
                    current, target = parent[current]
                return True
            for y in candidates:
                if y not in visited:
                    visited.add(y)
                    parent[y] = (x, i)
                    queue.append(y)
    return False


def _reachable(
    views: List[PartView], owner: Dict[int, int], sources: List[int]
) -> FrozenSet[int]:
    seen = set(sources)
    queue = deque(sources)
    while queue:
        x = queue.popleft()
        for _, candidates in _exchange_step(views, owner, x):
            for y in candidates or ():
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return frozenset(seen)


def matroid_union(
    oracles: Sequence[MatroidOracle],
    elements: Optional[Sequence[int]] = None,
    initial: Optional[Sequence[Iterable[int]]] = None,
) -> UnionResult:
    """
    Maximum-size partition of elements into sets independent in each oracle.

    Args:
        oracles: One independence oracle per part, all over the same edge list
        elements: Element ids to place (default: every edge id)
        initial: Optional starting parts, each independent in its oracle

    Returns:
        UnionResult with parts, leftover elements and the exchange-reachable set
    """
    if not oracles:
        raise ValueError("Matroid union needs at least one oracle")
    ground = list(range(len(oracles[0].edges))) if elements is None else list(elements)

    parts: List[Set[int]] = [set() for _ in oracles]
    owner: Dict[int, int] = {}
    if initial is not None:
        for i, members in enumerate(initial):
            for x in members:
                parts[i].add(x)
                owner[x] = i

    # Greedy placement, then one augmentation attempt per leftover element
    leftovers: List[int] = []
    for x in ground:
        if x in owner:
            continue
        for i, oracle in enumerate(oracles):
            if oracle.is_independent(parts[i] | {x}):
                parts[i].add(x)
                owner[x] = i
                break
        else:
            leftovers.append(x)

    unplaced: List[int] = []
    for x in leftovers:
        views = [oracle.view(frozenset(part)) for oracle, part in zip(oracles, parts)]
        if not _augment(parts, views, owner, x):
            unplaced.append(x)

    views = [oracle.view(frozenset(part)) for oracle, part in zip(oracles, parts)]
    reachable = _reachable(views, owner, unplaced) if unplaced else frozenset()
    logger.debug(
        "Matroid union over %d oracles placed %d of %d elements",
        len(oracles), len(owner), len(ground),
    )
    return UnionResult([frozenset(p) for p in parts], unplaced, reachable)


def build_oracles(
    graph: GraphLike, kinds: Sequence[Union[OracleKind, str]]
) -> Tuple[List[Edge], List[MatroidOracle]]:
    """Edge list of the (multi)graph and one oracle per requested kind."""
    edges = as_multigraph(graph).edge_list()
    return edges, [ORACLES[OracleKind(kind)](graph.n, edges) for kind in kinds]


def matroid_union_rank(
    graph: GraphLike,
    oracle_a: Union[OracleKind, str],
    oracle_b: Union[OracleKind, str],
) -> int:
    """
    Rank of the edge set in the union of two edge-set matroids.

    Args:
        graph: Graph or multigraph
        oracle_a: First matroid ("graphic" or "bicircular")
        oracle_b: Second matroid

    Returns:
        Size of the largest edge set splitting into an independent set of each
    """
    _, oracles = build_oracles(graph, [oracle_a, oracle_b])
    return matroid_union(oracles).size
