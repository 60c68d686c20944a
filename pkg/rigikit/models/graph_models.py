"""Immutable labeled graph values used as input by every service."""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

from rigikit.errors import InvalidArgumentError

Edge = Tuple[int, int]


def _normalize_pair(u: int, v: int, n: int) -> Edge:
    if u == v:
        raise InvalidArgumentError(f"Loop at vertex {u} is not allowed")
    if not (0 <= u < n and 0 <= v < n):
        raise InvalidArgumentError(f"Edge ({u}, {v}) out of range for n={n}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Simple undirected graph on vertices 0..n-1."""

    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError("Vertex count must be nonnegative")
        normalized = sorted(_normalize_pair(u, v, self.n) for u, v in self.edges)
        for first, second in zip(normalized, normalized[1:]):
            if first == second:
                raise InvalidArgumentError(f"Parallel edge {first} in a simple graph")
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        neighbors: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbors[u].add(v)
            neighbors[v].add(u)
        return tuple(frozenset(s) for s in neighbors)

    @cached_property
    def adjacency_masks(self) -> Tuple[int, ...]:
        """Neighborhoods as integer bitmasks."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(s) for s in self.adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def relabel(self, mapping: Sequence[int]) -> "SimpleGraph":
        """Return the graph with vertex v renamed mapping[v]."""
        if sorted(mapping) != list(range(self.n)):
            raise InvalidArgumentError("Relabeling must be a permutation of 0..n-1")
        edges = tuple((mapping[u], mapping[v]) for u, v in self.edges)
        return SimpleGraph(self.n, edges)

    def delete_vertices(self, removed: Iterable[int]) -> "SimpleGraph":
        """Delete vertices; survivors are renumbered in increasing order."""
        removed_set = set(removed)
        keep = [v for v in range(self.n) if v not in removed_set]
        index = {v: i for i, v in enumerate(keep)}
        edges = tuple(
            (index[u], index[v])
            for u, v in self.edges
            if u in index and v in index
        )
        return SimpleGraph(len(keep), edges)

    def delete_edge(self, u: int, v: int) -> "SimpleGraph":
        edge = _normalize_pair(u, v, self.n)
        if edge not in set(self.edges):
            raise InvalidArgumentError(f"Edge {edge} not present")
        return SimpleGraph(self.n, tuple(e for e in self.edges if e != edge))

    def add_edge(self, u: int, v: int) -> "SimpleGraph":
        return SimpleGraph(self.n, self.edges + (_normalize_pair(u, v, self.n),))

    def complement(self) -> "SimpleGraph":
        present = set(self.edges)
        return SimpleGraph(
            self.n,
            tuple(
                (u, v)
                for u in range(self.n)
                for v in range(u + 1, self.n)
                if (u, v) not in present
            ),
        )

    def to_multigraph(self) -> "Multigraph":
        return Multigraph(self.n, tuple((u, v, 1) for u, v in self.edges))


@dataclass(frozen=True)
class Multigraph:
    """Loopless undirected multigraph stored as (u, v, multiplicity) triples, u < v."""

    n: int
    multiplicity: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InvalidArgumentError("Vertex count must be nonnegative")
        counts: Dict[Edge, int] = {}
        for u, v, mult in self.multiplicity:
            if mult < 0:
                raise InvalidArgumentError("Multiplicities must be nonnegative")
            pair = _normalize_pair(u, v, self.n)
            counts[pair] = counts.get(pair, 0) + mult
        triples = tuple(
            (u, v, mult) for (u, v), mult in sorted(counts.items()) if mult > 0
        )
        object.__setattr__(self, "multiplicity", triples)

    @classmethod
    def from_pairs(cls, n: int, pairs: Mapping[Edge, int]) -> "Multigraph":
        return cls(n, tuple((u, v, mult) for (u, v), mult in pairs.items()))

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Edge]) -> "Multigraph":
        """Build from a list in which repeated pairs are parallel copies."""
        return cls(n, tuple((u, v, 1) for u, v in edges))

    @property
    def m(self) -> int:
        """Number of edges counted with multiplicity."""
        return sum(mult for _, _, mult in self.multiplicity)

    @cached_property
    def pair_multiplicity(self) -> Dict[Edge, int]:
        return {(u, v): mult for u, v, mult in self.multiplicity}

    def multiplicity_of(self, u: int, v: int) -> int:
        if u == v:
            return 0
        pair = (u, v) if u < v else (v, u)
        return self.pair_multiplicity.get(pair, 0)

    @cached_property
    def weighted_adjacency(self) -> Tuple[Dict[int, int], ...]:
        neighbors: List[Dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, mult in self.multiplicity:
            neighbors[u][v] = mult
            neighbors[v][u] = mult
        return tuple(neighbors)

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(sum(row.values()) for row in self.weighted_adjacency)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    @property
    def max_multiplicity(self) -> int:
        return max((mult for _, _, mult in self.multiplicity), default=0)

    @cached_property
    def support(self) -> SimpleGraph:
        return SimpleGraph(self.n, tuple((u, v) for u, v, _ in self.multiplicity))

    def is_simple(self) -> bool:
        return self.max_multiplicity <= 1

    def edge_list(self) -> List[Edge]:
        """Every edge copy as its own entry; the position is the edge id."""
        return [(u, v) for u, v, mult in self.multiplicity for _ in range(mult)]

    def delete_edge(self, u: int, v: int) -> "Multigraph":
        """Remove a single parallel copy of uv."""
        if self.multiplicity_of(u, v) == 0:
            raise InvalidArgumentError(f"Edge ({u}, {v}) not present")
        target = _normalize_pair(u, v, self.n)
        counts = dict(self.pair_multiplicity)
        counts[target] -= 1
        return Multigraph.from_pairs(self.n, counts)

    def delete_vertices(self, removed: Iterable[int]) -> "Multigraph":
        removed_set = set(removed)
        keep = [v for v in range(self.n) if v not in removed_set]
        index = {v: i for i, v in enumerate(keep)}
        return Multigraph(
            len(keep),
            tuple(
                (index[u], index[v], mult)
                for u, v, mult in self.multiplicity
                if u in index and v in index
            ),
        )

    def relabel(self, mapping: Sequence[int]) -> "Multigraph":
        if sorted(mapping) != list(range(self.n)):
            raise InvalidArgumentError("Relabeling must be a permutation of 0..n-1")
        return Multigraph(
            self.n,
            tuple((mapping[u], mapping[v], mult) for u, v, mult in self.multiplicity),
        )


GraphLike = Union[SimpleGraph, Multigraph]


def as_multigraph(graph: GraphLike) -> Multigraph:
    """View any graph value as a multigraph."""
    if isinstance(graph, Multigraph):
        return graph
    return graph.to_multigraph()


def support_of(graph: GraphLike) -> SimpleGraph:
    """Underlying simple graph."""
    if isinstance(graph, Multigraph):
        return graph.support
    return graph
