"""Spanning tree packings, strength values and their certificates."""

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Optional, Tuple

from networkx.utils import UnionFind

from rigikit.models.graph_models import Edge
from rigikit.models.quadratic import fraction_to_str

Partition = Tuple[FrozenSet[int], ...]


def crossing_edges(edges: Tuple[Edge, ...], partition: Partition) -> Tuple[Edge, ...]:
    """Edges (with repetition) whose endpoints lie in different parts."""
    part_of = {v: index for index, part in enumerate(partition) for v in part}
    return tuple((u, v) for u, v in edges if part_of[u] != part_of[v])


def is_spanning_tree(n: int, tree: Tuple[Edge, ...]) -> bool:
    if len(tree) != n - 1:
        return False
    components = UnionFind(range(n))
    for u, v in tree:
        if components[u] == components[v]:
            return False
        components.union(u, v)
    return True


@dataclass(frozen=True)
class PackingResult:
    """
    Edge-disjoint spanning trees together with a deficiency certificate.

    When present, the deficiency X (the edges crossing `partition`) satisfies
    |X| < (tree_count + 1)(c - 1) with c = len(partition), so no packing of
    tree_count + 1 trees exists.
    """

    n: int
    tree_count: int
    forests: Tuple[Tuple[Edge, ...], ...]
    deficiency: Optional[Tuple[Edge, ...]] = None
    partition: Optional[Partition] = None

    def verify(self, edges: Tuple[Edge, ...]) -> bool:
        """
        Recheck both sides of the certificate against the multigraph's edge list.

        Trees must be spanning and use disjoint edge copies; the deficiency must
        be exactly the crossing edges and short enough.
        """
        if len(self.forests) != self.tree_count:
            return False
        if not all(is_spanning_tree(self.n, tree) for tree in self.forests):
            return False

        # Edge copies used by the trees must be available in the multigraph
        available: dict = {}
        for u, v in edges:
            available[(u, v)] = available.get((u, v), 0) + 1
        for tree in self.forests:
            for edge in tree:
                available[edge] = available.get(edge, 0) - 1
                if available[edge] < 0:
                    return False

        if self.partition is None or self.deficiency is None:
            return True
        if sorted(self.deficiency) != sorted(crossing_edges(edges, self.partition)):
            return False
        return len(self.deficiency) < (self.tree_count + 1) * (len(self.partition) - 1)


@dataclass(frozen=True)
class StrengthValue:
    """Exact strength with a partition attaining it."""

    value: Fraction
    witness_partition: Partition
    crossing: int

    def verify(self) -> bool:
        parts = len(self.witness_partition)
        if parts < 2:
            return False
        return Fraction(self.crossing, parts - 1) == self.value

    def __str__(self) -> str:
        return fraction_to_str(self.value)
