"""Working state of the (2,3) pebble game."""

from dataclasses import dataclass, field
from typing import List, Set, Tuple

from rigikit.models.graph_models import Edge

PEBBLES_PER_VERTEX = 2
RIGID_BODY_FREEDOM = 3


@dataclass
class PebbleState:
    """
    Directed pebble assignment for the (2,3) pebble game.

    A vertex keeps its free pebbles in `pebbles`; every accepted edge is covered
    by one pebble of its tail and stored as the arc tail -> head in `out`.
    Per-call and mutable; never shared between threads.
    """

    n: int
    pebbles: List[int] = field(default_factory=list)
    out: List[Set[int]] = field(default_factory=list)
    accepted: List[Edge] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not self.pebbles:
            self.pebbles = [PEBBLES_PER_VERTEX] * self.n
        if not self.out:
            self.out = [set() for _ in range(self.n)]

    @property
    def rank(self) -> int:
        return len(self.accepted)

    @property
    def free_pebbles(self) -> int:
        return sum(self.pebbles)

    def independent_set(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.accepted))

    def is_consistent(self) -> bool:
        """Pebbles plus accepted edges account for all 2n pebbles; outdegrees match."""
        if self.free_pebbles + self.rank != PEBBLES_PER_VERTEX * self.n:
            return False
        return all(
            self.pebbles[v] + len(self.out[v]) == PEBBLES_PER_VERTEX
            for v in range(self.n)
        )
