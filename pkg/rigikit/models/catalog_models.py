"""Named figure graphs and the facts asserted about them."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from rigikit.models.graph_models import SimpleGraph

FactValue = Union[bool, int]


class FactKind(str, Enum):
    """Checkable statements about a catalog graph."""

    VERTEX_COUNT = "vertex_count"
    EDGE_COUNT = "edge_count"
    REGULAR_DEGREE = "regular_degree"
    EDGE_CONNECTIVITY = "edge_connectivity"
    BIPARTITE = "bipartite"
    RAMANUJAN = "ramanujan"
    RIGID_2D = "rigid_2d"
    GLOBALLY_RIGID_2D = "globally_rigid_2d"
    VERTEX_TRANSITIVE = "vertex_transitive"
    BODY_HINGE_RIGID = "body_hinge_rigid"
    BODY_HINGE_GLOBALLY_RIGID = "body_hinge_globally_rigid"
    CYLINDER_REDUNDANTLY_RIGID = "cylinder_redundantly_rigid"
    # argument: integer polynomial in x, e.g. "x**3 - 7*x - 2"
    CHARPOLY_DIVISIBLE_BY = "charpoly_divisible_by"
    CHARPOLY_SHARES_ROOT_WITH = "charpoly_shares_root_with"


@dataclass(frozen=True)
class AssertedFact:
    kind: FactKind
    expected: FactValue
    argument: Optional[Union[int, str]] = None

    def __str__(self) -> str:
        if self.argument is None:
            return f"{self.kind.value} == {self.expected}"
        return f"{self.kind.value}({self.argument}) == {self.expected}"


@dataclass(frozen=True)
class CatalogEntry:
    """
    A graph transcribed from a figure.

    `labels[v]` is the figure label of vertex v (block then position, e.g. "23"
    for vertex 3 of block 2, or "a4"); the labeling itself carries no meaning
    beyond the isomorphism class.
    """

    name: str
    figure: str
    description: str
    graph: SimpleGraph
    labels: Tuple[str, ...]
    facts: Tuple[AssertedFact, ...]


class FactCheck(BaseModel):
    """Outcome of evaluating one asserted fact."""

    name: str = Field(description="Catalog entry")
    fact: str = Field(description="The asserted statement")
    expected: FactValue
    actual: FactValue
    passed: bool


class CatalogSummary(BaseModel):
    """Catalog entry as emitted by the CLI."""

    name: str
    figure: str
    description: str
    n: int = Field(description="Vertex count")
    m: int = Field(description="Edge count")
    graph6: str
    facts: List[str] = Field(default_factory=list)
