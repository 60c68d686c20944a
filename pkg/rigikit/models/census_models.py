"""Canonical forms and census aggregation rows."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


@dataclass(frozen=True)
class CanonicalForm:
    """
    Canonical graph6 word of a graph.

    Two graphs (with colorings, when given) have equal forms iff they are
    isomorphic. `labeling[v]` is the canonical position of vertex v.
    """

    word: str
    labeling: Tuple[int, ...] = field(default=(), compare=False, hash=False)

    def __str__(self) -> str:
        return self.word


@dataclass(frozen=True)
class AutomorphismSearch:
    """Canonical form together with the automorphisms met during the search."""

    form: CanonicalForm
    generators: Tuple[Tuple[int, ...], ...]
    orbits: Tuple[Tuple[int, ...], ...]
    leaves: int


class CensusFilters(BaseModel):
    """Restrictions applied before classification."""

    connected: bool = Field(default=True, description="Only connected graphs")
    bipartite: bool = Field(default=False, description="Only bipartite graphs")
    vertex_transitive: bool = Field(
        default=False,
        description="Only vertex-transitive graphs, disjoint copies of one included",
    )

    @model_validator(mode="after")
    def include_disconnected_transitive(self) -> "CensusFilters":
        """Vertex-transitive strata count disconnected graphs as well."""
        if self.vertex_transitive:
            self.connected = False
        return self


class CensusCounts(BaseModel):
    """Counts over one (n, k, filters) stratum."""

    total: int = Field(default=0, description="Graphs enumerated up to isomorphism")
    ramanujan: int = Field(default=0, description="Ramanujan graphs")
    rigid: int = Field(default=0, description="Ramanujan graphs rigid in the plane")
    globally_rigid: int = Field(
        default=0, description="Ramanujan graphs globally rigid in the plane"
    )
    rigid_not_gr: int = Field(
        default=0, description="Ramanujan graphs rigid but not globally rigid"
    )
    edge_connectivity: Dict[str, int] = Field(
        default_factory=dict, description="Edge connectivity histogram over all graphs"
    )
    ramanujan_edge_connectivity: Dict[str, int] = Field(
        default_factory=dict, description="Edge connectivity histogram, Ramanujan only"
    )

    @model_validator(mode="after")
    def check_consistency(self) -> "CensusCounts":
        """globally_rigid <= rigid <= ramanujan <= total and the cross-foot."""
        if not (self.globally_rigid <= self.rigid <= self.ramanujan <= self.total):
            raise ValueError("Census counts are not nested")
        if self.rigid_not_gr != self.rigid - self.globally_rigid:
            raise ValueError("rigid_not_gr must equal rigid - globally_rigid")
        return self


class CensusRow(BaseModel):
    """One row of a census table."""

    n: int = Field(description="Vertex count")
    k: int = Field(description="Regular degree")
    filters: CensusFilters = Field(default_factory=CensusFilters)
    counts: CensusCounts = Field(default_factory=CensusCounts)
    ramanujan_graph6: Optional[List[str]] = Field(
        default=None, description="Canonical graph6 words of the Ramanujan stratum"
    )
    seconds: Optional[float] = Field(
        default=None, description="Wall-clock time (--timings)"
    )

    def csv_header(self) -> List[str]:
        return [
            "n", "k", "connected", "bipartite", "vertex_transitive",
            "total", "ramanujan", "rigid", "globally_rigid", "rigid_not_gr",
        ]

    def csv_values(self) -> List[str]:
        return [
            str(self.n),
            str(self.k),
            str(self.filters.connected).lower(),
            str(self.filters.bipartite).lower(),
            str(self.filters.vertex_transitive).lower(),
            str(self.counts.total),
            str(self.counts.ramanujan),
            str(self.counts.rigid),
            str(self.counts.globally_rigid),
            str(self.counts.rigid_not_gr),
        ]
