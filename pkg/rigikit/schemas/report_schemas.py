"""Pydantic schemas for the per-graph analysis report."""

from fractions import Fraction
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from rigikit.config import settings
from rigikit.models.bounds_models import BoundVerdict, SoundnessViolation


class BasicStats(BaseModel):
    """Schema for size and degree information."""

    n: int = Field(..., ge=0, description="Vertex count")
    m: int = Field(..., ge=0, description="Edge count")
    regular_degree: Optional[int] = Field(
        None, description="Common degree, null when the graph is irregular"
    )
    min_degree: int
    max_degree: int
    connected: bool
    bipartite: bool
    diameter: Optional[int] = Field(None, description="Null when disconnected")


class SpectralReport(BaseModel):
    """Schema for spectral information; approx_* fields are floating point."""

    is_ramanujan: Optional[bool] = Field(
        None, description="Exact decision, null unless connected k-regular with k >= 3"
    )
    approx_lambda2: Optional[float] = Field(
        None, description="Second largest adjacency eigenvalue (approximate)"
    )
    approx_mu2: Optional[float] = Field(
        None, description="Algebraic connectivity (approximate)"
    )


class ConnectivityReport(BaseModel):
    """Schema for exact connectivity values."""

    edge_connectivity: int
    vertex_connectivity: int
    jj_mixed: Optional[bool] = Field(
        None, description="Mixed edge-connectivity condition, null below four vertices"
    )


class RigidityReport(BaseModel):
    """Schema for generic rigidity in the plane."""

    rigid: bool
    redundantly_rigid: bool
    globally_rigid: bool

    @model_validator(mode="after")
    def check_nesting(self) -> "RigidityReport":
        """Global rigidity implies rigidity."""
        if self.globally_rigid and not self.rigid:
            raise ValueError("globally_rigid requires rigid")
        return self


class PackingReport(BaseModel):
    """Schema for spanning tree packing and strength."""

    tree_count: int = Field(
        ..., ge=0, description="Maximum edge-disjoint spanning trees"
    )
    strength: str = Field(..., description='Exact strength as "p/q"')


class BodyReport(BaseModel):
    """Schema for body-bar and body-hinge verdicts in one dimension."""

    d: int = Field(..., ge=1, description="Dimension")
    body_bar_rigid: Optional[bool] = None
    body_bar_globally_rigid: Optional[bool] = None
    body_hinge_rigid: Optional[bool] = Field(None, description="Null when d < 2")
    body_hinge_globally_rigid: Optional[bool] = Field(
        None, description="Null when d < 2"
    )


class SurfaceReport(BaseModel):
    """Schema for rigidity on surfaces of revolution."""

    sphere: bool
    cylinder: bool
    general_revolution: bool
    cylinder_redundantly_rigid: bool
    cylinder_globally_rigid: bool


class PropertyReport(BaseModel):
    """Schema for the full analysis record of one input graph."""

    schema_version: str = Field(default_factory=lambda: settings.schema_version)
    index: int = Field(..., ge=1, description="Input line number")
    graph6: str

    basic: BasicStats
    spectral: SpectralReport
    connectivity: Optional[ConnectivityReport] = Field(
        None, description="Null below two vertices"
    )
    rigidity: RigidityReport
    packing: Optional[PackingReport] = Field(
        None, description="Null below two vertices"
    )
    body: List[BodyReport] = Field(default_factory=list)
    surfaces: Optional[SurfaceReport] = Field(
        None, description="Null when the graph is disconnected"
    )

    # Sufficient conditions and their cross-check
    bounds: Optional[List[BoundVerdict]] = Field(
        None, description="Null when bound checking is disabled"
    )
    violations: List[SoundnessViolation] = Field(default_factory=list)

    seconds: Optional[float] = Field(None, description="Wall-clock time (--timings)")

    @model_validator(mode="after")
    def check_consistency(self) -> "PropertyReport":
        """The tree count is the floor of the strength."""
        if self.packing is not None:
            value = Fraction(self.packing.strength)
            if not self.packing.tree_count <= value < self.packing.tree_count + 1:
                raise ValueError("strength and tree_count disagree")
        return self

    @staticmethod
    def csv_header() -> List[str]:
        return [
            "index", "graph6", "n", "m", "regular_degree", "is_ramanujan",
            "edge_connectivity", "vertex_connectivity", "rigid",
            "redundantly_rigid", "globally_rigid", "tree_count", "strength",
        ]

    def csv_values(self) -> List[str]:
        def cell(value: object) -> str:
            if value is None:
                return ""
            if isinstance(value, bool):
                return str(value).lower()
            return str(value)

        connectivity = self.connectivity
        packing = self.packing
        return [
            cell(self.index),
            self.graph6,
            cell(self.basic.n),
            cell(self.basic.m),
            cell(self.basic.regular_degree),
            cell(self.spectral.is_ramanujan),
            cell(connectivity.edge_connectivity if connectivity else None),
            cell(connectivity.vertex_connectivity if connectivity else None),
            cell(self.rigidity.rigid),
            cell(self.rigidity.redundantly_rigid),
            cell(self.rigidity.globally_rigid),
            cell(packing.tree_count if packing else None),
            cell(packing.strength if packing else None),
        ]


def report_json_schema() -> dict:
    """JSON schema of PropertyReport, tagged with the schema version."""
    schema = PropertyReport.model_json_schema()
    schema["$id"] = f"rigikit/property-report/v{settings.schema_version}"
    return schema
