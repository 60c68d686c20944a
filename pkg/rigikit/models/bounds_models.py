"""Verdicts of the spectral and structural sufficient conditions."""

from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field

from rigikit.models.quadratic import QuadraticNumber, fraction_to_str

ArgumentValue = Union[int, str]


class BoundProperty(str, Enum):
    """Properties a satisfied hypothesis can imply."""

    RIGID_2D = "rigid_2d"
    GLOBALLY_RIGID_2D = "globally_rigid_2d"
    GLOBALLY_RIGID_OR_EXCEPTION = "globally_rigid_2d_or_exception"
    PACKS_TREES = "packs_trees"
    STRENGTH_AT_LEAST = "strength_at_least"
    SCALED_DELETION_PACKS = "scaled_deletion_packs"
    EDGE_CONNECTED = "edge_connected"
    VERTEX_CONNECTED = "vertex_connected"
    BODY_BAR_RIGID = "body_bar_rigid"
    BODY_BAR_GLOBALLY_RIGID = "body_bar_globally_rigid"
    BODY_HINGE_RIGID = "body_hinge_rigid"
    BODY_HINGE_GLOBALLY_RIGID = "body_hinge_globally_rigid"
    SURFACE_RIGID = "surface_rigid"
    CYLINDER_REDUNDANTLY_RIGID = "cylinder_redundantly_rigid"
    CYLINDER_GLOBALLY_RIGID = "cylinder_globally_rigid"


class QuadraticJson(BaseModel):
    """a + b*sqrt(m) with rationals written as "p/q"."""

    a: str = Field(description="Rational part")
    b: str = Field(default="0", description="Coefficient of the square root")
    m: int = Field(default=0, description="Square-free radicand (0 when rational)")

    @classmethod
    def from_number(cls, value: QuadraticNumber) -> "QuadraticJson":
        return cls(a=fraction_to_str(value.a), b=fraction_to_str(value.b), m=value.m)

    def to_number(self) -> QuadraticNumber:
        return QuadraticNumber(Fraction(self.a), Fraction(self.b), self.m)


class Implication(BaseModel):
    """A property implied by a satisfied hypothesis."""

    property: BoundProperty
    arguments: Dict[str, ArgumentValue] = Field(
        default_factory=dict, description="Property parameters such as k, d, s, t"
    )
    confirmed: Optional[bool] = Field(
        default=None, description="Outcome of the exact checker, once cross-checked"
    )

    def key(self) -> Tuple[str, Tuple[Tuple[str, ArgumentValue], ...]]:
        return self.property.value, tuple(sorted(self.arguments.items()))


class BoundVerdict(BaseModel):
    """Exact evaluation of one sufficient condition on one graph."""

    theorem_id: str = Field(description="Identifier of the sufficient condition")
    hypothesis_holds: bool = Field(description="Whether every hypothesis is satisfied")
    implied_properties: List[Implication] = Field(
        default_factory=list, description="Properties the satisfied hypotheses imply"
    )
    threshold: Optional[QuadraticJson] = Field(
        default=None, description="Principal spectral threshold, exact"
    )
    margin_note: str = Field(default="", description="Human-readable detail")


class SoundnessViolation(BaseModel):
    """A satisfied hypothesis whose implied property the exact checker refuted."""

    theorem_id: str
    property: BoundProperty
    arguments: Dict[str, ArgumentValue] = Field(default_factory=dict)
    message: str = ""


class CrossCheckReport(BaseModel):
    """Every applicable bound on one graph, with implications confirmed exactly."""

    graph6: Optional[str] = Field(default=None, description="graph6 of a simple graph")
    verdicts: List[BoundVerdict] = Field(default_factory=list)
    violations: List[SoundnessViolation] = Field(default_factory=list)
    nilli_consistent: Optional[bool] = Field(
        default=None, description="mu_2 within the diameter bound (regular graphs only)"
    )
    moore_consistent: Optional[bool] = Field(
        default=None, description="n within the Moore bound (regular graphs only)"
    )

    @property
    def ok(self) -> bool:
        return (
            not self.violations
            and self.nilli_consistent is not False
            and self.moore_consistent is not False
        )
