"""Spectral decision certificates and summaries."""

from dataclasses import dataclass
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from rigikit.models.quadratic import QuadraticNumber, Scalar


def _sign(value: Scalar) -> int:
    if isinstance(value, QuadraticNumber):
        return value.sign()
    return (value > 0) - (value < 0)


@dataclass(frozen=True)
class InertiaCertificate:
    """
    Signature of a symmetric matrix from a congruence diagonalization.

    Each pivot is either (d,) for a 1x1 block or (p, q, r) for the 2x2 block
    [[p, q], [q, r]]; zero_tail is the size of the trailing zero block.
    """

    n_neg: int
    n_zero: int
    n_pos: int
    pivots: Tuple[Tuple[Scalar, ...], ...]
    zero_tail: int

    @property
    def dimension(self) -> int:
        return self.n_neg + self.n_zero + self.n_pos

    def recount(self) -> Tuple[int, int, int]:
        """Recompute (n_neg, n_zero, n_pos) from the pivot transcript alone."""
        neg, zero, pos = 0, self.zero_tail, 0
        for pivot in self.pivots:
            if len(pivot) == 1:
                s = _sign(pivot[0])
                if s < 0:
                    neg += 1
                elif s > 0:
                    pos += 1
                else:
                    zero += 1
                continue
            p, q, r = pivot
            determinant = _sign(p * r - q * q)
            if determinant < 0:
                neg += 1
                pos += 1
            elif determinant > 0:
                # Definite block, sign of its diagonal
                if _sign(p + r) > 0:
                    pos += 2
                else:
                    neg += 2
            else:
                raise ValueError("Singular 2x2 pivot in inertia transcript")
        return neg, zero, pos

    def verify(self) -> bool:
        return self.recount() == (self.n_neg, self.n_zero, self.n_pos)


@dataclass(frozen=True)
class RamanujanVerdict:
    """Outcome of the exact Ramanujan test with its inertia certificate."""

    is_ramanujan: bool
    degree: int
    bipartite: bool
    threshold: QuadraticNumber
    certificate: InertiaCertificate

    def __bool__(self) -> bool:
        return self.is_ramanujan


class SpectrumSummary(BaseModel):
    """Floating point spectrum, for reports only."""

    approx_adjacency_eigenvalues: List[float] = Field(
        description="Adjacency eigenvalues in nonincreasing order (approximate)"
    )
    approx_lambda2: Optional[float] = Field(
        default=None, description="Second largest adjacency eigenvalue (approximate)"
    )
    approx_mu2: Optional[float] = Field(
        default=None, description="Algebraic connectivity (approximate)"
    )
    is_ramanujan: Optional[bool] = Field(
        default=None, description="Exact Ramanujan decision when defined"
    )
    bipartite: bool = Field(description="Whether the graph is bipartite")
