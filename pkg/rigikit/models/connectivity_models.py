"""Cut certificates returned by the connectivity service."""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Tuple


class CutKind(str, Enum):
    """Kind of separator."""

    EDGE = "edge-cut"
    VERTEX = "vertex-cut"


@dataclass(frozen=True)
class CutCertificate:
    """
    A separator together with one shore of the cut it produces.

    For edge cuts the separator lists (u, v) pairs of the support graph (the cut
    size counts multiplicities); for vertex cuts it lists vertices.
    """

    kind: CutKind
    separator: Tuple = ()
    side: FrozenSet[int] = frozenset()

    @property
    def is_empty(self) -> bool:
        return not self.separator
