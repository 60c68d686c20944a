"""Exception types raised by rigikit services."""

from typing import Optional


class RigikitError(Exception):
    """Base class for all rigikit errors."""


class Graph6ParseError(RigikitError, ValueError):
    """Malformed graph6 input."""

    def __init__(self, message: str, offset: int, line: Optional[int] = None):
        self.offset = offset
        self.line = line
        location = f"byte {offset}" if line is None else f"line {line}, byte {offset}"
        super().__init__(f"{message} ({location})")


class InvalidArgumentError(RigikitError, ValueError):
    """An argument is outside the operation's domain of definition."""


class DomainError(RigikitError, ValueError):
    """A graph does not satisfy an operation's precondition."""


class CliqueStructureError(RigikitError, ValueError):
    """A regular graph does not decompose into vertex-disjoint k-cliques."""


class CatalogLookupError(RigikitError, LookupError):
    """Unknown catalog entry name."""


class CatalogFactError(RigikitError, ValueError):
    """A catalog entry failed one of its asserted facts."""


class EnumerationGuardError(RigikitError, ValueError):
    """Requested enumeration exceeds the configured desk-scale guard."""

    def __init__(self, message: str, limit: int):
        self.limit = limit
        super().__init__(message)
