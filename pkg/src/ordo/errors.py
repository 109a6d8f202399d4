"""Exception types raised by ordo."""

from __future__ import annotations


class OrdoError(ValueError):
    """Base class for all validation errors raised by this package."""


class InvalidDigraph(OrdoError):
    """A loop, an out-of-range endpoint or a negative weight."""


class LengthMismatch(OrdoError):
    pass


class NotPermutation(OrdoError):
    pass


class IndexOutOfRange(OrdoError):
    pass


class PrecedenceCycle(OrdoError):
    """The transitive closure of a precedence relation contains a cycle."""

    def __init__(self, cycle: list[int]) -> None:
        self.cycle = cycle
        super().__init__(f"precedence relation is cyclic: {' < '.join(map(str, cycle))}")


class SpecViolation(OrdoError):
    """Inputs break the precondition of an operation (e.g. overlapping S and T)."""


class CapExceeded(OrdoError):
    """An exhaustive search was asked to go beyond its configured size cap."""

    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} = {size} exceeds the configured cap {cap}")


class FamilyViolation(OrdoError):
    """The left-going arcs of an order are not a member of the requested family."""

    def __init__(self, message: str, vertex: int | None = None, arc: int | None = None) -> None:
        self.vertex = vertex
        self.arc = arc
        super().__init__(message)


class KTooLarge(OrdoError):
    pass


class ShapeViolation(OrdoError):
    """A formula or source instance does not have the shape a gadget requires."""


class AssignmentRejected(OrdoError):
    """A witness builder was handed an assignment that does not satisfy the formula."""


class MalformedClaim(OrdoError):
    pass


class ParseError(OrdoError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
