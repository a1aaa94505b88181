from __future__ import annotations

from typing import Optional


class EdgeIdealError(ValueError):
    """Base class for every error raised by the library."""


class ParseError(EdgeIdealError):
    """Malformed graph text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LoopEdgeError(ParseError):
    """An edge-list line joins a vertex to itself."""


class InvalidParamsError(EdgeIdealError):
    """Family parameters out of range."""


class VertexCapError(InvalidParamsError):
    """Graph larger than the bit-packing cap."""


class NoEdgesError(EdgeIdealError):
    """Operation needs at least one edge."""


class FaceCountOverflowError(EdgeIdealError):
    """Independence complex exceeds the configured face budget."""

    def __init__(self, budget: int, subset: Optional[int] = None):
        self.budget = budget
        self.subset = subset
        where = "" if subset is None else f" (W bitmask {subset:#x})"
        super().__init__(f"independence complex exceeds face budget {budget}{where}")

    def __reduce__(self):
        return type(self), (self.budget, self.subset)


class InfeasibleSizeError(EdgeIdealError):
    """Graph too large for exhaustive Hochster enumeration without --force."""
