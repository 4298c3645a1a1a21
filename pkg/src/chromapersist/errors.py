"""Exception types shared across the package."""

from __future__ import annotations


class GraphInvariantError(ValueError):
    """A graph value violates a structural invariant (bad ids, loops, duplicate edges)."""


class DuplicateWeightError(GraphInvariantError):
    """Two edges carry the same weight, so the threshold order is ambiguous."""


class EdgeListParseError(ValueError):
    """An edge-list file is malformed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class EngineUnsupportedError(ValueError):
    """An engine was invoked on a graph outside its supported class."""


class ConsistencyError(ValueError):
    """An internal cross-check failed (non-integer interpolation, negative Betti numbers)."""
