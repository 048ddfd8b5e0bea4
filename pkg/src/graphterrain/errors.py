"""Exceptions shared across the package."""


class GraphTerrainError(Exception):
    """Base class for all package errors."""


class ParseError(GraphTerrainError):
    """A text input line could not be parsed."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class EmptyGraphError(GraphTerrainError):
    """Input describes a graph with no edges and no vertices."""


class CoverageError(GraphTerrainError):
    """A scalar file does not cover every vertex/edge of the graph."""


class UnknownIdError(GraphTerrainError):
    """A vertex or edge id does not exist in the graph."""


class DuplicateDefinitionError(GraphTerrainError):
    """The same vertex/edge is given two different scalar values."""


class CapExceededError(GraphTerrainError):
    """An operation refused to run because the input exceeds its size cap."""
