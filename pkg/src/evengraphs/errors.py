"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for all graph-level failures."""


class SgrError(GraphError):
    """Malformed ``.sgr`` input.  ``line`` is 1-based, or None for file-level errors."""

    def __init__(self, message, line=None):
        self.message = message
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class InvalidLabel(GraphError):
    """A label was used that carries no edges (it belongs to the subdominant set)."""


class NotSymmetric(GraphError):
    """No central involution exists for the graph."""


class InvalidGraph(GraphError):
    """The graph fails the labeling laws needed by the requested operation."""


class PreconditionFailed(GraphError):
    """A composite rewrite was asked to act on structures of the wrong kind."""


class NonTermination(GraphError):
    """A normalization loop exceeded its proven step bound."""


class ResourceGuard(GraphError):
    """A requested enumeration or search is larger than the configured guard."""
