"""Exception hierarchy for dl_cospectral."""

from typing import Optional, Tuple


class DLCospectralError(Exception):
    """Base class for every error raised by dl_cospectral."""


class ImproperlyConfigured(DLCospectralError):
    """A setting is missing or out of range."""


class Graph6Error(DLCospectralError, ValueError):
    """Malformed graph6 text; ``offset`` is the byte offset of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class EdgeListError(DLCospectralError, ValueError):
    """Malformed fixture edge list."""


class GraphError(DLCospectralError, ValueError):
    """Invalid vertex, edge or operand for a graph operation."""


class OrderLimitError(GraphError):
    """A graph order is above a configured limit."""

    def __init__(self, order: int, limit: int, what: str = "graph order"):
        super().__init__(f"{what} {order} exceeds the configured limit {limit}")
        self.order = order
        self.limit = limit


class DisconnectedGraphError(GraphError):
    """Distances are undefined because the graph is disconnected."""

    def __init__(self, unreachable: Tuple[int, int], components: int):
        u, v = unreachable
        super().__init__(
            f"graph is disconnected ({components} components): "
            f"vertex {v} is unreachable from vertex {u}"
        )
        self.unreachable = unreachable
        self.components = components


class NotATreeError(GraphError):
    """The operation needs a tree."""


class ParameterError(DLCospectralError, ValueError):
    """Invalid parameters for a graph family or a strongly regular graph."""


class HypothesisError(DLCospectralError, ValueError):
    """A construction hypothesis does not hold for the given input."""


class ConstructionError(DLCospectralError, RuntimeError):
    """A construction produced output that fails its own exact verification."""


class CorpusError(DLCospectralError, ValueError):
    """Corpus ingestion aborted."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SchemaError(DLCospectralError, ValueError):
    """A JSON record violates its schema."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class NumericalError(DLCospectralError, ArithmeticError):
    """A floating-point decomposition missed its residual tolerance."""

    def __init__(self, message: str, residual: Optional[float] = None):
        super().__init__(message)
        self.residual = residual
