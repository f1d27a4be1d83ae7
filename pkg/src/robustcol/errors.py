"""Exception hierarchy shared by every module of the package."""


class RobustColError(Exception):
    """Base class for all errors raised by robustcol."""


class GraphInputError(RobustColError, ValueError):
    """Malformed input while constructing a graph."""


class VertexRangeError(GraphInputError):
    pass


class SelfLoopError(GraphInputError):
    pass


class DuplicateEdgeError(GraphInputError):
    pass


class InvalidSelectionError(RobustColError, ValueError):
    """A selection names a non-edge, a non-incident edge, or exceeds its cap."""


class EdgeSubsetError(RobustColError, ValueError):
    pass


class SizeLimitError(RobustColError):
    """The instance is larger than the configured exact-solver limit."""


class DomainError(RobustColError, ValueError):
    """Parameters fall outside the range where an operation is defined."""


class NotThresholdError(DomainError):
    pass


class NotChordalError(DomainError):
    pass


class NotBipartiteError(DomainError):
    pass


class NotForestError(DomainError):
    pass


class InvalidPartitionError(DomainError):
    pass


class ParseError(RobustColError, ValueError):
    """A text file in one of the line formats could not be parsed."""
