"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid graph structure or vertex reference."""


class DisconnectedGraphError(GraphError):
    """Raised by distance operations that require a connected graph."""

    def __init__(self, unreached, source=None):
        self.unreached = unreached
        self.source = source
        where = "" if source is None else f" from vertex {source}"
        super().__init__(f"graph is disconnected: vertex {unreached} is unreachable{where}")


class ParameterError(ValueError):
    """Parameters outside the domain where a construction or formula is defined."""


class ParseError(ValueError):
    """Malformed serialized graph input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class TheoremViolation(AssertionError):
    """An enumerated graph exceeded one of the proven bounds.

    Carries the offending graph so the counterexample can be serialized.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
