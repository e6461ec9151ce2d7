"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for every error raised by this package."""


class InvalidVertexError(GraphError): ...


class InvalidParamError(GraphError): ...


class DegreeNotTwoError(GraphError): ...


class NeighboursNotDistinctError(GraphError): ...


class NotEulerianError(GraphError): ...


class OddDegreeError(GraphError): ...


class NotACutVertexError(GraphError): ...


class NotBiconnectedError(GraphError): ...


class NotAnEndpointError(GraphError): ...


class NotASeparatorError(GraphError): ...


class NotATwoCutError(GraphError): ...


class SharedEndpointError(NotATwoCutError): ...


class PreconditionViolatedError(GraphError): ...


class NotClassHError(GraphError): ...


class TooLargeError(GraphError): ...


class ComponentTooLargeError(TooLargeError):
    """A final component exceeded the oracle budget; message names the component."""


class GraphSyntaxError(GraphError):
    """Malformed graph text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: "int | None" = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class LoopEdgeError(GraphSyntaxError): ...


class VertexOutOfRangeError(GraphSyntaxError): ...
