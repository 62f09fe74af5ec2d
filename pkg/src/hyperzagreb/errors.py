"""Exception hierarchy for hyperzagreb."""


class HyperZagrebError(Exception):
    """Base class for every error raised by this package."""


class InvalidHypergraph(HyperZagrebError, ValueError):
    pass


class VertexOutOfRange(InvalidHypergraph):
    pass


class DuplicateVertexInEdge(InvalidHypergraph):
    pass


class DuplicateEdge(InvalidHypergraph):
    pass


class EdgeTooSmall(InvalidHypergraph):
    pass


class NotUniform(HyperZagrebError, ValueError):
    pass


class NotLinear(HyperZagrebError, ValueError):
    pass


class NotConnected(HyperZagrebError, ValueError):
    pass


class LengthTooSmall(HyperZagrebError, ValueError):
    pass


class IllegalParameters(HyperZagrebError, ValueError):
    pass


class UniformityMismatch(HyperZagrebError, ValueError):
    pass


class IllegalMove(HyperZagrebError, ValueError):
    pass


class ResultNotLinear(IllegalMove):
    pass


class ResultDuplicateEdge(IllegalMove):
    pass


class NotBicyclic(HyperZagrebError, ValueError):
    pass


class UnrecognizedCore(HyperZagrebError):
    """A bicyclic core matched none of the six base shapes (internal contradiction)."""


class ParameterOutOfRange(HyperZagrebError, ValueError):
    pass


class NotInteger(HyperZagrebError, ArithmeticError):
    pass


class TooLarge(HyperZagrebError):
    """Input exceeds the canonical-labeling size guard or step budget."""


class GuardExceeded(HyperZagrebError):
    """Enumeration request is above the configured edge-count guard."""


class EmptyFamily(HyperZagrebError):
    pass


class FormatError(HyperZagrebError, ValueError):
    """Malformed .hg / JSON hypergraph input."""


class OutOfTheoremRange(UserWarning):
    """Emitted when a construction is requested outside the range a theorem covers."""
