"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SignedGraphError(ValueError):
    """Base class for all errors raised by this package."""


# -- construction -------------------------------------------------------------

class DuplicateEdge(SignedGraphError):
    pass


class SelfLoop(SignedGraphError):
    pass


class Disconnected(SignedGraphError):
    pass


class VertexOutOfRange(SignedGraphError):
    pass


class BadSign(SignedGraphError):
    pass


class NotACycle(SignedGraphError):
    pass


# -- distances / resolution ---------------------------------------------------

class TooLarge(SignedGraphError):
    """Raised by exponential oracles when the graph exceeds their guard."""


class IncompatibleGraph(SignedGraphError):
    """The graph has a vertex pair whose max and min signed distances differ."""

    def __init__(self, witness: tuple[int, int], message: str | None = None):
        self.witness = witness
        super().__init__(message or f"graph is not distance compatible; witness pair {witness}")


class EmptyLandmarks(SignedGraphError):
    pass


class DuplicateLandmark(SignedGraphError):
    pass


class SizeCapExceeded(SignedGraphError):
    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"graph has {n} vertices, above the solver cap of {cap}")


class BadSize(SignedGraphError):
    pass


# -- families -----------------------------------------------------------------

class SignatureLengthMismatch(SignedGraphError):
    pass


class NotAWheel(SignedGraphError):
    pass


class NotAStar(SignedGraphError):
    pass


class NotComplete(SignedGraphError):
    pass


# -- trees --------------------------------------------------------------------

class NotATree(SignedGraphError):
    pass


class IsAPath(SignedGraphError):
    pass


class FormulaNotApplicable(SignedGraphError):
    """A special exterior major vertex has terminal degree 2."""

    def __init__(self, vertex: int, bounds: tuple[int, int]):
        self.vertex = vertex
        self.bounds = bounds
        super().__init__(
            f"special exterior major vertex {vertex} has terminal degree 2; "
            f"only bounds {bounds} are available"
        )


# -- verification / io --------------------------------------------------------

class UnknownTheorem(SignedGraphError):
    pass


class CapExceeded(SignedGraphError):
    pass


class ParseError(SignedGraphError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
