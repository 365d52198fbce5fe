"""Exception hierarchy shared by every module."""

from __future__ import annotations


class CircleRepError(Exception):
    """Base class for all errors raised by circlerep."""


class GraphError(CircleRepError, ValueError):
    pass


class InvalidLabel(GraphError):
    pass


class DuplicateVertex(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class UnknownVertex(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class Disconnected(GraphError):
    pass


class WordError(CircleRepError, ValueError):
    pass


class OddOccurrence(WordError):
    def __init__(self, label: str, count: int):
        super().__init__(f"label {label!r} occurs {count} times, expected 2")
        self.label = label
        self.count = count


class UnknownSymbol(WordError):
    pass


class InvalidPartial(CircleRepError, ValueError):
    """The partial word does not represent the induced subgraph it covers."""

    def __init__(self, message: str, pair: tuple[str, str] | None = None):
        super().__init__(message)
        self.pair = pair


class TooLarge(CircleRepError, ValueError):
    """Input exceeds the size a brute-force routine accepts."""


class BoundExceeded(CircleRepError):
    """A bounded search was asked for an instance above its configured bound."""

    def __init__(self, size: int, bound: int, what: str = "prime graph"):
        super().__init__(f"{what} of size {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound


class LayoutError(CircleRepError):
    """The partial word cannot be laid out over the ~ classes."""


class TooManyBlocks(LayoutError):
    def __init__(self, cls: int):
        super().__init__(f"class {cls} spans more than two maximal subwords")
        self.cls = cls


class NonAlternatingBlocks(LayoutError):
    def __init__(self, first: int, second: int):
        super().__init__(f"two-block classes {first} and {second} do not alternate")
        self.classes = (first, second)


class CyclicPrecedence(LayoutError):
    pass


class MalformedAnchor(CircleRepError, ValueError):
    pass


class ParseError(CircleRepError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line


class ValidationError(CircleRepError, ValueError):
    pass
