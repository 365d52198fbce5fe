"""Circle graph representations: recognition, partial representation
extension, simultaneous representations, and brute-force oracles."""

from .errors import BoundExceeded, CircleRepError, InvalidPartial, TooLarge
from .extend import Engine, extend, recognize
from .graph import Graph, build_graph, classify_shape, connected_components, induced_subgraph
from .words import (
    EMPTY,
    CircularWord,
    alternates,
    canonical_form,
    circular_equal,
    induced_subword,
    parse_word,
    realizes,
    reverse,
    rotate,
)

__all__ = [
    "BoundExceeded",
    "CircleRepError",
    "CircularWord",
    "EMPTY",
    "Engine",
    "Graph",
    "InvalidPartial",
    "TooLarge",
    "alternates",
    "build_graph",
    "canonical_form",
    "circular_equal",
    "classify_shape",
    "connected_components",
    "extend",
    "induced_subgraph",
    "induced_subword",
    "parse_word",
    "realizes",
    "recognize",
    "reverse",
    "rotate",
]
