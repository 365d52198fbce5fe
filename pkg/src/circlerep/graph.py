"""Finite simple graphs with string labels.

Vertex order is insertion order and every deterministic choice elsewhere in
the package breaks ties by it, so an input file fully determines behaviour.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateVertex,
    InvalidLabel,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)


class Graph:
    """Immutable labelled simple graph."""

    __slots__ = ("_vertices", "_adj", "_index", "_masks", "_m")

    def __init__(self, vertices: Sequence[str], adj: dict[str, frozenset[str]]):
        # Trusted constructor; use build_graph() for validated input.
        self._vertices = tuple(vertices)
        self._adj = adj
        self._index = {v: i for i, v in enumerate(self._vertices)}
        self._masks: tuple[int, ...] | None = None
        self._m = sum(len(n) for n in adj.values()) // 2

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def index(self, v: str) -> int:
        return self._index[v]

    @property
    def edge_count(self) -> int:
        return self._m

    def edges(self) -> list[tuple[str, str]]:
        """Edges as (u, v) with u before v in vertex order."""
        out = []
        idx = self._index
        for u in self._vertices:
            iu = idx[u]
            for v in sorted(self._adj[u], key=idx.__getitem__):
                if idx[v] > iu:
                    out.append((u, v))
        return out

    def edge_set(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(e) for e in self.edges())

    def masks(self) -> tuple[int, ...]:
        """Adjacency rows as integer bitmasks indexed by vertex position."""
        if self._masks is None:
            idx = self._index
            rows = []
            for v in self._vertices:
                m = 0
                for u in self._adj[v]:
                    m |= 1 << idx[u]
                rows.append(m)
            self._masks = tuple(rows)
        return self._masks

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._vertices, self.edge_set()))

    def __repr__(self) -> str:
        es = " ".join(u + v if len(u) == len(v) == 1 else f"{u}-{v}" for u, v in self.edges())
        return f"Graph({list(self._vertices)}, [{es}])"


def _check_label(label: object) -> str:
    if not isinstance(label, str) or not label or any(c.isspace() for c in label):
        raise InvalidLabel(f"labels must be nonempty strings without whitespace: {label!r}")
    return label


def build_graph(vertices: Iterable[str], edges: Iterable[Sequence[str]]) -> Graph:
    """Validate and build a graph.

    Raises DuplicateVertex, UnknownEndpoint, SelfLoop or DuplicateEdge on
    malformed input.
    """
    order: list[str] = []
    adj: dict[str, set[str]] = {}
    for v in vertices:
        _check_label(v)
        if v in adj:
            raise DuplicateVertex(v)
        adj[v] = set()
        order.append(v)
    for e in edges:
        u, v = e
        for x in (u, v):
            if x not in adj:
                raise UnknownEndpoint(x)
        if u == v:
            raise SelfLoop(u)
        if v in adj[u]:
            raise DuplicateEdge(f"{u}-{v}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(order, {v: frozenset(n) for v, n in adj.items()})


def induced_subgraph(g: Graph, keep: Iterable[str]) -> Graph:
    keep = set(keep)
    for v in keep:
        if v not in g:
            raise UnknownVertex(v)
    order = [v for v in g.vertices if v in keep]
    return Graph(order, {v: g.neighbors(v) & keep for v in order})


def add_vertex(g: Graph, v: str, neighbors: Iterable[str] = ()) -> Graph:
    """Return g plus a new vertex v joined to `neighbors`."""
    if v in g:
        raise DuplicateVertex(v)
    nb = frozenset(neighbors)
    adj = {u: (g.neighbors(u) | {v}) if u in nb else g.neighbors(u) for u in g.vertices}
    adj[v] = nb
    return Graph((*g.vertices, v), adj)


def connected_components(g: Graph) -> list[frozenset[str]]:
    """Components, listed in order of their first vertex."""
    seen: set[str] = set()
    comps = []
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


@dataclass(frozen=True)
class Shape:
    kind: str  # "complete" | "star" | "other"
    center: str | None = None


COMPLETE = Shape("complete")
OTHER = Shape("other")


def classify_shape(g: Graph) -> Shape:
    """Complete, Star(center) or Other.

    K_1 and K_2 count as complete; a star needs a unique center of degree >= 2.
    """
    n = len(g)
    if n == 0 or not is_connected(g):
        raise Disconnected("classify_shape needs a nonempty connected graph")
    if g.edge_count == n * (n - 1) // 2:
        return COMPLETE
    if g.edge_count == n - 1:
        for v in g.vertices:
            if g.degree(v) == n - 1:
                return Shape("star", v)
    return OTHER


def complete_graph(labels: Sequence[str]) -> Graph:
    labels = list(labels)
    return build_graph(labels, [(labels[i], labels[j]) for i in range(len(labels)) for j in range(i + 1, len(labels))])


def cycle_graph(labels: Sequence[str]) -> Graph:
    labels = list(labels)
    n = len(labels)
    return build_graph(labels, [(labels[i], labels[(i + 1) % n]) for i in range(n)])


def path_graph(labels: Sequence[str]) -> Graph:
    labels = list(labels)
    return build_graph(labels, list(zip(labels, labels[1:])))


def star_graph(center: str, leaves: Sequence[str]) -> Graph:
    return build_graph([center, *leaves], [(center, x) for x in leaves])
