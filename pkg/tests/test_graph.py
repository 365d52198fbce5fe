import itertools

import pytest

from circlerep.errors import Disconnected, DuplicateEdge, DuplicateVertex, SelfLoop, UnknownEndpoint, UnknownVertex
from circlerep.graph import (
    build_graph,
    classify_shape,
    complete_graph,
    connected_components,
    cycle_graph,
    induced_subgraph,
    star_graph,
)
from circlerep.oracle import random_circle_graph


def test_single_vertex():
    g = build_graph(["a"], [])
    assert g.vertices == ("a",) and g.edge_count == 0


def test_gstar_edges(gstar):
    assert gstar.edge_set() == {frozenset(e) for e in [("s", "u"), ("t", "u"), ("u", "v"), ("v", "x"), ("v", "w")]}


@pytest.mark.parametrize(
    "verts, edges, err",
    [
        (["a", "b"], [("a", "b"), ("a", "b")], DuplicateEdge),
        (["a", "b"], [("a", "b"), ("b", "a")], DuplicateEdge),
        (["a", "a"], [], DuplicateVertex),
        (["a"], [("a", "z")], UnknownEndpoint),
        (["a"], [("a", "a")], SelfLoop),
    ],
)
def test_build_errors(verts, edges, err):
    with pytest.raises(err):
        build_graph(verts, edges)


def test_induced(gstar):
    sub = induced_subgraph(gstar, {"s", "t", "w", "x"})
    assert len(sub) == 4 and sub.edge_count == 0
    uv = induced_subgraph(gstar, {"u", "v"})
    assert uv.edge_set() == {frozenset("uv")}
    assert induced_subgraph(gstar, gstar.vertices) == gstar
    with pytest.raises(UnknownVertex):
        induced_subgraph(gstar, {"q"})


def test_induced_exhaustive_pairs():
    for seed in range(20):
        g, _ = random_circle_graph(8, seed)
        keep = [v for i, v in enumerate(g.vertices) if (seed >> (i % 5)) & 1 or i % 3 == 0]
        sub = induced_subgraph(g, keep)
        for x, y in itertools.combinations(g.vertices, 2):
            expect = g.has_edge(x, y) and x in keep and y in keep
            assert (x in sub and y in sub and sub.has_edge(x, y)) == expect


def test_components(gstar):
    assert connected_components(gstar) == [frozenset(gstar.vertices)]
    assert connected_components(build_graph(["a", "b"], [])) == [frozenset("a"), frozenset("b")]
    assert connected_components(build_graph([], [])) == []


def test_components_partition():
    for seed in range(20):
        g, _ = random_circle_graph(7, seed)
        comps = connected_components(g)
        assert sum(len(c) for c in comps) == len(g)
        assert frozenset().union(*comps) == set(g.vertices)


def test_shapes(gstar):
    assert classify_shape(complete_graph("abcde")).kind == "complete"
    s = classify_shape(star_graph("c", ["p", "q", "r", "z"]))
    assert s.kind == "star" and s.center == "c"
    assert classify_shape(gstar).kind == "other"
    assert classify_shape(build_graph(["a"], [])).kind == "complete"
    assert classify_shape(complete_graph("ab")).kind == "complete"
    with pytest.raises(Disconnected):
        classify_shape(build_graph(["a", "b"], []))


@pytest.mark.parametrize("n", range(3, 11))
def test_shape_families(n):
    labels = [f"v{i}" for i in range(n)]
    assert classify_shape(complete_graph(labels)).kind == "complete"
    assert classify_shape(star_graph("c", labels)).kind == "star"
    if n >= 4:
        assert classify_shape(cycle_graph(labels)).kind == "other"
