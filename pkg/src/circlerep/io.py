"""Text formats for graphs, words and instances.

Graph files hold one declaration per line: `n <label>` for a vertex and
`e <u> <v>` for an edge (endpoints are declared on first use); `#` starts a
comment. Word files hold whitespace-separated labels read circularly.
Instances are JSON objects.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import CircleRepError, ParseError, ValidationError
from .graph import Graph, build_graph
from .simrep import SimInstance, TotalOrderingInstance
from .words import CircularWord, parse_word


def parse_graph(text: str) -> Graph:
    verts: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []

    def declare(v: str) -> None:
        if v not in seen:
            seen.add(v)
            verts.append(v)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind, args = parts[0], parts[1:]
        if kind == "n" and len(args) == 1:
            declare(args[0])
        elif kind == "e" and len(args) == 2:
            declare(args[0])
            declare(args[1])
            edges.append((args[0], args[1]))
        else:
            raise ParseError(f"expected 'n <label>' or 'e <u> <v>', got {line!r}", lineno)
    try:
        return build_graph(verts, edges)
    except CircleRepError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    lines = [f"n {v}" for v in g.vertices]
    lines += [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_word_text(text: str) -> CircularWord:
    tokens = []
    for raw in text.splitlines():
        tokens += raw.split("#", 1)[0].split()
    try:
        return parse_word(tokens)
    except CircleRepError as exc:
        raise ParseError(str(exc)) from exc


def format_word(w: CircularWord) -> str:
    return " ".join(w.tokens) + "\n"


def _graph_json(name: str, g: Graph) -> dict[str, Any]:
    return {"name": name, "vertices": list(g.vertices), "edges": [list(e) for e in g.edges()]}


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from exc


def _field(obj: Any, key: str, kind: type) -> Any:
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing key {key!r}")
    val = obj[key]
    if not isinstance(val, kind):
        raise ParseError(f"key {key!r} should be a {kind.__name__}")
    return val


def sim_to_json(inst: SimInstance) -> str:
    doc = {
        "shared": list(inst.shared),
        "graphs": [_graph_json(n, g) for n, g in zip(inst.names, inst.graphs)],
    }
    if inst.anchor is not None:
        doc["anchor"] = inst.anchor
    return json.dumps(doc, indent=2) + "\n"


def sim_from_obj(obj: Any) -> SimInstance:
    shared = [str(x) for x in _field(obj, "shared", list)]
    names, graphs = [], []
    for i, gd in enumerate(_field(obj, "graphs", list)):
        verts = [str(v) for v in _field(gd, "vertices", list)]
        edges = [tuple(str(x) for x in e) for e in _field(gd, "edges", list)]
        if any(len(e) != 2 for e in edges):
            raise ParseError(f"graph {i}: edges need two endpoints")
        try:
            graphs.append(build_graph(verts, edges))
        except CircleRepError as exc:
            raise ParseError(f"graph {i}: {exc}") from exc
        names.append(str(gd.get("name", f"G{i}")))
    anchor = obj.get("anchor")
    return SimInstance(tuple(shared), tuple(graphs), tuple(names), None if anchor is None else str(anchor))


def ordering_to_json(inst: TotalOrderingInstance) -> str:
    doc = {"elements": list(inst.elements), "triples": [list(t) for t in inst.triples]}
    return json.dumps(doc, indent=2) + "\n"


def ordering_from_obj(obj: Any) -> TotalOrderingInstance:
    els = [str(x) for x in _field(obj, "elements", list)]
    triples = []
    for t in _field(obj, "triples", list):
        if not isinstance(t, list) or len(t) != 3:
            raise ParseError(f"triple {t!r} should list three elements")
        triples.append(tuple(str(x) for x in t))
    return TotalOrderingInstance(tuple(els), tuple(triples))


def parse_instance(text: str) -> SimInstance | TotalOrderingInstance:
    """Either instance kind, told apart by its keys."""
    obj = _load_json(text)
    if isinstance(obj, dict) and "shared" in obj:
        return sim_from_obj(obj)
    if isinstance(obj, dict) and "elements" in obj:
        return ordering_from_obj(obj)
    raise ParseError("expected an object with 'shared' or 'elements'")


def parse_sim(text: str) -> SimInstance:
    inst = parse_instance(text)
    if not isinstance(inst, SimInstance):
        raise ValidationError("expected a simultaneous representation instance")
    return inst


def parse_ordering(text: str) -> TotalOrderingInstance:
    inst = parse_instance(text)
    if not isinstance(inst, TotalOrderingInstance):
        raise ValidationError("expected a total ordering instance")
    return inst
