"""Checks of the block structure that a split imposes on every representation.

Each check takes a representation and returns a list of human-readable
violations, empty when the property holds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .extend import join
from .graph import Graph, connected_components, induced_subgraph
from .oracle import DEFAULT_ORACLE_BOUND, enumerate_representations
from .splits import (
    SimClassPartition,
    Split,
    all_splits_bruteforce,
    is_safe_split,
    quotient,
    sim_partition,
)
from .words import CircularWord, circular_equal, induced_subword, realizes


def _runs(tokens: tuple[str, ...], tag: dict[str, object]) -> list[tuple[object, tuple[str, ...]]]:
    """Maximal circular runs of equal tag, starting at a run boundary."""
    n = len(tokens)
    if n == 0:
        return []
    start = next((i for i in range(n) if tag[tokens[i]] != tag[tokens[i - 1]]), None)
    if start is None:
        return [(tag[tokens[0]], tokens)]
    rot = tokens[start:] + tokens[:start]
    runs: list[tuple[object, list[str]]] = []
    for t in rot:
        if runs and runs[-1][0] == tag[t]:
            runs[-1][1].append(t)
        else:
            runs.append((tag[t], [t]))
    return [(k, tuple(v)) for k, v in runs]


def side_blocks(w: CircularWord, sp: Split) -> list[tuple[str, ...]]:
    """The long part of w cut into maximal one-side blocks, A-block first."""
    gamma = induced_subword(w, sp.long).tokens
    tag = {v: "A" for v in sp.A} | {v: "B" for v in sp.B}
    runs = _runs(gamma, tag)
    if runs and runs[0][0] != "A":
        runs = runs[1:] + runs[:1]
    return [r for _, r in runs]


def check_blocks(g: Graph, w: CircularWord, sp: Split) -> list[str]:
    """Block structure of the long vertices: no block repeats a symbol,
    opposite blocks carry the same symbols, and long vertices never sharing
    a block are adjacent."""
    blocks = side_blocks(w, sp)
    out = []
    if len(blocks) % 2:
        return [f"odd number of side blocks in {w}"]
    k = len(blocks) // 2
    for i, b in enumerate(blocks):
        if len(set(b)) != len(b):
            out.append(f"block {i} repeats a symbol: {' '.join(b)}")
        if i < k and set(b) != set(blocks[i + k]):
            out.append(f"blocks {i} and {i + k} differ")
    home: dict[str, set[int]] = {}
    for i, b in enumerate(blocks):
        for v in b:
            home.setdefault(v, set()).add(i)
    longs = sorted(sp.long, key=g.index)
    for i, x in enumerate(longs):
        for y in longs[i + 1:]:
            if not (home[x] & home[y]) and not g.has_edge(x, y):
                out.append(f"{x} and {y} sit in different blocks but are not adjacent")
    return out


def check_short_paths(g: Graph, w: CircularWord, sp: Split) -> list[str]:
    """Long vertices linked through a short component share a block pair."""
    blocks = side_blocks(w, sp)
    k = max(len(blocks) // 2, 1)
    pair = {}
    for i, b in enumerate(blocks):
        for v in b:
            pair[v] = i % k
    out = []
    for comp in connected_components(induced_subgraph(g, sp.short)):
        touching = sorted({y for c in comp for y in g.neighbors(c) & sp.long}, key=g.index)
        for y in touching[1:]:
            if pair[y] != pair[touching[0]]:
                out.append(f"{touching[0]} and {y} are linked through {sorted(comp)} but lie in different block pairs")
    return out


def class_runs(w: CircularWord, part: SimClassPartition) -> list[tuple[int, tuple[str, ...]]]:
    return _runs(w.tokens, part.class_of())  # type: ignore[return-value]


def check_two_subwords(w: CircularWord, part: SimClassPartition) -> list[str]:
    """Every extended class occupies exactly two maximal subwords."""
    counts: dict[object, int] = {}
    for c, _ in class_runs(w, part):
        counts[c] = counts.get(c, 0) + 1
    return [f"class {i} forms {counts.get(i, 0)} subwords" for i in range(len(part)) if counts.get(i, 0) != 2]


def decompose(w: CircularWord, part: SimClassPartition) -> tuple[list[int], list[tuple[tuple[str, ...], tuple[str, ...]]]] | None:
    """Class order and (tau_i, hat_tau_i) pairs, or None when the runs are
    not of the form c1..cl c1..cl."""
    runs = class_runs(w, part)
    l = len(part)
    if len(runs) != 2 * l:
        return None
    order = [c for c, _ in runs[:l]]
    if order != [c for c, _ in runs[l:]] or len(set(order)) != l:
        return None
    return order, [(runs[i][1], runs[i + l][1]) for i in range(l)]


def check_round_trip(g: Graph, w: CircularWord, part: SimClassPartition) -> list[str]:
    """w splits into class words that represent the class graphs and join
    back to w."""
    got = decompose(w, part)
    if got is None:
        return [f"{w} does not decompose over the classes"]
    order, pairs = got
    out = []
    for c, (tau, hat) in zip(order, pairs):
        q = quotient(g, part, c)
        cw = CircularWord((q.marker, *tau, q.marker, *hat))
        if not realizes(cw, q.graph):
            out.append(f"class word {cw} does not represent class graph {c}")
    if not circular_equal(join(pairs), w):
        out.append(f"joining the class words does not give back {w}")
    return out


@dataclass
class AuditReport:
    graphs: int = 0
    representations: int = 0
    splits: int = 0
    safe_splits: int = 0
    checks: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_graph(g: Graph, report: AuditReport | None = None, bound: int = DEFAULT_ORACLE_BOUND) -> AuditReport:
    """Run every check over all representations of g and all its splits.

    Block checks apply to every split. The two-subword and round-trip checks
    apply to the safe splits, the ones the extension recursion relies on.
    """
    rep = report if report is not None else AuditReport()
    rep.graphs += 1
    words = enumerate_representations(g, bound)
    rep.representations += len(words)
    for sp in all_splits_bruteforce(g):
        rep.splits += 1
        safe = is_safe_split(g, sp)
        part = sim_partition(g, sp) if safe else None
        rep.safe_splits += safe
        for w in words:
            found = check_blocks(g, w, sp) + check_short_paths(g, w, sp)
            rep.checks += 2
            if part is not None:
                found += check_two_subwords(w, part) + check_round_trip(g, w, part)
                rep.checks += 2
            rep.violations.extend(f"{g.edges()}: {v}" for v in found)
    return rep
