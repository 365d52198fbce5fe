"""Partial representation extension for circle graphs.

The engine recurses over splits. For a split it computes the ~ classes, reads
the pre-drawn word as a circular sequence of maximal single-class blocks and
fixes a circular order of the classes from it. Each class is then solved on
its quotient graph with a partial word that pins where the marker chord may
go, and the class words are glued back in the order
tau_1 ... tau_l hat_tau_1 ... hat_tau_l.
"""

from __future__ import annotations

import heapq
import itertools
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .base_cases import (
    DEFAULT_PRIME_BOUND,
    assert_extension,
    extend_complete,
    extend_prime,
    extend_star,
)
from .errors import (
    CyclicPrecedence,
    InvalidLabel,
    InvalidPartial,
    LayoutError,
    NonAlternatingBlocks,
    TooManyBlocks,
)
from .graph import Graph, add_vertex, classify_shape, connected_components, induced_subgraph
from .splits import (
    QuotientGraph,
    SimClassPartition,
    Split,
    find_safe_split,
    quotient,
    sim_partition,
)
from .words import EMPTY, CircularWord, align, induced_subword, rotate

Tokens = tuple[str, ...]


@dataclass(frozen=True)
class SubwordLayout:
    """The pre-drawn word cut into maximal blocks of one extended class each."""

    blocks: tuple[tuple[Tokens, int], ...]

    @property
    def k(self) -> int:
        return len(self.blocks)

    def positions(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for pos, (_, cls) in enumerate(self.blocks):
            out.setdefault(cls, []).append(pos)
        return out

    def block_counts(self) -> dict[int, int]:
        return {c: len(p) for c, p in self.positions().items()}

    def classes(self) -> list[int]:
        """Constrained classes in order of first appearance."""
        return list(self.positions())


@dataclass(frozen=True)
class ClassOrdering:
    """A circular order of the constrained classes for Case 1.

    `front[c]` and `back[c]` are the blocks of class c that fall in the first
    and second half of the circle (either may be empty).
    """

    order: tuple[int, ...]
    front: dict[int, Tokens] = field(default_factory=dict)
    back: dict[int, Tokens] = field(default_factory=dict)


def maximal_subwords(partial: CircularWord, part: SimClassPartition) -> SubwordLayout:
    class_of = part.class_of()
    runs: list[tuple[list[str], int]] = []
    for t in partial.tokens:
        c = class_of[t]
        if runs and runs[-1][1] == c:
            runs[-1][0].append(t)
        else:
            runs.append(([t], c))
    if len(runs) > 1 and runs[0][1] == runs[-1][1]:
        tail, c = runs.pop()
        runs[0] = (tail + runs[0][0], c)
    layout = SubwordLayout(tuple((tuple(toks), c) for toks, c in runs))
    pos = layout.positions()
    for c, p in pos.items():
        if len(p) > 2:
            raise TooManyBlocks(c)
    doubles = sorted(c for c, p in pos.items() if len(p) == 2)
    for x, y in itertools.combinations(doubles, 2):
        p1, p2 = pos[x]
        q1, q2 = pos[y]
        if (p1 < q1 < p2) == (p1 < q2 < p2):
            raise NonAlternatingBlocks(x, y)
    return layout


def order_classes_case1(layout: SubwordLayout) -> ClassOrdering:
    """Order the classes when some class owns two blocks.

    The lowest-indexed two-block class goes first and its blocks define the
    two halves of the circle; inside each half, block order induces class
    precedence. Ties in the topological sort go to the earlier block.
    """
    pos = layout.positions()
    pivot = min(c for c, p in pos.items() if len(p) == 2)
    start = pos[pivot][0]
    k = layout.k
    blocks = [layout.blocks[(start + i) % k] for i in range(k)]
    t = (pos[pivot][1] - start) % k
    front: dict[int, Tokens] = {}
    back: dict[int, Tokens] = {}
    first_pos: dict[int, int] = {}
    for i, (toks, c) in enumerate(blocks):
        (front if i < t else back)[c] = toks
        first_pos.setdefault(c, i)
    others = [c for c in first_pos if c != pivot]
    succ: dict[int, set[int]] = {c: set() for c in others}
    indeg = {c: 0 for c in others}
    for half in (range(1, t), range(t + 1, k)):
        seq = [blocks[i][1] for i in half]
        for a, b in itertools.combinations(range(len(seq)), 2):
            ca, cb = seq[a], seq[b]
            if ca != cb and cb not in succ[ca]:
                succ[ca].add(cb)
                indeg[cb] += 1
    heap = [(first_pos[c], c) for c in others if indeg[c] == 0]
    heapq.heapify(heap)
    order = [pivot]
    while heap:
        _, c = heapq.heappop(heap)
        order.append(c)
        for d in succ[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                heapq.heappush(heap, (first_pos[d], d))
    if len(order) != len(others) + 1:
        raise CyclicPrecedence("block precedence among classes is cyclic")
    return ClassOrdering(tuple(order), front, back)


def augment(q: QuotientGraph, block: Sequence[str], leaf: str | None = None) -> tuple[QuotientGraph, CircularWord]:
    """Hang a fresh leaf on the marker and pin it right after `block`.

    The returned partial only fixes one endpoint of the marker, so it is
    never harder to extend than block + marker marker.
    """
    if leaf is None:
        k = 1
        while f"@w{k}" in q.graph:
            k += 1
        leaf = f"@w{k}"
    g = add_vertex(q.graph, leaf, [q.marker])
    return QuotientGraph(g, q.marker), CircularWord(tuple(block) + (leaf, leaf))


def join(parts: Sequence[tuple[Sequence[str], Sequence[str]]]) -> CircularWord:
    """Glue class words v tau v hat_tau (with v deleted) in the given order."""
    firsts = [t for first, _ in parts for t in first]
    seconds = [t for _, second in parts for t in second]
    return CircularWord(tuple(firsts + seconds))


def _split_at_marker(w: CircularWord, marker: str) -> tuple[Tokens, Tokens]:
    toks = w.tokens
    assert toks[0] == marker
    j = toks.index(marker, 1)
    return toks[1:j], toks[j + 1:]


def partial_violation(g: Graph, partial: CircularWord) -> tuple[str, str] | str | None:
    """First reason `partial` is not a representation of the graph it covers."""
    for s in partial.ordered_symbols():
        if s not in g:
            return s
    pos = partial.positions()
    syms = sorted(pos, key=g.index)
    for i, u in enumerate(syms):
        a, b = pos[u]
        nb = g.neighbors(u)
        for v in syms[i + 1:]:
            c, d = pos[v]
            if ((a < c < b) != (a < d < b)) != (v in nb):
                return (u, v)
    return None


class Engine:
    """One extension run: holds the prime bound and the fresh-label counter."""

    def __init__(self, max_prime_size: int = DEFAULT_PRIME_BOUND):
        self.bound = max_prime_size
        self._counter = itertools.count(1)

    def _fresh(self, prefix: str = "") -> str:
        return f"@{prefix}{next(self._counter)}"

    def extend(self, g: Graph, partial: CircularWord) -> CircularWord | None:
        for v in g.vertices:
            if v.startswith("@"):
                raise InvalidLabel(f"labels starting with '@' are reserved: {v}")
        bad = partial_violation(g, partial)
        if isinstance(bad, str):
            raise InvalidPartial(f"pre-drawn symbol {bad!r} is not a vertex", None)
        if bad is not None:
            u, v = bad
            rel = "adjacent" if g.has_edge(u, v) else "non-adjacent"
            raise InvalidPartial(f"{u} and {v} are {rel} but their chords disagree", bad)
        limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(limit, 20000))
        try:
            return self._extend(g, partial)
        finally:
            sys.setrecursionlimit(limit)

    def _extend(self, g: Graph, partial: CircularWord) -> CircularWord | None:
        if partial_violation(g, partial) is not None:
            return None
        if len(g) == 0:
            return EMPTY
        comps = connected_components(g)
        if len(comps) > 1:
            w = self._extend_disconnected(g, partial, comps)
        else:
            w = self._extend_connected(g, partial)
        return assert_extension(g, partial, w)

    def _extend_connected(self, g: Graph, partial: CircularWord) -> CircularWord | None:
        shape = classify_shape(g)
        if shape.kind == "complete":
            return extend_complete(g, partial)
        if shape.kind == "star":
            return extend_star(g, partial)
        sp = find_safe_split(g)
        if sp is not None:
            return self.extend_with_split(g, partial, sp)
        return extend_prime(g, partial, self.bound)

    def extend_trivial(self, g: Graph, partial: CircularWord) -> CircularWord | None:
        """Graphs whose splits are all trivial go through the same recursion;
        a trivial split peels one leaf off its support."""
        return self._extend(g, partial)

    # -- disconnected graphs ------------------------------------------------

    def _extend_disconnected(self, g: Graph, partial: CircularWord, comps: list[frozenset[str]]) -> CircularWord | None:
        comp_of = {v: i for i, c in enumerate(comps) for v in c}
        ids = [comp_of[t] for t in partial.tokens]
        drawn = list(dict.fromkeys(ids))
        for x, y in itertools.combinations(drawn, 2):
            seq = [c for c in ids if c == x or c == y]
            changes = sum(seq[i] != seq[i - 1] for i in range(len(seq)))
            if changes > 2:
                return None
        words: dict[int, CircularWord] = {}
        for ci, comp in enumerate(comps):
            sub = induced_subgraph(g, comp)
            sub_partial = induced_subword(partial, comp & partial.symbols)
            w = self._extend(sub, sub_partial)
            if w is None:
                return None
            words[ci] = w
        fillers: dict[int, list[Tokens]] = {}
        for ci in drawn:
            pattern = tuple(t for t in partial.tokens if comp_of[t] == ci)
            w = align(words[ci], pattern)
            assert w is not None
            drawn_set = set(pattern)
            gaps: list[list[str]] = []
            for t in w.tokens:
                if t in drawn_set:
                    gaps.append([])
                else:
                    gaps[-1].append(t)
            fillers[ci] = [tuple(x) for x in gaps]
        out: list[str] = []
        seen = {ci: 0 for ci in drawn}
        for t, ci in zip(partial.tokens, ids):
            out.append(t)
            out.extend(fillers[ci][seen[ci]])
            seen[ci] += 1
        for ci in range(len(comps)):
            if ci not in seen:
                out.extend(words[ci].tokens)
        return CircularWord(tuple(out))

    # -- split recursion ----------------------------------------------------

    def _class_graph(self, g: Graph, part: SimClassPartition, i: int) -> QuotientGraph:
        return quotient(g, part, i, marker=self._fresh())

    def _solve_pinned(self, q: QuotientGraph, pattern: Tokens) -> tuple[Tokens, Tokens] | None:
        """Solve q with partial `pattern` (which starts with the marker)."""
        w = self._extend(q.graph, CircularWord(pattern))
        if w is None:
            return None
        rot = align(w, pattern)
        assert rot is not None
        return _split_at_marker(rot, q.marker)

    def _solve_free(self, q: QuotientGraph, partial: Tokens = ()) -> tuple[Tokens, Tokens] | None:
        w = self._extend(q.graph, CircularWord(partial))
        if w is None:
            return None
        return _split_at_marker(rotate(w, w.tokens.index(q.marker)), q.marker)

    def _solve_relaxed(self, q: QuotientGraph, block: Tokens, size: int) -> tuple[Tokens, Tokens] | None:
        """One marker endpoint in the gap after `block`, the other anywhere.

        Normally a leaf hung on the marker pins the first endpoint. When the
        augmented graph would be as large as the graph being split, the
        second endpoint is instead tried inside the block position by
        position, so that every sub-instance is strictly smaller.
        """
        if len(q.graph) + 1 >= size:
            for j in range(len(block) + 1):
                res = self._solve_pinned(q, (q.marker, *block[:j], q.marker, *block[j:]))
                if res is not None:
                    return res
            return None
        leaf = self._fresh("w")
        aug, pw = augment(q, block, leaf)
        w = self._extend(aug.graph, pw)
        if w is None:
            return None
        toks = w.tokens
        drawn = set(block)
        p1 = toks.index(leaf)
        p2 = toks.index(leaf, p1 + 1)
        inner = toks[p1 + 1:p2]
        if any(t in drawn for t in inner):
            # the marker endpoint we want sits in the outer arc
            start = next(i for i in itertools.chain(range(p2 + 1, len(toks)), range(p1)) if toks[i] == q.marker)
        else:
            start = p1 + 1 + inner.index(q.marker)
        rot = rotate(w, start)
        return _split_at_marker(CircularWord(tuple(t for t in rot.tokens if t != leaf)), q.marker)

    def extend_with_split(self, g: Graph, partial: CircularWord, sp: Split) -> CircularWord | None:
        part = sim_partition(g, sp)
        try:
            layout = maximal_subwords(partial, part)
        except LayoutError:
            return None
        counts = layout.block_counts()
        constrained = layout.classes()
        free = [i for i in range(len(part)) if i not in counts]
        graphs = {i: self._class_graph(g, part, i) for i in range(len(part))}

        parts: list[tuple[Tokens, Tokens]] = []
        if any(c == 2 for c in counts.values()):
            try:
                ordering = order_classes_case1(layout)
            except CyclicPrecedence:
                return None
            for c in ordering.order:
                q = graphs[c]
                pattern = (q.marker, *ordering.front.get(c, ()), q.marker, *ordering.back.get(c, ()))
                res = self._solve_pinned(q, pattern)
                if res is None:
                    return None
                parts.append(res)
        elif len(constrained) == 1:
            # the one class owns the whole circle: any marker position works
            c = constrained[0]
            res = self._solve_free(graphs[c], partial.tokens)
            if res is None:
                return None
            parts.append(res)
        elif constrained:
            res_parts = self._case2(part, layout, graphs, len(g))
            if res_parts is None:
                return None
            parts.extend(res_parts)
        for c in free:
            res = self._solve_free(graphs[c])
            if res is None:
                return None
            parts.append(res)
        return join(parts)

    def _case2(self, part: SimClassPartition, layout: SubwordLayout, graphs: dict[int, QuotientGraph], size: int) -> list[tuple[Tokens, Tokens]] | None:
        block_of = {c: toks for toks, c in layout.blocks}
        order = [c for _, c in layout.blocks]
        pivot = max(order, key=lambda c: (len(part.psi(c)), -c))

        def strict(c: int) -> tuple[Tokens, Tokens] | None:
            q = graphs[c]
            return self._solve_pinned(q, (q.marker, q.marker, *block_of[c]))

        solved: dict[int, tuple[Tokens, Tokens]] = {}
        failed: list[int] = []
        for c in order:
            if c == pivot:
                continue
            res = strict(c)
            if res is None:
                failed.append(c)
                if len(failed) > 1:
                    return None
            else:
                solved[c] = res
        if not failed:
            relaxed = pivot
        else:
            relaxed = failed[0]
            res = strict(pivot)
            if res is None:
                return None
            solved[pivot] = res
        res = self._solve_relaxed(graphs[relaxed], block_of[relaxed], size)
        if res is None:
            return None
        solved[relaxed] = res
        r = order.index(relaxed)
        return [solved[c] for c in order[r:] + order[:r]]


def extend(g: Graph, partial: CircularWord = EMPTY, *, max_prime_size: int = DEFAULT_PRIME_BOUND) -> CircularWord | None:
    """A representation of g whose restriction to the pre-drawn labels is
    `partial` up to rotation, or None when no such representation exists.

    Raises InvalidPartial when `partial` does not represent the subgraph it
    covers, and BoundExceeded when a prime piece is larger than the bound.
    """
    return Engine(max_prime_size).extend(g, partial)


def recognize(g: Graph, *, max_prime_size: int = DEFAULT_PRIME_BOUND) -> CircularWord | None:
    return extend(g, EMPTY, max_prime_size=max_prime_size)


def run_case2(g: Graph, part: SimClassPartition, layout: SubwordLayout, bound: int = DEFAULT_PRIME_BOUND) -> CircularWord | None:
    """Case 2 on its own: every constrained class owns exactly one block.

    A lone constrained class owns the whole circle, so its block has no
    fixed cut and it is solved with the marker left free.
    """
    eng = Engine(bound)
    counts = layout.block_counts()
    if any(c != 1 for c in counts.values()):
        raise ValueError("Case 2 needs every constrained class to own one block")
    graphs = {i: eng._class_graph(g, part, i) for i in range(len(part))}
    if len(counts) == 1:
        (toks, c), = layout.blocks
        res = eng._solve_free(graphs[c], toks)
        parts = None if res is None else [res]
    else:
        parts = eng._case2(part, layout, graphs, len(g))
    if parts is None:
        return None
    for i in range(len(part)):
        if i not in counts:
            res = eng._solve_free(graphs[i])
            if res is None:
                return None
            parts.append(res)
    return join(parts)
