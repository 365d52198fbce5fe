"""Simultaneous representations of graphs sharing a vertex set, and the
betweenness (total ordering) reduction into them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .base_cases import DEFAULT_PRIME_BOUND
from .errors import BoundExceeded, MalformedAnchor, TooLarge, ValidationError
from .extend import extend
from .graph import Graph, build_graph, induced_subgraph
from .rng import XorShift64Star
from .words import CircularWord, induced_subword

DEFAULT_FPT_BOUND = 6
BRUTEFORCE_LIMIT = 8


@dataclass(frozen=True)
class SimInstance:
    """Graphs that pairwise meet exactly in `shared` and agree on it.

    `anchor` is set on instances built from a total ordering: the shared
    label whose doubled block marks where the element order starts.
    """

    shared: tuple[str, ...]
    graphs: tuple[Graph, ...]
    names: tuple[str, ...] = ()
    anchor: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "shared", tuple(self.shared))
        object.__setattr__(self, "graphs", tuple(self.graphs))
        names = tuple(self.names) or tuple(f"G{i}" for i in range(len(self.graphs)))
        object.__setattr__(self, "names", names)
        validate_sim(self)


def validate_sim(inst: SimInstance) -> None:
    I = set(inst.shared)
    if len(I) != len(inst.shared):
        raise ValidationError("shared labels repeat")
    if inst.anchor is not None and inst.anchor not in I:
        raise ValidationError(f"anchor {inst.anchor!r} is not shared")
    if len(inst.names) != len(inst.graphs):
        raise ValidationError("one name per graph expected")
    if not inst.graphs:
        raise ValidationError("need at least one graph")
    for name, g in zip(inst.names, inst.graphs):
        missing = I - set(g.vertices)
        if missing:
            raise ValidationError(f"{name} lacks shared vertices {sorted(missing)}")
    ref = induced_subgraph(inst.graphs[0], inst.shared).edge_set()
    for i, g in enumerate(inst.graphs):
        if induced_subgraph(g, inst.shared).edge_set() != ref:
            raise ValidationError(f"{inst.names[i]} disagrees with {inst.names[0]} on the shared edges")
        for j in range(i):
            common = set(g.vertices) & set(inst.graphs[j].vertices)
            if common != I:
                extra = sorted(common - I)
                raise ValidationError(f"{inst.names[j]} and {inst.names[i]} also share {extra}")


@dataclass(frozen=True)
class TotalOrderingInstance:
    """Order `elements` so that each (x, y, z) has y strictly between x and z."""

    elements: tuple[str, ...]
    triples: tuple[tuple[str, str, str], ...]

    def __post_init__(self):
        els = tuple(str(e) for e in self.elements)
        tri = tuple(tuple(str(x) for x in t) for t in self.triples)
        object.__setattr__(self, "elements", els)
        object.__setattr__(self, "triples", tri)
        if len(set(els)) != len(els):
            raise ValidationError("elements repeat")
        known = set(els)
        for t in tri:
            if len(t) != 3 or len(set(t)) != 3:
                raise ValidationError(f"triple {t} needs three distinct entries")
            if not set(t) <= known:
                raise ValidationError(f"triple {t} mentions unknown elements")


def satisfies(order: Sequence[str], triples: Iterable[tuple[str, str, str]]) -> bool:
    pos = {e: i for i, e in enumerate(order)}
    return all(pos[x] < pos[y] < pos[z] or pos[z] < pos[y] < pos[x] for x, y, z in triples)


# -- shared words ----------------------------------------------------------


def enumerate_shared_words(
    shared: Sequence[str],
    bound: int = DEFAULT_FPT_BOUND,
    realizing: Graph | None = None,
) -> Iterator[CircularWord]:
    """Every double-occurrence word on `shared`, once per rotation class.

    Mirror images count as different words. Each word is written from the
    occurrence of shared[0] that gives the smaller token sequence. With
    `realizing`, only words whose crossings are exactly the edges of that
    graph restricted to `shared` are produced; a chord is checked as soon as
    it closes.
    """
    labels = list(shared)
    if len(labels) > bound:
        raise BoundExceeded(len(labels), bound, "shared set")
    if not labels:
        yield CircularWord(())
        return
    rank = {v: i for i, v in enumerate(labels)}
    nbrs = None
    if realizing is not None:
        sub = induced_subgraph(realizing, labels)
        nbrs = {v: sub.neighbors(v) for v in labels}
    total = 2 * len(labels)
    first = labels[0]
    word = [first]
    count = {v: 0 for v in labels}
    count[first] = 1
    opened = {first: 0}

    def closes_ok(v: str) -> bool:
        if nbrs is None:
            return True
        inside = word[opened[v] + 1:]
        nb = nbrs[v]
        for u in labels:
            if u != v and (inside.count(u) == 1) != (u in nb):
                return False
        return True

    def keep(tokens: list[str]) -> bool:
        j = tokens.index(first, 1)
        other = tokens[j:] + tokens[:j]
        return [rank[t] for t in tokens] <= [rank[t] for t in other]

    def rec() -> Iterator[CircularWord]:
        if len(word) == total:
            if keep(word):
                yield CircularWord(tuple(word))
            return
        for v in labels:
            c = count[v]
            if c == 2:
                continue
            if c == 1 and not closes_ok(v):
                continue
            count[v] += 1
            if c == 0:
                opened[v] = len(word)
            word.append(v)
            yield from rec()
            word.pop()
            count[v] -= 1
            if c == 0:
                del opened[v]

    yield from rec()


@dataclass(frozen=True)
class SimSolution:
    shared: CircularWord
    reps: tuple[CircularWord, ...]


def solve_sim(
    inst: SimInstance,
    *,
    fpt_bound: int = DEFAULT_FPT_BOUND,
    max_prime_size: int = DEFAULT_PRIME_BOUND,
    on_reject: Callable[[CircularWord, int], None] | None = None,
) -> SimSolution | None:
    """First shared word, in enumeration order, that every graph extends.

    Words not realizing the common induced subgraph are skipped outright.
    `on_reject(word, i)` is called for each tried word with the index of the
    first graph that could not extend it.
    """
    sub = induced_subgraph(inst.graphs[0], inst.shared)
    for word in enumerate_shared_words(inst.shared, fpt_bound, realizing=sub):
        reps = []
        for i, g in enumerate(inst.graphs):
            w = extend(g, word, max_prime_size=max_prime_size)
            if w is None:
                if on_reject is not None:
                    on_reject(word, i)
                break
            reps.append(w)
        else:
            return SimSolution(word, tuple(reps))
    return None


# -- total ordering ----------------------------------------------------------


def anchor_label(elements: Iterable[str]) -> str:
    """A label for the extra shared vertex that no element uses."""
    taken = set(elements)
    w = "w"
    while w in taken:
        w += "'"
    return w


def reduce_total_ordering(inst: TotalOrderingInstance) -> SimInstance:
    """Simultaneous instance that is solvable iff `inst` is.

    The shared set is the elements plus an anchor w, pairwise non-adjacent.
    G0 is a clique with one shared vertex hung on each clique vertex, which
    forces the shared chords into consecutive doubled blocks. Each triple
    (x, y, z) gets a graph with two fresh vertices u, v and edges uv, ux,
    uz, vy, vw, which forces y between x and z.
    """
    w = anchor_label(inst.elements)
    shared = tuple(inst.elements) + (w,)
    clique = [f"k{j}@0" for j in range(len(shared))]
    edges = [(a, b) for a, b in itertools.combinations(clique, 2)]
    edges += [(k, s) for k, s in zip(clique, shared)]
    graphs = [build_graph(list(clique) + list(shared), edges)]
    for i, (x, y, z) in enumerate(inst.triples, start=1):
        u, v = f"u@{i}", f"v@{i}"
        graphs.append(
            build_graph(list(shared) + [u, v], [(u, v), (u, x), (u, z), (v, y), (v, w)])
        )
    names = tuple(f"G{i}" for i in range(len(graphs)))
    return SimInstance(shared, tuple(graphs), names, anchor=w)


def solve_total_ordering_bruteforce(inst: TotalOrderingInstance) -> tuple[str, ...] | None:
    """First permutation of the elements, in itertools order, that satisfies
    every triple."""
    if len(inst.elements) > BRUTEFORCE_LIMIT:
        raise TooLarge(f"brute force limited to {BRUTEFORCE_LIMIT} elements")
    for order in itertools.permutations(inst.elements):
        if satisfies(order, inst.triples):
            return order
    return None


def extract_ordering(g0_word: CircularWord, elements: Sequence[str], anchor: str) -> tuple[str, ...]:
    """Read the element order off the shared chords, clockwise from the
    anchor's block. The shared part must be doubled blocks `ww s1s1 s2s2 ...`."""
    keep = set(elements) | {anchor}
    sub = induced_subword(g0_word, keep).tokens
    if set(sub) != keep:
        raise MalformedAnchor("the word does not contain every shared label")
    starts = [i for i, t in enumerate(sub) if t == anchor]
    for s in starts:
        rot = sub[s:] + sub[:s]
        if rot[1] == anchor:
            break
    else:
        raise MalformedAnchor(f"{anchor} does not form a doubled block")
    order = []
    for i in range(2, len(rot), 2):
        if rot[i] != rot[i + 1]:
            raise MalformedAnchor(f"{rot[i]} does not form a doubled block")
        order.append(rot[i])
    return tuple(order)


def solve_total_ordering_via_sim(inst: TotalOrderingInstance, **kw) -> tuple[str, ...] | None:
    """Reduce, solve the simultaneous instance, and read the order back."""
    sim = reduce_total_ordering(inst)
    sol = solve_sim(sim, **kw)
    if sol is None:
        return None
    return extract_ordering(sol.shared, inst.elements, sim.anchor)


def random_total_ordering(seed: int, max_elements: int = 4, max_triples: int = 4) -> TotalOrderingInstance:
    """Small random instance: 3..max_elements elements named 1, 2, ... and
    0..max_triples triples of distinct elements."""
    rng = XorShift64Star(seed)
    s = rng.between(3, max(3, max_elements))
    els = [str(i) for i in range(1, s + 1)]
    t = rng.between(0, max_triples)
    triples = [tuple(rng.sample(els, 3)) for _ in range(t)]
    return TotalOrderingInstance(tuple(els), tuple(triples))
