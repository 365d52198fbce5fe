"""Brute-force ground truth and random instance generators.

Nothing here uses splits or the extension engine, so it can be used to check
them.
"""

from __future__ import annotations

from collections import Counter

from .errors import TooLarge
from .graph import Graph, build_graph, is_connected
from .rng import XorShift64Star
from .words import EMPTY, CircularWord, canonical_form, crossing_pairs, rotate

DEFAULT_ORACLE_BOUND = 7
_LETTERS = "abcdefghijklmnopqrstuvwxyz"


def label_name(i: int) -> str:
    """a, b, ..., z, a1, b1, ..."""
    return _LETTERS[i % 26] + (str(i // 26) if i >= 26 else "")


def enumerate_representations(g: Graph, bound: int = DEFAULT_ORACLE_BOUND) -> list[CircularWord]:
    """All representations of g up to rotation, sorted by canonical form.

    Words are written left to right starting at the first vertex; a chord is
    checked against every other label the moment it is closed, since the
    number of endpoints it encloses is final by then.
    """
    n = len(g)
    if n > bound:
        raise TooLarge(f"representation enumeration limited to {bound} vertices")
    if n == 0:
        return [EMPTY]
    verts = g.vertices
    word: list[str] = []
    opened: dict[str, int] = {}
    closed: set[str] = set()
    found: dict[tuple[str, ...], CircularWord] = {}

    def closes_ok(u: str, p: int) -> bool:
        o = opened[u]
        inside = Counter(word[o + 1:p])
        nb = g.neighbors(u)
        for x in verts:
            if x != u and (inside[x] == 1) != (x in nb):
                return False
        return True

    def rec() -> None:
        p = len(word)
        if p == 2 * n:
            w = CircularWord(tuple(word))
            found.setdefault(canonical_form(w), w)
            return
        open_now = [u for u in opened if u not in closed]
        for u in open_now:
            if closes_ok(u, p):
                word.append(u)
                closed.add(u)
                rec()
                closed.discard(u)
                word.pop()
        if 2 * n - p > len(open_now):
            for v in verts:
                if v not in opened:
                    opened[v] = p
                    word.append(v)
                    rec()
                    word.pop()
                    del opened[v]

    opened[verts[0]] = 0
    word.append(verts[0])
    rec()
    return [found[k] for k in sorted(found)]


def _drawn_ok(g: Graph, partial: CircularWord) -> bool:
    if not partial.symbols <= set(g.vertices):
        return False
    pos = partial.positions()
    syms = list(pos)
    for i, u in enumerate(syms):
        a, b = pos[u]
        for v in syms[i + 1:]:
            c, d = pos[v]
            if ((a < c < b) != (a < d < b)) != g.has_edge(u, v):
                return False
    return True


def oracle_extend(g: Graph, partial: CircularWord = EMPTY, bound: int = DEFAULT_ORACLE_BOUND) -> CircularWord | None:
    """Exhaustive extension search.

    The pre-drawn word is kept fixed and the remaining chords are inserted one
    at a time into every pair of gaps, rejecting any insertion whose crossings
    disagree with the graph. Returns the first complete word found.
    """
    n = len(g)
    if n > bound:
        raise TooLarge(f"oracle extension limited to {bound} vertices")
    if not _drawn_ok(g, partial):
        return None
    placed = list(partial.symbols)
    remaining = [v for v in g.vertices if v not in partial.symbols]
    order: list[str] = []
    have = set(placed)
    while remaining:
        v = max(remaining, key=lambda x: (len(g.neighbors(x) & have), g.degree(x), -g.index(x)))
        order.append(v)
        have.add(v)
        remaining.remove(v)

    def rec(word: list[str], k: int) -> list[str] | None:
        if k == len(order):
            return word
        v = order[k]
        nb = g.neighbors(v)
        before = placed + order[:k]
        L = len(word)
        for i in range(max(L, 1)):
            inside: Counter = Counter()
            for j in range(i, max(L, 1)):
                if j > i:
                    inside[word[j - 1]] += 1
                if all((inside[u] == 1) == (u in nb) for u in before):
                    got = rec(word[:i] + [v] + word[i:j] + [v] + word[j:], k + 1)
                    if got is not None:
                        return got
        return None

    got = rec(list(partial.tokens), 0)
    return None if got is None else CircularWord(tuple(got))


def oracle_extend_by_filter(g: Graph, partial: CircularWord = EMPTY, bound: int = DEFAULT_ORACLE_BOUND) -> CircularWord | None:
    """First enumerated representation whose pre-drawn part matches."""
    from .words import circular_equal, induced_subword

    for w in enumerate_representations(g, bound):
        if partial.symbols <= w.symbols and circular_equal(induced_subword(w, partial.symbols), partial):
            return w
    return None


def graph_of_word(w: CircularWord, order: list[str] | None = None) -> Graph:
    """The circle graph a word represents."""
    verts = order if order is not None else w.ordered_symbols()
    idx = {v: i for i, v in enumerate(verts)}
    edges = sorted((tuple(sorted(p, key=idx.__getitem__)) for p in crossing_pairs(w)), key=lambda e: (idx[e[0]], idx[e[1]]))
    return build_graph(verts, edges)


def _random_word(labels: list[str], rng: XorShift64Star) -> CircularWord:
    tokens = [x for v in labels for x in (v, v)]
    rng.shuffle(tokens)
    return CircularWord(tuple(tokens))


def random_circle_graph(n: int, seed: int) -> tuple[Graph, CircularWord]:
    """Shuffle 2n endpoints uniformly and read off the crossing graph."""
    if n < 1:
        raise ValueError("n must be at least 1")
    labels = [label_name(i) for i in range(n)]
    w = _random_word(labels, XorShift64Star(seed))
    return graph_of_word(w, labels), w


def random_split_composed_graph(pieces: int, max_prime: int, seed: int) -> tuple[Graph, CircularWord]:
    """Glue random connected circle graphs along markers.

    Each new piece picks a vertex x of the current graph and a vertex y of
    the piece; with x tau x hat_tau and y sigma y hat_sigma the result is
    tau sigma hat_tau hat_sigma, i.e. x and y are replaced by the complete
    bipartite join of their neighbourhoods.
    """
    if pieces < 1:
        raise ValueError("need at least one piece")
    if max_prime < 2:
        raise ValueError("pieces need at least two vertices")
    rng = XorShift64Star(seed)
    counter = 0

    def piece() -> CircularWord:
        nonlocal counter
        size = rng.between(min(3, max_prime), max_prime)
        labels = [label_name(counter + i) for i in range(size)]
        counter += size
        while True:
            w = _random_word(labels, rng)
            if is_connected(graph_of_word(w, labels)):
                return w

    word = piece()
    order = word.ordered_symbols()
    for _ in range(pieces - 1):
        nxt = piece()
        x = rng.choice(order)
        y = rng.choice(nxt.ordered_symbols())
        a = rotate(word, word.tokens.index(x)).tokens
        b = rotate(nxt, nxt.tokens.index(y)).tokens
        ja = a.index(x, 1)
        jb = b.index(y, 1)
        word = CircularWord(a[1:ja] + b[1:jb] + a[ja + 1:] + b[jb + 1:])
        order = [v for v in order if v != x] + [v for v in nxt.ordered_symbols() if v != y]
    return graph_of_word(word, order), word
