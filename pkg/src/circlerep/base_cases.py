"""Leaves of the extension recursion: prime, complete, star and trivial graphs."""

from __future__ import annotations

from collections import Counter

from .errors import BoundExceeded
from .graph import Graph, classify_shape
from .words import (
    EMPTY,
    CircularWord,
    canonical_form,
    circular_equal,
    induced_subword,
    realizes,
    rotate,
)

DEFAULT_PRIME_BOUND = 12


def _placement_order(g: Graph) -> list[str]:
    # grow a connected prefix, most constrained vertex first
    order: list[str] = []
    placed: set[str] = set()
    remaining = list(g.vertices)
    while remaining:
        best = max(
            remaining,
            key=lambda v: (len(g.neighbors(v) & placed), g.degree(v), -g.index(v)),
        )
        order.append(best)
        placed.add(best)
        remaining.remove(best)
    return order


def prime_representations(g: Graph, bound: int = DEFAULT_PRIME_BOUND) -> list[CircularWord]:
    """All representations of g up to rotation, by backtracking chord insertion.

    Meant for prime graphs, which have at most two (mutually reversed) words;
    on other graphs it simply enumerates, so the bound is enforced strictly.
    """
    n = len(g)
    if n > bound:
        raise BoundExceeded(n, bound)
    if n == 0:
        return [EMPTY]
    order = _placement_order(g)
    found: dict[tuple[str, ...], CircularWord] = {}

    def place(word: list[str], k: int) -> None:
        if k == n:
            w = CircularWord(tuple(word))
            found.setdefault(canonical_form(w), w)
            return
        v = order[k]
        nb = g.neighbors(v)
        placed = order[:k]
        L = len(word)
        for i in range(L):
            inside = Counter()
            for j in range(i, L):
                if j > i:
                    inside[word[j - 1]] += 1
                if all((inside[u] == 1) == (u in nb) for u in placed):
                    place(word[:i] + [v] + word[i:j] + [v] + word[j:], k + 1)

    place([order[0], order[0]], 1)
    return [found[key] for key in sorted(found)]


def extend_prime(g: Graph, partial: CircularWord, bound: int = DEFAULT_PRIME_BOUND) -> CircularWord | None:
    """Pick the (at most two) representations of g that extend `partial`."""
    for w in prime_representations(g, bound):
        if circular_equal(induced_subword(w, partial.symbols), partial):
            return w
    return None


def _doubled_root(tokens: tuple[str, ...]) -> tuple[str, ...] | None:
    k = len(tokens) // 2
    if tokens[:k] == tokens[k:]:
        return tokens[:k]
    return None


def extend_complete(g: Graph, partial: CircularWord) -> CircularWord | None:
    """K_n words are exactly sigma sigma for a linear order sigma."""
    root = _doubled_root(partial.tokens)
    if root is None:
        return None
    drawn = set(root)
    sigma = list(root) + [v for v in g.vertices if v not in drawn]
    return CircularWord(tuple(sigma + sigma))


def extend_star(g: Graph, partial: CircularWord) -> CircularWord | None:
    """Star words are c pi c reverse(pi) over the leaves pi."""
    shape = classify_shape(g)
    c = shape.center
    toks = partial.tokens
    drawn = set(toks)
    missing = [v for v in g.vertices if v not in drawn and v != c]
    if c in drawn:
        r = toks.index(c)
        rot = toks[r:] + toks[:r]
        j = rot.index(c, 1)
        front, back = list(rot[1:j]), list(rot[j + 1:])
        if back != front[::-1]:
            return None
        pi = front + missing
        return CircularWord(tuple([c] + pi + [c] + pi[::-1]))
    m = len(toks)
    k = m // 2
    for r in range(max(m, 1)):
        rot = toks[r:] + toks[:r]
        front, back = list(rot[:k]), list(rot[k:])
        if back == front[::-1] and len(set(front)) == k:
            pi = front + missing
            return CircularWord(tuple([c] + pi + [c] + pi[::-1]))
    return None


def extend_trivial(g: Graph, partial: CircularWord, bound: int = DEFAULT_PRIME_BOUND) -> CircularWord | None:
    """Extension for graphs whose only splits cut off single leaves.

    Leaves are peeled one at a time through the trivial split they define, so
    each leaf ends up straddling one endpoint of its support exactly where
    the pre-drawn chords allow; once no leaf is left the remaining core is
    prime or degenerate and is handled directly.
    """
    from .extend import Engine

    return Engine(max_prime_size=bound).extend_trivial(g, partial)


def assert_extension(g: Graph, partial: CircularWord, w: CircularWord | None) -> CircularWord | None:
    if w is not None:
        assert realizes(w, g), f"not a representation: {w}"
        assert circular_equal(induced_subword(w, partial.symbols), partial), (
            f"{w} does not extend {partial}"
        )
    return w
