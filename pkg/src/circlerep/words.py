"""Circular double-occurrence words.

A chord representation is stored as the circular sequence of chord endpoints,
each vertex label appearing exactly twice. Two chords cross iff their labels
alternate. The stored tuple has an arbitrary cut point; every operation here is
invariant under rotation unless its name says otherwise.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import OddOccurrence, UnknownSymbol
from .graph import Graph


@dataclass(frozen=True)
class CircularWord:
    tokens: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "tokens", tuple(self.tokens))
        counts = Counter(self.tokens)
        for label, c in counts.items():
            if c != 2:
                raise OddOccurrence(label, c)

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)

    def __str__(self) -> str:
        return " ".join(self.tokens)

    @property
    def symbols(self) -> frozenset[str]:
        return frozenset(self.tokens)

    def ordered_symbols(self) -> list[str]:
        """Labels in order of first occurrence."""
        return list(dict.fromkeys(self.tokens))

    def positions(self) -> dict[str, tuple[int, int]]:
        first: dict[str, int] = {}
        out = {}
        for i, t in enumerate(self.tokens):
            if t in first:
                out[t] = (first[t], i)
            else:
                first[t] = i
        return out


EMPTY = CircularWord(())


def parse_word(tokens: str | Iterable[str]) -> CircularWord:
    """Build a word from whitespace-separated text or a token sequence."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    return CircularWord(tuple(tokens))


def alternates(w: CircularWord, u: str, v: str) -> bool:
    pos = w.positions()
    for x in (u, v):
        if x not in pos:
            raise UnknownSymbol(x)
    if u == v:
        raise ValueError("alternates needs two distinct labels")
    i, j = pos[u]
    a, b = pos[v]
    return (i < a < j) != (i < b < j)


def crossing_pairs(w: CircularWord) -> set[frozenset[str]]:
    """All alternating label pairs, by a single sweep."""
    open_order: list[str] = []
    out = set()
    for t in w.tokens:
        if t in open_order:
            k = open_order.index(t)
            for s in open_order[k + 1:]:
                out.add(frozenset((t, s)))
            del open_order[k]
        else:
            open_order.append(t)
    return out


def realizes(w: CircularWord, g: Graph) -> bool:
    """True iff w is a chord representation of g."""
    if len(w.tokens) != 2 * len(g) or w.symbols != set(g.vertices):
        return False
    open_order: list[str] = []
    crossings = 0
    for t in w.tokens:
        if t in open_order:
            k = open_order.index(t)
            later = open_order[k + 1:]
            nb = g.neighbors(t)
            for s in later:
                if s not in nb:
                    return False
            crossings += len(later)
            del open_order[k]
        else:
            open_order.append(t)
    return crossings == g.edge_count


def induced_subword(w: CircularWord, keep: Iterable[str]) -> CircularWord:
    keep = set(keep)
    missing = keep - w.symbols
    if missing:
        raise UnknownSymbol(sorted(missing)[0])
    return CircularWord(tuple(t for t in w.tokens if t in keep))


def rotate(w: CircularWord, k: int) -> CircularWord:
    n = len(w.tokens)
    if n == 0:
        return w
    k %= n
    return CircularWord(w.tokens[k:] + w.tokens[:k])


def reverse(w: CircularWord) -> CircularWord:
    return CircularWord(w.tokens[::-1])


def _encode(tokens: Sequence[str]) -> str:
    return "".join("\x00" + t for t in tokens)


def circular_equal(w1: CircularWord, w2: CircularWord) -> bool:
    """True iff w2 is a rotation of w1 (reflections are not equal)."""
    if len(w1.tokens) != len(w2.tokens):
        return False
    if not w1.tokens:
        return True
    s1 = _encode(w1.tokens)
    return _encode(w2.tokens) + "\x00" in s1 + s1 + "\x00"


def _pattern(tokens: Sequence[str]) -> tuple[int, ...]:
    first: dict[str, int] = {}
    return tuple(first.setdefault(t, len(first)) for t in tokens)


def canonical_form(w: CircularWord) -> tuple[str, ...]:
    """Representative rotation of w.

    Rotations are compared first by their first-occurrence relabelling (the
    chord-diagram shape), then by the labels themselves.
    """
    toks = w.tokens
    n = len(toks)
    if n == 0:
        return ()
    best = None
    for k in range(n):
        r = toks[k:] + toks[:k]
        key = (_pattern(r), r)
        if best is None or key < best:
            best = key
    return best[1]


def canonical_word(w: CircularWord) -> CircularWord:
    return CircularWord(canonical_form(w))


def align(w: CircularWord, pattern: Sequence[str]) -> CircularWord | None:
    """Rotate w so that it starts at an occurrence of pattern[0] and its
    restriction to the symbols of `pattern` equals `pattern` read linearly.

    Returns None when no rotation does this.
    """
    if not pattern:
        return w
    keep = set(pattern)
    hits = [(i, t) for i, t in enumerate(w.tokens) if t in keep]
    seq = [t for _, t in hits]
    if len(seq) != len(pattern):
        return None
    pat = list(pattern)
    m = len(seq)
    doubled = seq + seq
    for s in range(m):
        if doubled[s] == pat[0] and doubled[s:s + m] == pat:
            return rotate(w, hits[s][0])
    return None
