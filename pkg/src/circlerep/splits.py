"""Splits, the ~ relation on long vertices, and quotient graphs.

A split of a connected graph partitions V into long sides A, B and short
sides s(A), s(B): A x B is complete bipartite, no other edges cross, and each
side has at least two vertices. Equivalently X = A | s(A) is a vertex set
whose vertices either see nothing outside X or see exactly the same set B.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import TooLarge
from .graph import Graph, add_vertex, connected_components, induced_subgraph, is_connected


@dataclass(frozen=True)
class Split:
    A: frozenset[str]
    B: frozenset[str]
    short_a: frozenset[str]
    short_b: frozenset[str]

    @property
    def long(self) -> frozenset[str]:
        return self.A | self.B

    @property
    def short(self) -> frozenset[str]:
        return self.short_a | self.short_b

    def swapped(self) -> "Split":
        return Split(self.B, self.A, self.short_b, self.short_a)

    def is_trivial(self) -> bool:
        """One side is a single long vertex with a single leaf."""
        return (len(self.A) == 1 and len(self.short_a) == 1) or (
            len(self.B) == 1 and len(self.short_b) == 1
        )

    def key(self) -> tuple[frozenset[str], frozenset[str]]:
        """Side-order independent identity."""
        x = self.A | self.short_a
        y = self.B | self.short_b
        return (x, y) if min(x) < min(y) else (y, x)


def make_split(g: Graph, A: Iterable[str], B: Iterable[str]) -> Split:
    """Complete (A, B) to a split by attaching the components of G - (A|B)."""
    A, B = frozenset(A), frozenset(B)
    rest = induced_subgraph(g, set(g.vertices) - A - B)
    sa, sb = set(), set()
    for comp in connected_components(rest):
        touches_a = any(g.neighbors(x) & A for x in comp)
        (sa if touches_a else sb).update(comp)
    return Split(A, B, frozenset(sa), frozenset(sb))


def verify_split(g: Graph, sp: Split) -> bool:
    A, B, sa, sb = sp.A, sp.B, sp.short_a, sp.short_b
    parts = [A, B, sa, sb]
    if sum(len(p) for p in parts) != len(g) or frozenset().union(*parts) != set(g.vertices):
        return False
    if not A or not B:
        return False
    if len(A | sa) < 2 or len(B | sb) < 2:
        return False
    for a in A:
        if not B <= g.neighbors(a):
            return False
    for x in sa:
        if g.neighbors(x) & (B | sb):
            return False
    for y in sb:
        if g.neighbors(y) & (A | sa):
            return False
    # short sides must be exactly the components of G - (A|B) hanging on each side
    return make_split(g, A, B) == sp


def _closure(masks: tuple[int, ...], n: int, a: int, b: int, x: int, limit: int | None = None) -> int:
    """Smallest side X with a, x in X and b outside, or 0 if none exists or
    it has more than `limit` vertices (default n - 2)."""
    na = masks[a]
    nb = masks[b]
    bbit = 1 << b
    X = (1 << a) | (1 << x)
    todo = [x]
    if limit is None:
        limit = n - 2
    size = 2
    while todo:
        v = todo.pop()
        # v seeing b makes it long: its outside neighbourhood must equal a's;
        # otherwise v is short and sees nothing outside X
        force = ((masks[v] ^ na) if (nb >> v) & 1 else masks[v]) & ~X
        if not force:
            continue
        if force & bbit:
            return 0
        X |= force
        while force:
            low = force & -force
            todo.append(low.bit_length() - 1)
            force ^= low
            size += 1
        if size > limit:
            return 0
    return X


def _labels(g: Graph, m: int) -> frozenset[str]:
    verts = g.vertices
    return frozenset(verts[i] for i in _bits(m))


def _split_of_side(g: Graph, X: int) -> Split:
    masks = g.masks()
    Y = ((1 << len(g)) - 1) & ~X
    amask = 0
    bmask = 0
    for i in _bits(X):
        out = masks[i] & Y
        if out:
            amask |= 1 << i
            bmask |= out
    return Split(_labels(g, amask), _labels(g, bmask), _labels(g, X & ~amask), _labels(g, Y & ~bmask))


def _mask_components(masks: tuple[int, ...], S: int) -> list[int]:
    comps = []
    rest = S
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for i in _bits(frontier):
                grow |= masks[i]
            frontier = grow & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def _bits(m: int) -> list[int]:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return out


def _seeds(masks: tuple[int, ...], n: int):
    for a in range(n):
        for b in _bits(masks[a]):
            for x in _bits((masks[a] | masks[b]) & ~((1 << a) | (1 << b))):
                yield a, b, x


def _is_connected_mask(masks: tuple[int, ...], S: int) -> bool:
    return len(_mask_components(masks, S)) <= 1


def _long_sets(masks: tuple[int, ...], X: int, Y: int) -> tuple[int, int]:
    amask = bmask = 0
    for i in _bits(X):
        out = masks[i] & Y
        if out:
            amask |= 1 << i
            bmask |= out
    return amask, bmask


def _side_is_safe(masks: tuple[int, ...], n: int, X: int) -> bool:
    Y = ((1 << n) - 1) & ~X
    amask, bmask = _long_sets(masks, X, Y)
    for other, long, short in ((X, bmask, Y & ~bmask), (Y, amask, X & ~amask)):
        if _is_connected_mask(masks, other):
            continue
        for comp in _mask_components(masks, short):
            if all((masks[v] & long) in (0, long) for v in _bits(comp)):
                return False
    return True


def _side_is_trivial(masks: tuple[int, ...], n: int, X: int) -> bool:
    Y = ((1 << n) - 1) & ~X
    amask, bmask = _long_sets(masks, X, Y)
    return (amask.bit_count() == 1 and X.bit_count() == 2) or (
        bmask.bit_count() == 1 and Y.bit_count() == 2
    )


def _candidate_sides(g: Graph) -> list[int]:
    """Split sides as bitmasks, each split once, in discovery order.

    Seeded refinement: for each ordered edge (a, b) and each x in
    N(a) | N(b), grow the smallest side containing a and x but not b. Every
    graph with a non-trivial split yields a non-trivial side here. When a
    side induces a disconnected subgraph, each of its components with at
    least two vertices is a side as well, and those are added too.
    """
    n = len(g)
    if n < 4 or not is_connected(g):
        return []
    masks = g.masks()
    full = (1 << n) - 1
    seen: set[int] = set()
    out: list[int] = []

    def add(X: int) -> None:
        key = X if X & 1 else full & ~X
        if key not in seen:
            seen.add(key)
            out.append(key)

    for a, b, x in _seeds(masks, n):
        X = _closure(masks, n, a, b, x)
        if X:
            add(X)
    for X in list(out):
        for side in (X, full & ~X):
            for c in _refinements(masks, n, side):
                add(c)
    return out


def _refinements(masks: tuple[int, ...], n: int, side: int) -> list[int]:
    comps = _mask_components(masks, side)
    if len(comps) < 2:
        return []
    return [c for c in comps if 2 <= c.bit_count() <= n - 2]


def candidate_splits(g: Graph) -> list[Split]:
    """Splits found by seeded refinement, in discovery order."""
    return [_split_of_side(g, X) for X in _candidate_sides(g)]


def is_safe_split(g: Graph, sp: Split) -> bool:
    """True when every representation of g is a join along sp.

    A short component can otherwise sit between two nested chords of the
    opposite long set, crossing all of its own long set like a member of the
    other side. That needs the opposite side to induce a disconnected graph
    and every vertex of the component to see all or none of its long set.
    """
    idx = g.index
    X = 0
    for v in sp.A | sp.short_a:
        X |= 1 << idx(v)
    return _side_is_safe(g.masks(), len(g), X)


def _search(g: Graph, safe_only: bool) -> Split | None:
    """Most balanced non-trivial split, preferring safe ones.

    With safe_only, unsafe splits are never returned and a safe trivial
    split is the fallback. Unsafe sides are replaced by their connected
    pieces, which are always sides and often safe. Once a safe non-trivial
    split with smaller side k is known, closures are cut off as soon as
    they exceed n - k - 1 vertices since they can no longer beat it.
    """
    n = len(g)
    if n < 4 or not is_connected(g):
        return None
    masks = g.masks()
    full = (1 << n) - 1
    seen: set[int] = set()
    best = 0
    best_score = 0
    unsafe_best = 0
    unsafe_score = 0
    trivial = 0
    half = n // 2

    def consider(X: int) -> bool:
        nonlocal best, best_score, unsafe_best, unsafe_score, trivial
        key = X if X & 1 else full & ~X
        if key in seen:
            return False
        seen.add(key)
        size = X.bit_count()
        score = min(size, n - size)
        if score <= best_score and (trivial or best):
            return False
        safe = _side_is_safe(masks, n, X)
        if not safe:
            for side in (X, full & ~X):
                for c in _refinements(masks, n, side):
                    if consider(c):
                        return True
            if not safe_only and score > unsafe_score and not _side_is_trivial(masks, n, X):
                unsafe_best, unsafe_score = X, score
            return False
        if _side_is_trivial(masks, n, X):
            if not trivial:
                trivial = X
            return False
        if score > best_score:
            best, best_score = X, score
        return best_score >= half

    for a, b, x in _seeds(masks, n):
        limit = n - best_score - 1 if best else n - 2
        X = _closure(masks, n, a, b, x, limit)
        if X and consider(X):
            break
    if best:
        return _split_of_side(g, best)
    if not safe_only:
        return _split_of_side(g, unsafe_best) if unsafe_best else None
    return _split_of_side(g, trivial) if trivial else None


def find_nontrivial_split(g: Graph) -> Split | None:
    """A non-trivial split, or None.

    Safe splits are preferred; among those the one with the largest smaller
    side wins, ties going to the earliest found.
    """
    return _search(g, safe_only=False)


def find_safe_split(g: Graph) -> Split | None:
    """The split the extension recursion uses: safe, non-trivial if possible,
    then as balanced as possible."""
    return _search(g, safe_only=True)


def find_leaf_split(g: Graph) -> Split | None:
    """The trivial split cutting off the first leaf, for graphs on >= 4 vertices."""
    if len(g) < 4:
        return None
    for v in g.vertices:
        if g.degree(v) == 1:
            (a,) = g.neighbors(v)
            return make_split(g, {a}, g.neighbors(a) - {v})
    return None


def all_splits_bruteforce(g: Graph, max_size: int = 12) -> list[Split]:
    """Every split of g, by checking all vertex bipartitions."""
    n = len(g)
    if n > max_size:
        raise TooLarge(f"brute-force split enumeration limited to {max_size} vertices")
    if n < 4 or not is_connected(g):
        return []
    verts = g.vertices
    first, rest = verts[0], verts[1:]
    out = []
    for r in range(1, n - 2):
        for combo in combinations(rest, r):
            X = {first, *combo}
            Y = set(verts) - X
            A = {x for x in X if g.neighbors(x) & Y}
            B = {y for y in Y if g.neighbors(y) & X}
            if all(g.neighbors(x) & Y == B for x in A):
                out.append(Split(frozenset(A), frozenset(B), frozenset(X - A), frozenset(Y - B)))
    return out


class UnionFind:
    def __init__(self, items: Iterable[str]):
        self.parent = {x: x for x in items}

    def find(self, x: str) -> str:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: str, y: str) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


@dataclass(frozen=True)
class SimClassPartition:
    """Classes Phi_i of ~ with their short attachments s(Phi_i)."""

    classes: tuple[tuple[frozenset[str], frozenset[str]], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def phi(self, i: int) -> frozenset[str]:
        return self.classes[i][0]

    def short(self, i: int) -> frozenset[str]:
        return self.classes[i][1]

    def psi(self, i: int) -> frozenset[str]:
        phi, short = self.classes[i]
        return phi | short

    def class_of(self) -> dict[str, int]:
        out = {}
        for i, (phi, short) in enumerate(self.classes):
            for v in phi:
                out[v] = i
            for v in short:
                out[v] = i
        return out


def sim_partition(g: Graph, sp: Split) -> SimClassPartition:
    """Transitive closure of (C1) non-adjacency within a side and (C2) paths
    through short vertices."""
    long = sp.A | sp.B
    uf = UnionFind(long)
    for side in (sp.A, sp.B):
        members = sorted(side, key=g.index)
        for i, x in enumerate(members):
            nb = g.neighbors(x)
            for y in members[i + 1:]:
                if y not in nb:
                    uf.union(x, y)
    short_graph = induced_subgraph(g, sp.short)
    comps = connected_components(short_graph)
    attach = []
    for comp in comps:
        touching = sorted({y for c in comp for y in g.neighbors(c) & long}, key=g.index)
        for y in touching[1:]:
            uf.union(touching[0], y)
        attach.append((comp, touching))
    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        if v in long:
            groups.setdefault(uf.find(v), []).append(v)
    roots = list(groups)
    shorts: dict[str, set[str]] = {r: set() for r in roots}
    for comp, touching in attach:
        shorts[uf.find(touching[0])].update(comp)
    return SimClassPartition(
        tuple((frozenset(groups[r]), frozenset(shorts[r])) for r in roots)
    )


@dataclass(frozen=True)
class QuotientGraph:
    graph: Graph
    marker: str


def fresh_label(g: Graph, prefix: str = "@") -> str:
    k = 1
    while f"{prefix}{k}" in g:
        k += 1
    return f"{prefix}{k}"


def quotient(g: Graph, part: SimClassPartition, i: int, marker: str | None = None) -> QuotientGraph:
    """Contract everything outside Psi_i into a marker adjacent to Phi_i."""
    if not 0 <= i < len(part):
        raise IndexError(i)
    sub = induced_subgraph(g, part.psi(i))
    marker = marker if marker is not None else fresh_label(g)
    return QuotientGraph(add_vertex(sub, marker, part.phi(i)), marker)
