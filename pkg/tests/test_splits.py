import itertools

import pytest

from circlerep.errors import TooLarge
from circlerep.graph import build_graph, classify_shape, complete_graph, cycle_graph, is_connected, path_graph
from circlerep.oracle import enumerate_representations, random_circle_graph, random_split_composed_graph
from circlerep.splits import (
    Split,
    all_splits_bruteforce,
    candidate_splits,
    find_nontrivial_split,
    find_safe_split,
    is_safe_split,
    make_split,
    quotient,
    sim_partition,
    verify_split,
)

F = frozenset


def S(A, B, sa, sb):
    return Split(F(A), F(B), F(sa), F(sb))


def test_verify_examples(gstar):
    assert verify_split(gstar, S("u", "v", "st", "xw"))
    assert not verify_split(gstar, S("u", "v", "stx", "w"))
    assert verify_split(path_graph("abcd"), S("b", "c", "a", "d"))


def test_bruteforce_examples(gstar):
    k4 = complete_graph("1234")
    splits = all_splits_bruteforce(k4)
    assert {sp.key() for sp in splits} == {
        (F(x), F(set("1234") - set(x))) for x in ["12", "13", "14"]
    }
    assert all(not sp.short for sp in splits)
    assert all_splits_bruteforce(cycle_graph("abcde")) == []
    assert S("u", "v", "st", "xw").key() in {sp.key() for sp in all_splits_bruteforce(gstar)}
    with pytest.raises(TooLarge):
        all_splits_bruteforce(complete_graph([str(i) for i in range(13)]))


def test_bruteforce_splits_verify():
    for seed in range(30):
        g, _ = random_circle_graph(7, seed)
        for sp in all_splits_bruteforce(g):
            assert verify_split(g, sp)


def test_find_nontrivial_examples(gstar):
    sp = find_nontrivial_split(gstar)
    assert {sp.A, sp.B} == {F("u"), F("v")}
    assert verify_split(gstar, sp)
    assert find_nontrivial_split(cycle_graph("abcde")) is None
    assert find_nontrivial_split(path_graph("abcd")) is None


def _small_connected_graphs():
    for n in range(4, 7):
        for seed in range(60):
            g, _ = random_circle_graph(n, 1000 * n + seed)
            if is_connected(g):
                yield g
    # a few non-circle graphs too
    for n in (6, 7):
        hub = f"h{n}"
        rim = [f"r{i}" for i in range(n - 1)]
        edges = [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))] + [(hub, r) for r in rim]
        yield build_graph(rim + [hub], edges)


@pytest.mark.parametrize("g", list(_small_connected_graphs()), ids=lambda g: f"n{len(g)}m{g.edge_count}")
def test_find_matches_bruteforce(g):
    brute = [sp for sp in all_splits_bruteforce(g) if not sp.is_trivial()]
    found = find_nontrivial_split(g)
    assert (found is None) == (not brute)
    if found is not None:
        assert verify_split(g, found) and not found.is_trivial()
        assert found.key() in {sp.key() for sp in brute}


def test_find_matches_bruteforce_composed():
    for seed in range(40):
        g, _ = random_split_composed_graph(3, 4, seed)
        if len(g) > 10:
            continue
        brute = [sp for sp in all_splits_bruteforce(g) if not sp.is_trivial()]
        assert (find_nontrivial_split(g) is None) == (not brute)


def test_candidates_are_splits():
    for seed in range(30):
        g, _ = random_split_composed_graph(4, 5, seed)
        for sp in candidate_splits(g):
            assert verify_split(g, sp)


def test_safe_split_predicate_gstar(gstar):
    # {s,t} | {u,v,w,x}: a representation may put s and t in four runs
    assert not is_safe_split(gstar, make_split(gstar, {"s", "t"}, {"u"}))
    assert is_safe_split(gstar, make_split(gstar, {"u"}, {"v"}))


def _runs(w, members):
    toks = w.tokens
    return sum(1 for i in range(len(toks)) if toks[i] in members and toks[i - 1] not in members)


def test_safe_splits_keep_sides_contiguous():
    # every class of a safe split occupies exactly two runs in every representation
    for seed in range(80):
        g, _ = random_split_composed_graph(2, 4, seed)
        words = enumerate_representations(g)
        for sp in all_splits_bruteforce(g):
            if not is_safe_split(g, sp):
                continue
            part = sim_partition(g, sp)
            for i in range(len(part)):
                for w in words:
                    assert _runs(w, part.psi(i)) == 2


def test_safe_split_found_unless_degenerate():
    # stars never have a safe split; the engine treats them as a base case
    for seed in range(60):
        g, _ = random_split_composed_graph(3, 5, seed)
        if classify_shape(g).kind != "other" or not all_splits_bruteforce(g):
            continue
        sp = find_safe_split(g)
        assert sp is not None and is_safe_split(g, sp)


def test_balanced_choice():
    for seed in range(20):
        g, _ = random_split_composed_graph(4, 4, seed)
        if len(g) > 11:
            continue
        sp = find_nontrivial_split(g)
        if sp is None:
            continue
        safe = [s for s in all_splits_bruteforce(g) if not s.is_trivial() and is_safe_split(g, s)]
        if safe and is_safe_split(g, sp):
            best = max(min(len(s.A | s.short_a), len(s.B | s.short_b)) for s in safe)
            assert min(len(sp.A | sp.short_a), len(sp.B | sp.short_b)) == best


def test_sim_partition_examples(gstar):
    part = sim_partition(gstar, S("u", "v", "st", "xw"))
    assert set(part.classes) == {(F("u"), F("st")), (F("v"), F("xw"))}
    c4 = build_graph(["a1", "a2", "b1", "b2"], [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")])
    part = sim_partition(c4, S({"a1", "a2"}, {"b1", "b2"}, (), ()))
    assert set(part.classes) == {(F({"a1", "a2"}), F()), (F({"b1", "b2"}), F())}
    k4 = complete_graph("1234")
    part = sim_partition(k4, S("12", "34", (), ()))
    assert set(part.classes) == {(F(x), F()) for x in "1234"}


def test_sim_partition_properties():
    for seed in range(40):
        g, _ = random_split_composed_graph(3, 5, seed)
        sp = find_nontrivial_split(g)
        if sp is None:
            continue
        part = sim_partition(g, sp)
        phis = [part.phi(i) for i in range(len(part))]
        shorts = [part.short(i) for i in range(len(part))]
        assert sorted(v for p in phis for v in p) == sorted(sp.A | sp.B)
        assert sorted(v for s in shorts for v in s) == sorted(sp.short)
        for p in phis:
            assert p <= sp.A or p <= sp.B


def test_quotient_examples(gstar):
    sp = S("u", "v", "st", "xw")
    part = sim_partition(gstar, sp)
    i = next(i for i in range(len(part)) if part.phi(i) == F("u"))
    q = quotient(gstar, part, i)
    assert set(q.graph.vertices) == {"u", "s", "t", q.marker}
    assert q.graph.edge_set() == {F(("u", "s")), F(("u", "t")), F(("u", q.marker))}
    assert q.marker not in gstar

    k4 = complete_graph("1234")
    kp = sim_partition(k4, S("12", "34", (), ()))
    q = quotient(k4, kp, 0)
    assert len(q.graph) == 2 and q.graph.edge_count == 1

    c4 = build_graph(["a1", "a2", "b1", "b2"], [("a1", "b1"), ("a1", "b2"), ("a2", "b1"), ("a2", "b2")])
    cp = sim_partition(c4, S({"a1", "a2"}, {"b1", "b2"}, (), ()))
    j = next(i for i in range(len(cp)) if "a1" in cp.phi(i))
    q = quotient(c4, cp, j)
    assert q.graph.edge_set() == {F(("a1", q.marker)), F(("a2", q.marker))}
