import itertools

import pytest

from circlerep.audit import check_two_subwords
from circlerep.errors import CyclicPrecedence, InvalidPartial, NonAlternatingBlocks, TooManyBlocks
from circlerep.extend import (
    SubwordLayout,
    augment,
    extend,
    join,
    maximal_subwords,
    order_classes_case1,
    run_case2,
)
from circlerep.graph import build_graph, complete_graph, is_connected, star_graph
from circlerep.oracle import enumerate_representations, oracle_extend, random_circle_graph, random_split_composed_graph
from circlerep.splits import find_safe_split, make_split, quotient, sim_partition
from circlerep.words import EMPTY, CircularWord, circular_equal, induced_subword, parse_word, realizes


def assert_extends(g, p, w):
    assert w is not None
    assert realizes(w, g)
    assert circular_equal(induced_subword(w, p.symbols), p)


@pytest.fixture
def gstar_part(gstar):
    part = sim_partition(gstar, make_split(gstar, {"u"}, {"v"}))
    cu = next(i for i in range(len(part)) if "u" in part.phi(i))
    return part, cu, 1 - cu


def test_gstar_examples(gstar):
    p = parse_word("s s x x t t w w")
    assert_extends(gstar, p, extend(gstar, p))
    assert extend(gstar, parse_word("s s t t x x w w")) is None


def test_invalid_partial():
    g = build_graph(list("abpq"), [("a", "b"), ("p", "q")])
    with pytest.raises(InvalidPartial) as exc:
        extend(g, parse_word("a p a p"))
    assert set(exc.value.pair) == {"a", "p"}
    with pytest.raises(InvalidPartial):
        extend(g, parse_word("z z"))


def test_disconnected():
    g = build_graph(list("abpq"), [("a", "b"), ("p", "q")])
    p = parse_word("a a p p")
    assert_extends(g, p, extend(g, p))
    # a and b share a component, x and y share another; a x b y interleaves them
    h = build_graph(list("acbxzy"), [("a", "c"), ("c", "b"), ("x", "z"), ("z", "y")])
    bad = parse_word("a a x x b b y y")
    assert extend(h, bad) is None
    assert oracle_extend(h, bad) is None
    ok = parse_word("a a b b x x y y")
    assert_extends(h, ok, extend(h, ok))


def test_maximal_subwords_examples(gstar_part):
    part, cu, cv = gstar_part
    lay = maximal_subwords(parse_word("s s x x t t w w"), part)
    assert lay.blocks == ((("s", "s"), cu), (("x", "x"), cv), (("t", "t"), cu), (("w", "w"), cv))
    assert lay.block_counts() == {cu: 2, cv: 2}
    # consecutive blocks of one class merge, so each class owns one block here
    lay = maximal_subwords(parse_word("s s t t x x w w"), part)
    assert lay.blocks == ((("s", "s", "t", "t"), cu), (("x", "x", "w", "w"), cv))
    lay = maximal_subwords(parse_word("s s x x"), part)
    assert lay.blocks == ((("s", "s"), cu), (("x", "x"), cv))


def test_non_alternating_blocks():
    k4 = complete_graph("1234")
    part = sim_partition(k4, make_split(k4, {"1", "2"}, {"3", "4"}))
    with pytest.raises(NonAlternatingBlocks):
        maximal_subwords(parse_word("1 2 3 2 1 3"), part)


def test_too_many_blocks(gstar_part):
    part, _, _ = gstar_part
    with pytest.raises(TooManyBlocks):
        maximal_subwords(parse_word("s w s x t t w x"), part)


def test_case1_ordering_examples(gstar_part):
    part, cu, cv = gstar_part
    lay = maximal_subwords(parse_word("s s x x t t w w"), part)
    assert order_classes_case1(lay).order == (cu, cv)
    P, Q, R = 0, 1, 2
    pqr = SubwordLayout(tuple(((c,), c) for c in [P, Q, R, P, Q, R]))
    assert order_classes_case1(pqr).order == (P, Q, R)
    pqpr = SubwordLayout(tuple(((f"{c}{i}",), c) for i, c in enumerate([P, Q, P, R])))
    assert order_classes_case1(pqpr).order == (P, Q, R)


def test_case1_cycle_detected():
    # Q before R in one half, R before Q in the other
    lay = SubwordLayout(tuple(((f"{c}{i}",), c) for i, c in enumerate([0, 1, 2, 0, 2, 1])))
    with pytest.raises(CyclicPrecedence):
        order_classes_case1(lay)


def test_run_case2_examples(gstar, gstar_part):
    part, _, _ = gstar_part
    for text in ["s s x x", "s s"]:
        p = parse_word(text)
        w = run_case2(gstar, part, maximal_subwords(p, part))
        assert_extends(gstar, p, w)


def test_run_case2_against_oracle():
    tried = 0
    for seed in range(60):
        g, _ = random_split_composed_graph(2, 4, seed)
        sp = find_safe_split(g)
        if sp is None:
            continue
        part = sim_partition(g, sp)
        for w in enumerate_representations(g):
            for r in range(1, len(g)):
                for keep in itertools.combinations(g.vertices, r):
                    p = induced_subword(w, keep)
                    try:
                        lay = maximal_subwords(p, part)
                    except Exception:
                        continue
                    if any(c != 1 for c in lay.block_counts().values()):
                        continue
                    got = run_case2(g, part, lay)
                    assert (got is None) == (oracle_extend(g, p) is None)
                    tried += 1
    assert tried > 100


def test_augment_examples(gstar, gstar_part):
    part, cu, _ = gstar_part
    q = quotient(gstar, part, cu)
    aq, word = augment(q, ("s", "s"))
    leaf = word.tokens[-1]
    assert word.tokens == ("s", "s", leaf, leaf)
    assert aq.graph.neighbors(leaf) == {q.marker}
    aq, word = augment(q, ())
    assert len(word) == 2 and len(aq.graph) == len(q.graph) + 1


def _strict_instances(g, part, i):
    """Blocks that some representation of the class graph draws next to
    both marker endpoints, as in the strict Case 2 instance."""
    q = quotient(g, part, i, marker="marker")
    psi = sorted(part.psi(i), key=g.index)
    seen = set()
    for w in enumerate_representations(q.graph, 8):
        for r in range(1, min(3, len(psi)) + 1):
            for keep in itertools.combinations(psi, r):
                sub = induced_subword(w, set(keep) | {q.marker}).tokens
                j = sub.index(q.marker)
                rot = sub[j:] + sub[:j]
                if rot[1] == q.marker and rot[2:] not in seen:
                    seen.add(rot[2:])
                    yield q, rot[2:]


def test_augment_is_monotone():
    checked = 0
    for seed in range(40):
        g, _ = random_split_composed_graph(3, 4, seed)
        sp = find_safe_split(g)
        if sp is None:
            continue
        part = sim_partition(g, sp)
        for i in range(len(part)):
            for q, block in _strict_instances(g, part, i):
                if extend(q.graph, CircularWord(block + (q.marker, q.marker))) is not None:
                    aq, word = augment(q, block, leaf="leaf")
                    assert extend(aq.graph, word) is not None
                    checked += 1
    assert checked > 20


def test_join_examples(gstar):
    w = join([(("u",), tuple("tsust")), (("v",), tuple("wxvxw"))])
    assert w.tokens == tuple("uvtsustwxvxw")
    assert realizes(w, gstar)
    assert join([(("a",), ("a",))]).tokens == ("a", "a")
    k4 = join([((x,), (x,)) for x in "1234"])
    assert k4.tokens == tuple("12341234") and realizes(k4, complete_graph("1234"))


def _connected_graphs(n, count, base):
    out = []
    seed = base
    while len(out) < count:
        g, _ = random_circle_graph(n, seed)
        seed += 1
        if is_connected(g):
            out.append(g)
    return out


def _scramble(p, k):
    toks = list(p.tokens)
    if len(toks) >= 4:
        i = k % (len(toks) - 1)
        toks[i], toks[i + 1] = toks[i + 1], toks[i]
    return CircularWord(tuple(toks))


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_agrees_with_oracle(n):
    for g in _connected_graphs(n, 12 if n < 7 else 6, 500 * n):
        partials = {}
        for w in enumerate_representations(g):
            for r in range(len(g) + 1):
                for keep in itertools.combinations(g.vertices, r):
                    p = induced_subword(w, keep)
                    partials[p.tokens] = p
                    s = _scramble(p, r)
                    partials[s.tokens] = s
        for p in partials.values():
            try:
                got = extend(g, p)
            except InvalidPartial:
                continue
            truth = oracle_extend(g, p)
            assert (got is None) == (truth is None), (g, p)
            if got is not None:
                assert_extends(g, p, got)


def test_realizable_partials_always_extend():
    for seed in range(30):
        g, w = random_split_composed_graph(4, 5, seed)
        for k in range(4):
            keep = [v for i, v in enumerate(g.vertices) if (i + k) % 3 == 0]
            p = induced_subword(w, keep)
            assert_extends(g, p, extend(g, p))


def test_joined_outputs_keep_classes_in_two_runs():
    for seed in range(40):
        g, w0 = random_split_composed_graph(3, 5, seed)
        sp = find_safe_split(g)
        if sp is None:
            continue
        part = sim_partition(g, sp)
        p = induced_subword(w0, g.vertices[::2])
        w = extend(g, p)
        assert check_two_subwords(w, part) == []


def test_reserved_labels():
    g = build_graph(["@1", "b"], [("@1", "b")])
    with pytest.raises(ValueError):
        extend(g, EMPTY)


def test_star_and_complete_paths():
    g = star_graph("c", list("pqr"))
    assert realizes(extend(g), g)
    k = complete_graph("abcd")
    p = parse_word("a b a b")
    assert_extends(k, p, extend(k, p))
