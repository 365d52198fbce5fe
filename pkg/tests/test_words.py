import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlerep.errors import OddOccurrence, UnknownSymbol
from circlerep.graph import build_graph, complete_graph
from circlerep.oracle import enumerate_representations, graph_of_word, random_circle_graph
from circlerep.words import (
    EMPTY,
    align,
    alternates,
    canonical_form,
    circular_equal,
    induced_subword,
    parse_word,
    realizes,
    reverse,
    rotate,
)


def words(max_labels=8):
    @st.composite
    def build(draw):
        k = draw(st.integers(0, max_labels))
        toks = [x for i in range(k) for x in (f"l{i}", f"l{i}")]
        return parse_word(draw(st.permutations(toks)))

    return build()


def test_parse():
    assert len(parse_word("s u s x v x t u t w v w").symbols) == 6
    assert parse_word("a a").symbols == {"a"}
    with pytest.raises(OddOccurrence) as exc:
        parse_word("a b a")
    assert exc.value.label == "b"


def test_alternates(tau_star):
    assert alternates(parse_word("a b a b"), "a", "b")
    assert not alternates(parse_word("a a b b"), "a", "b")
    assert not alternates(tau_star, "u", "w")
    with pytest.raises(UnknownSymbol):
        alternates(tau_star, "u", "q")


def test_realizes(gstar, tau_star):
    assert realizes(tau_star, gstar)
    assert realizes(parse_word("a a"), build_graph(["a"], []))
    assert realizes(parse_word("s s t t x x w w"), build_graph(list("stwx"), []))
    assert realizes(EMPTY, build_graph([], []))
    assert not realizes(parse_word("a a"), build_graph(["b"], []))


def test_induced(tau_star):
    assert induced_subword(tau_star, {"s", "t", "w", "x"}).tokens == tuple("ssxxttww")
    assert induced_subword(tau_star, tau_star.symbols) == tau_star
    assert circular_equal(induced_subword(tau_star, {"u", "v"}), parse_word("u v u v"))
    with pytest.raises(UnknownSymbol):
        induced_subword(tau_star, {"q"})


def test_circular_equal():
    assert circular_equal(parse_word("a b a b"), parse_word("b a b a"))
    assert circular_equal(parse_word("b a c b c a"), parse_word("b c a b a c"))
    assert not circular_equal(parse_word("a b c a b c"), parse_word("a c b a c b"))


def test_canonical_examples():
    assert canonical_form(parse_word("b a b a")) == canonical_form(parse_word("a b a b"))
    assert canonical_form(parse_word("a b a b")) != canonical_form(parse_word("a a b b"))


def test_reverse(gstar, tau_star):
    w = parse_word("a b a b")
    assert circular_equal(reverse(w), w)
    assert reverse(reverse(tau_star)) == tau_star
    assert realizes(reverse(tau_star), gstar)


def test_align():
    w = parse_word("s u s x v x t u t w v w")
    a = align(w, ("s", "s", "x", "x", "t", "t", "w", "w"))
    assert a is not None and a.tokens[0] == "s" and circular_equal(a, w)
    assert align(w, ("s", "s", "t", "t", "x", "x", "w", "w")) is None


@given(words(), st.integers(0, 40))
def test_canonical_rotation_invariant(w, k):
    assert canonical_form(rotate(w, k)) == canonical_form(w)


@settings(max_examples=1000)
@given(words(5), words(5))
def test_canonical_iff_circular_equal(w1, w2):
    assert (canonical_form(w1) == canonical_form(w2)) == circular_equal(w1, w2)


@given(words(6), st.integers(0, 20))
def test_realizes_invariant_under_symmetries(w, k):
    g = graph_of_word(w)
    assert realizes(w, g) and realizes(reverse(w), g) and realizes(rotate(w, k), g)


@given(words(6), st.data())
def test_alternates_symmetric(w, data):
    labels = sorted(w.symbols)
    if len(labels) >= 2:
        u, v = data.draw(st.sampled_from(list(itertools.permutations(labels, 2))))
        assert alternates(w, u, v) == alternates(w, v, u)


@given(words(6), st.integers(0, 20), st.data())
def test_induced_commutes_with_rotation(w, k, data):
    keep = data.draw(st.sets(st.sampled_from(sorted(w.symbols)))) if w.symbols else set()
    assert circular_equal(induced_subword(rotate(w, k), keep), induced_subword(w, keep))


def test_realizes_exhaustive_small():
    # every word of K_3 and of a random 5-vertex graph checks out against pairwise alternation
    for g in [complete_graph("abc"), random_circle_graph(5, 3)[0]]:
        for w in enumerate_representations(g):
            for x, y in itertools.combinations(g.vertices, 2):
                assert alternates(w, x, y) == g.has_edge(x, y)
