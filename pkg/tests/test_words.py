import pytest
from hypothesis import given, settings, strategies as st

from affweyl.affine import identity, inverse, length, multiply, simple_reflection
from affweyl.rootsys import build, weyl_group_order
from affweyl.words import (WordError, coset_min_rep, commutation_class, enumerate_finite_group, enumerate_splits,
                           evaluate, first_non_reduced, format_word, is_fully_commutative, is_left_descent,
                           is_reduced, is_right_descent, longest_element, parse_word, quotient_element,
                           quotient_word, reduced_word)

TYPES = [build("C", 2), build("C", 3), build("B", 3), build("G2"), build("D", 4), build("F4")]


def all_reduced_words(g):
    """Every reduced word of g, by peeling right descents."""
    if length(g) == 0:
        return {()}
    out = set()
    for s in range(g.datum.rank + 1):
        if is_right_descent(g, s):
            for w in all_reduced_words(multiply(g, simple_reflection(g.datum, s))):
                out.add(w + (s,))
    return out


def test_parse_and_format():
    assert parse_word("0,2,1") == (0, 2, 1)
    assert parse_word(" 1, 2 ") == (1, 2)
    assert parse_word("") == ()
    assert format_word((3, 0, 1)) == "3,0,1"
    with pytest.raises(WordError):
        parse_word("1,x")
    with pytest.raises(WordError):
        evaluate(build("C", 2), (3,))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(TYPES).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(0, d.rank), max_size=12))))
def test_reduced_word_round_trip(data):
    d, w = data
    g = evaluate(d, w)
    r = reduced_word(g)
    assert evaluate(d, r) == g
    assert len(r) == length(g)
    assert is_reduced(d, r)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(TYPES).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(0, d.rank), max_size=12))))
def test_first_non_reduced_position(data):
    d, w = data
    bad = first_non_reduced(d, w)
    if bad is None:
        assert length(evaluate(d, w)) == len(w)
    else:
        pos = bad[0]
        assert is_reduced(d, w[:pos])
        assert not is_reduced(d, w[:pos + 1])


def test_descents():
    d = build("C", 2)
    g = evaluate(d, (1, 2))
    assert is_left_descent(g, 1) and not is_left_descent(g, 2)
    assert is_right_descent(g, 2) and not is_right_descent(g, 1)


@pytest.mark.parametrize("d", TYPES, ids=lambda d: d.label)
def test_longest_element(d):
    full = longest_element(d, range(1, d.rank + 1))
    assert len(full) == len(d.positive_roots)
    w0 = evaluate(d, full)
    assert all(is_right_descent(w0, s) for s in range(1, d.rank + 1))
    assert multiply(w0, w0) == identity(d)


@pytest.mark.parametrize("d", TYPES, ids=lambda d: d.label)
def test_quotient_element_lengths(d):
    n = len(d.positive_roots)
    for i in range(1, d.rank + 1):
        rest = [j for j in range(1, d.rank + 1) if j != i]
        x = quotient_element(d, i)
        assert length(x) == n - len(longest_element(d, rest))
        assert quotient_word(d, i) == reduced_word(x)
        # x is minimal in its left coset: no right descents other than s_i
        assert [s for s in range(1, d.rank + 1) if is_right_descent(x, s)] in ([i], [])


def test_coset_min_rep():
    d = build("B", 3)
    for w in enumerate_finite_group(d)[:40]:
        u = coset_min_rep(w, [1, 2])
        assert not is_right_descent(u, 1) and not is_right_descent(u, 2)
        v = multiply(inverse(u), w)
        assert length(w) == length(u) + length(v)


def test_group_enumeration_sizes():
    for d in TYPES:
        assert len(enumerate_finite_group(d)) == weyl_group_order(d)


@pytest.mark.parametrize("word", [(1, 2, 1, 2), (0, 1, 2, 1), (2, 1, 0, 1, 2)])
def test_splits_match_reduced_word_prefixes(word):
    d = build("C", 2)
    if not is_reduced(d, word):
        pytest.skip("not reduced")
    g = evaluate(d, word)
    prefixes = {evaluate(d, w[:k]) for w in all_reduced_words(g) for k in range(len(w) + 1)}
    splits = enumerate_splits(d, word)
    assert {evaluate(d, u) for u, _ in splits} == prefixes
    for u, v in splits:
        assert evaluate(d, u + v) == g and len(u) + len(v) == len(word)
    assert splits[0] == ((), reduced_word(g))
    assert [len(u) for u, _ in splits] == sorted(len(u) for u, _ in splits)


def test_splits_reject_non_reduced():
    with pytest.raises(WordError):
        enumerate_splits(build("C", 2), (1, 1))


def test_fully_commutative_examples():
    g2 = build("G2")
    assert not is_fully_commutative(g2, (1, 2, 0, 1, 2, 0))
    assert is_fully_commutative(g2, (1, 2, 0))
    c2 = build("C", 2)
    assert is_fully_commutative(c2, (1, 2))
    assert not is_fully_commutative(c2, (1, 2, 1, 2))
    with pytest.raises(WordError):
        is_fully_commutative(c2, (1, 1))


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(TYPES[:4]).flatmap(lambda d: st.tuples(st.just(d), st.lists(st.integers(0, d.rank), max_size=7))))
def test_fully_commutative_matches_reduced_word_graph(data):
    d, w = data
    r = reduced_word(evaluate(d, w))
    words = all_reduced_words(evaluate(d, r))
    assert is_fully_commutative(d, r) == (commutation_class(d, r) == words)
