import itertools
import math
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from affweyl.rootsys import (INF, RootSystemError, build, classify, classify_component, coroot,
                             coxeter_group_order, coxeter_matrix, inner, is_word_hyperbolic,
                             normalize_type, reflect, weyl_group_order)
from affweyl.words import enumerate_finite_group

from oracles import coxeter_form_kind, epsilon_data, epsilon_gram, epsilon_reflect, simple_coordinates

ALL_TYPES = [("B", n) for n in range(2, 9)] + [("C", n) for n in range(2, 9)] + \
    [("D", n) for n in range(4, 9)] + [("E6", None), ("E7", None), ("E8", None), ("F4", None), ("G2", None)]

ORACLE_TYPES = [("B", 2), ("B", 3), ("B", 5), ("C", 2), ("C", 3), ("C", 6), ("D", 4), ("D", 5),
                ("G2", None), ("F4", None), ("E6", None), ("E7", None), ("E8", None)]


def _ids(params):
    return [f"{t}{n or ''}" for t, n in params]


@pytest.mark.parametrize("t,n", ORACLE_TYPES, ids=_ids(ORACLE_TYPES))
def test_roots_match_epsilon_construction(t, n):
    d = build(t, n)
    simple, roots = epsilon_data(t, n)
    assert simple_coordinates(simple, roots) == set(d.roots)


@pytest.mark.parametrize("t,n", ORACLE_TYPES, ids=_ids(ORACLE_TYPES))
def test_gram_is_a_rescaled_epsilon_gram(t, n):
    d = build(t, n)
    simple, _ = epsilon_data(t, n)
    eg = epsilon_gram(simple)
    scale = sp.Rational(d.gram[0][0].numerator, d.gram[0][0].denominator) / eg[0][0]
    for i in range(d.rank):
        for j in range(d.rank):
            g = d.gram[i][j]
            assert sp.Rational(g.numerator, g.denominator) == scale * eg[i][j]


@pytest.mark.parametrize("t,n", [("C", 3), ("F4", None), ("G2", None)], ids=["C3", "F4", "G2"])
def test_reflection_matches_epsilon_reflection(t, n):
    d = build(t, n)
    simple, _ = epsilon_data(t, n)
    for k in range(d.rank):
        s = tuple(int(x == k) for x in range(d.rank))
        for r in d.positive_roots:
            ours = reflect(d, s, r)
            theirs = epsilon_reflect(simple, k, r)
            assert tuple(sp.Integer(x) for x in ours) == theirs


@pytest.mark.parametrize("t,n", ALL_TYPES, ids=_ids(ALL_TYPES))
def test_positive_root_counts(t, n):
    expected = {"B": lambda n: n * n, "C": lambda n: n * n, "D": lambda n: n * (n - 1)}
    fixed = {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}
    d = build(t, n)
    want = fixed[t] if t in fixed else expected[t](n)
    assert len(d.positive_roots) == want
    assert len(d.roots) == 2 * want


def test_highest_roots():
    assert build("G2").highest_root == (3, 2)
    assert build("F4").highest_root == (2, 3, 4, 2)
    assert build("E8").highest_root == (2, 3, 4, 6, 5, 4, 3, 2)
    assert build("E6").highest_root == (1, 2, 2, 3, 2, 1)
    assert build("C", 3).highest_root == (2, 2, 1)
    assert build("B", 3).highest_root == (1, 2, 2)
    assert build("D", 5).highest_root == (1, 2, 2, 1, 1)


@pytest.mark.parametrize("t,n", ALL_TYPES, ids=_ids(ALL_TYPES))
def test_highest_root_dominates(t, n):
    d = build(t, n)
    rho = d.highest_root
    assert all(all(a >= b for a, b in zip(rho, r)) for r in d.positive_roots)
    assert all(inner(d, rho, tuple(int(k == i) for k in range(d.rank))) >= 0 for i in range(d.rank))


def test_coroots_pair_to_two():
    for t, n in ORACLE_TYPES[:8]:
        d = build(t, n)
        for r in d.positive_roots:
            assert inner(d, r, coroot(d, r)) == 2


def test_invalid_types():
    with pytest.raises(RootSystemError):
        build("C", 1)
    with pytest.raises(RootSystemError):
        build("D", 3)
    with pytest.raises(RootSystemError):
        build("Q", 3)
    with pytest.raises(RootSystemError):
        build("B")
    assert normalize_type("e8") == ("E8", 8)


@pytest.mark.parametrize("t,n", [("B", 3), ("C", 4), ("D", 4), ("G2", None), ("F4", None)],
                         ids=["B3", "C4", "D4", "G2", "F4"])
def test_weyl_order_matches_enumeration(t, n):
    d = build(t, n)
    assert weyl_group_order(d) == len(enumerate_finite_group(d))
    for J in [(1,), (1, 2), tuple(range(2, d.rank + 1))]:
        assert weyl_group_order(d, J) > 0


def test_weyl_orders_exceptional():
    assert weyl_group_order(build("E8")) == 696729600
    assert weyl_group_order(build("E7")) == 2903040
    assert weyl_group_order(build("E6")) == 51840
    assert weyl_group_order(build("C", 5)) == 2 ** 5 * 120
    assert weyl_group_order(build("D", 6)) == 2 ** 5 * 720


@pytest.mark.parametrize("t,n,name", [("B", 3, "B~3"), ("C", 4, "C~4"), ("D", 5, "D~5"), ("G2", None, "G~2"),
                                      ("F4", None, "F~4"), ("E6", None, "E~6"), ("E7", None, "E~7"),
                                      ("E8", None, "E~8"), ("C", 2, "C~2")])
def test_affine_diagrams_classified(t, n, name):
    d = build(t, n)
    m = coxeter_matrix(d, affine=True)
    assert classify(m) == [("affine", name)]


ENTRIES = st.sampled_from([2, 2, 2, 3, 3, 4, 5, 6, INF])


@st.composite
def coxeter_matrices(draw):
    k = draw(st.integers(1, 6))
    m = [[1] * k for _ in range(k)]
    for i, j in itertools.combinations(range(k), 2):
        m[i][j] = m[j][i] = draw(ENTRIES)
    return m


@settings(max_examples=400, deadline=None)
@given(coxeter_matrices())
def test_classifier_agrees_with_cosine_form(m):
    from affweyl.rootsys import _components
    for comp in _components(m, range(len(m))):
        sub = [[m[a][b] for b in comp] for a in comp]
        kind, _ = classify_component(m, comp)
        assert kind == coxeter_form_kind(sub)


@settings(max_examples=200, deadline=None)
@given(coxeter_matrices())
def test_finite_orders_multiply_over_components(m):
    kinds = classify(m)
    if all(k == "finite" for k, _ in kinds):
        assert coxeter_group_order(m) >= 2 ** len(m)
    else:
        with pytest.raises(RootSystemError):
            coxeter_group_order(m)


def test_word_hyperbolic_examples():
    tri = [[1, 3, 3], [3, 1, 3], [3, 3, 1]]  # affine A~2
    assert not is_word_hyperbolic(tri)
    hyp = [[1, 7, 2], [7, 1, 3], [2, 3, 1]]
    # (2,3,7) triangle group contains no affine subdiagram of rank >= 3
    assert is_word_hyperbolic([[1, 3, 2], [3, 1, 7], [2, 7, 1]])
    assert is_word_hyperbolic(hyp)
    # two commuting infinite dihedral factors
    prod = [[1, INF, 2, 2], [INF, 1, 2, 2], [2, 2, 1, INF], [2, 2, INF, 1]]
    assert not is_word_hyperbolic(prod)
    with pytest.raises(RootSystemError):
        is_word_hyperbolic([[1, 1], [1, 1]])


@given(st.sampled_from(ORACLE_TYPES[:6]), st.data())
@settings(max_examples=60, deadline=None)
def test_reflection_is_involution(tn, data):
    d = build(*tn)
    r = data.draw(st.sampled_from(d.roots))
    v = tuple(data.draw(st.integers(-5, 5)) for _ in range(d.rank))
    assert reflect(d, r, reflect(d, r, v)) == tuple(Fraction(x) for x in v)
    assert math.isclose(float(inner(d, reflect(d, r, v), reflect(d, r, v))), float(inner(d, v, v)))
