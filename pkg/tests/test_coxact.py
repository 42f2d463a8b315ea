import math

import pytest

from affweyl.affine import is_straight_up_to, length, power
from affweyl.coxact import (B4_WITNESS, F4_TRIPLES, G2_TRIPLES, Orientation, act_simple, act_word,
                            action_witness, all_orientations, check_action_well_defined,
                            check_action_word_independence, coxeter_element, coxeter_elements,
                            coxeter_from_orientation, coxeter_straightness, graph_edges, orbit,
                            orientation_of, stabilizer_direct, stabilizer_order, standard_coxeter,
                            verify_action_C, verify_b4_failure, verify_coxlemma, verify_remark_calculations)
from affweyl.minimal import distinguished_translation
from affweyl.rootsys import RootSystemError, build


def test_graph_edges():
    assert graph_edges(build("C", 3)) == ((0, 1), (1, 2), (2, 3))
    # G~2 is a path 0 - 2 - 1
    assert graph_edges(build("G2")) == ((0, 2), (1, 2))
    assert len(graph_edges(build("D", 5))) == 5


@pytest.mark.parametrize("t,n,count", [("C", 3, 8), ("B", 4, 16), ("G2", None, 4), ("F4", None, 16), ("D", 4, 16)])
def test_coxeter_elements_count(t, n, count):
    d = build(t, n)
    elems = coxeter_elements(d)
    assert len(elems) == count == len(set(elems))
    for c in elems:
        assert length(c.element) == d.rank + 1
        assert coxeter_from_orientation(d, orientation_of(d, c)) == c


def test_orientation_round_trip_and_cycles():
    d = build("C", 2)
    c = coxeter_element(d, (2, 1, 0))
    o = orientation_of(d, c)
    assert o.arrows() == "<-<"
    assert coxeter_from_orientation(d, o).word == (2, 1, 0)
    assert len(all_orientations(d)) == 4
    with pytest.raises(RootSystemError):
        coxeter_element(d, (1, 1, 0))


def test_cycle_orientation_rejected():
    # edges (0,1), (0,2), (1,2): 0 -> 1 -> 2 -> 0
    d = build("A", 2)
    edges = graph_edges(d)
    with pytest.raises(RootSystemError):
        coxeter_from_orientation(d, Orientation(edges, (True, False, True)))


def test_act_simple_descents():
    d = build("C", 2)
    c = coxeter_element(d, (2, 1, 0))
    # s2 is a left descent: s2 c s2 = 1 0 2
    assert act_simple(d, 2, c).word == (1, 0, 2)
    # s1 is neither a left nor a right descent
    assert act_simple(d, 1, c) == c
    with pytest.raises(RootSystemError):
        act_simple(d, 0, c)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_action_on_C(n):
    d = build("C", n)
    rep = verify_action_C(d)
    assert rep.ok, rep.failures()
    assert check_action_word_independence(d).ok
    c0 = standard_coxeter(d)
    assert len(orbit(d, c0)) == 2 ** n
    assert stabilizer_order(d, c0) == math.factorial(n)


@pytest.mark.parametrize("n", [2, 3])
def test_stabilizer_by_direct_count(n):
    d = build("C", n)
    assert stabilizer_direct(d, standard_coxeter(d)) == math.factorial(n)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coxeter_power_is_translation(n):
    d = build("C", n)
    c0 = standard_coxeter(d)
    assert c0.word == tuple(range(n, -1, -1))
    assert power(c0.element, n) == distinguished_translation(d, n)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_coxlemma(n):
    rep = verify_coxlemma(build("C", n), depth=6)
    assert rep.ok, rep.failures()


def test_coxlemma_needs_type_C():
    with pytest.raises(RootSystemError):
        verify_coxlemma(build("B", 3))


def test_b4_witness():
    d = build("B", 4)
    r1, r2 = action_witness(d, B4_WITNESS["c"], B4_WITNESS["left"], B4_WITNESS["right"])
    assert r1 != r2
    assert r1 == coxeter_element(d, (3, 1, 4, 2, 0))
    assert r2 == coxeter_element(d, (1, 4, 2, 3, 0))
    rep = verify_b4_failure(d)
    assert rep.ok, rep.failures()
    assert not check_action_well_defined(d).ok


def test_remarks():
    assert len(F4_TRIPLES) == 16 and len(G2_TRIPLES) == 4
    for t in ("F4", "G2"):
        rep = verify_remark_calculations(build(t))
        assert rep.ok, rep.failures()
    with pytest.raises(RootSystemError):
        verify_remark_calculations(build("C", 3))


@pytest.mark.parametrize("t,n", [("C", 2), ("C", 3), ("C", 4), ("G2", None), ("F4", None)])
def test_coxeter_elements_straight(t, n):
    d = build(t, n)
    assert coxeter_straightness(d, 8) == []
    for c in coxeter_elements(d):
        assert is_straight_up_to(c.element, 8)


def test_act_word_order():
    d = build("C", 3)
    c = standard_coxeter(d)
    assert act_word(d, (3,), c) == act_simple(d, 3, c)
    assert act_word(d, (1, 2), c) == act_simple(d, 1, act_simple(d, 2, c))
