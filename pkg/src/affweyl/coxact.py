"""Coxeter elements of affine Weyl groups and the conjugation action of W.

A Coxeter element is determined by the acyclic orientation of the Coxeter
graph it induces (edge s -> t when s occurs left of t).  The finite group W
acts on Coxeter elements by s_i . c = s_i c s_i when s_i is a left or right
descent of c and trivially otherwise; for type C~n this is a genuine action,
for other types it can fail, which the checks below record.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .affine import (AffineElement, inverse, inversion_intervals, is_straight_up_to, length, multiply, power,
                     to_text, translation)
from .minimal import (
    default_depth,
    distinguished_coroot,
    distinguished_tail,
    distinguished_word,
    enumerate_splits,
    split_id,
)
from .report import CheckReport, check
from .rootsys import RootSystemDatum, RootSystemError, build
from .words import (
    affine_coxeter_matrix,
    enumerate_finite_group,
    evaluate,
    format_word,
    is_fully_commutative,
    is_reduced,
    quotient_element,
    quotient_word,
    reduced_word,
    simple_reflection,
)


@dataclass(frozen=True)
class Orientation:
    edges: tuple  # pairs (a, b) with a < b, in sorted order
    forward: tuple  # True when a occurs before b

    def arrows(self) -> str:
        """Arrow string, one '>' or '<' per edge joined by '-'.

        '>' means the edge points from its smaller to its larger endpoint.
        """
        return "-".join(">" if f else "<" for f in self.forward)


@dataclass(frozen=True)
class CoxeterElement:
    word: tuple
    element: AffineElement

    def __eq__(self, other):
        return isinstance(other, CoxeterElement) and self.element == other.element

    def __hash__(self):
        return hash(self.element)

    def __str__(self):
        return format_word(self.word)


@lru_cache(maxsize=None)
def graph_edges(datum: RootSystemDatum) -> tuple:
    m = affine_coxeter_matrix(datum)
    k = len(m)
    return tuple((a, b) for a in range(k) for b in range(a + 1, k) if m[a][b] != 2)


def coxeter_element(datum: RootSystemDatum, word) -> CoxeterElement:
    word = tuple(word)
    if sorted(word) != list(range(datum.rank + 1)):
        raise RootSystemError(f"{format_word(word)} does not use every generator exactly once")
    return CoxeterElement(word, evaluate(datum, word))


def orientation_of(datum: RootSystemDatum, c: CoxeterElement) -> Orientation:
    pos = {x: k for k, x in enumerate(c.word)}
    edges = graph_edges(datum)
    return Orientation(edges, tuple(pos[a] < pos[b] for a, b in edges))


def coxeter_from_orientation(datum: RootSystemDatum, o: Orientation) -> CoxeterElement:
    """Topological order of the oriented graph, smallest available index first."""
    nodes = range(datum.rank + 1)
    preds = {v: set() for v in nodes}
    for (a, b), f in zip(o.edges, o.forward):
        if f:
            preds[b].add(a)
        else:
            preds[a].add(b)
    word, done = [], set()
    while len(word) < datum.rank + 1:
        ready = [v for v in nodes if v not in done and preds[v] <= done]
        if not ready:
            raise RootSystemError("orientation has a directed cycle")
        word.append(ready[0])
        done.add(ready[0])
    return coxeter_element(datum, word)


def all_orientations(datum: RootSystemDatum) -> list:
    edges = graph_edges(datum)
    return [Orientation(edges, bits) for bits in itertools.product((True, False), repeat=len(edges))]


def coxeter_elements(datum: RootSystemDatum) -> list:
    """All Coxeter elements, one per acyclic orientation."""
    return [coxeter_from_orientation(datum, o) for o in all_orientations(datum)]


def _canonical(datum, element, word):
    c = CoxeterElement(tuple(word), element)
    return coxeter_from_orientation(datum, orientation_of(datum, c))


_ACT_CACHE: dict = {}


def act_simple(datum: RootSystemDatum, i: int, c: CoxeterElement) -> CoxeterElement:
    """s_i . c: conjugate when s_i is a left or right descent (by length), else c."""
    if not 1 <= i <= datum.rank:
        raise RootSystemError("the action is by the finite group: i must lie in 1..n")
    key = (datum, i, c.element)
    if key not in _ACT_CACHE:
        _ACT_CACHE[key] = _act_simple(datum, i, c)
    return _ACT_CACHE[key]


def _act_simple(datum, i, c):
    s = simple_reflection(datum, i)
    lc = length(c.element)
    rest = [x for x in c.word if x != i]
    if length(multiply(s, c.element)) < lc:
        # s_i can be moved to the front; s c s = c' s
        word = rest + [i]
    elif length(multiply(c.element, s)) < lc:
        word = [i] + rest
    else:
        return c
    g = multiply(multiply(s, c.element), s)
    out = _canonical(datum, g, word)
    assert out.element == g
    return out


def act_word(datum: RootSystemDatum, word, c: CoxeterElement) -> CoxeterElement:
    """w . c applied letter by letter from the right."""
    for i in reversed(tuple(word)):
        c = act_simple(datum, i, c)
    return c


def _braid_words(i, j, m):
    a = tuple(i if k % 2 == 0 else j for k in range(m))
    b = tuple(j if k % 2 == 0 else i for k in range(m))
    return a, b


def check_action_well_defined(datum: RootSystemDatum) -> CheckReport:
    """Involution and braid relations of W on every Coxeter element."""
    rep = CheckReport("action", datum.type_label, datum.rank)
    m = affine_coxeter_matrix(datum)
    n = datum.rank
    failures = []
    elems = coxeter_elements(datum)
    for c in elems:
        for i in range(1, n + 1):
            if act_simple(datum, i, act_simple(datum, i, c)) != c:
                failures.append((c, (i, i), None, None))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                w1, w2 = _braid_words(i, j, m[i][j])
                r1, r2 = act_word(datum, w1, c), act_word(datum, w2, c)
                if r1 != r2:
                    failures.append((c, (w1, w2), r1, r2))
    if failures:
        c, (w1, w2), r1, r2 = failures[0]
        rep.add(check("braid_relations", False, "all relations hold",
                      f"{len(failures)} failures",
                      f"first witness: c={c}, {format_word(w1)} gives {r1}, {format_word(w2)} gives {r2}"))
    else:
        rep.add(check("braid_relations", True, len(elems), len(elems),
                      f"{len(elems)} Coxeter elements, all relations hold"))
    return rep


def action_witness(datum: RootSystemDatum, c_word, w1, w2):
    """Results of two braid-equivalent words acting on c."""
    c = coxeter_element(datum, c_word)
    return act_word(datum, w1, c), act_word(datum, w2, c)


def orbit(datum: RootSystemDatum, c: CoxeterElement) -> set:
    seen = {c}
    todo = [c]
    while todo:
        x = todo.pop()
        for i in range(1, datum.rank + 1):
            y = act_simple(datum, i, x)
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def stabilizer_order(datum: RootSystemDatum, c: CoxeterElement) -> int:
    """|W| / |orbit| by orbit-stabiliser."""
    from .rootsys import weyl_group_order
    order = weyl_group_order(datum)
    size = len(orbit(datum, c))
    assert order % size == 0
    return order // size


def stabilizer_direct(datum: RootSystemDatum, c: CoxeterElement) -> int:
    """Count w in W with w . c = c, acting through canonical reduced words."""
    return sum(1 for w in enumerate_finite_group(datum) if act_word(datum, reduced_word(w), c) == c)


def standard_coxeter(datum: RootSystemDatum) -> CoxeterElement:
    """s_n s_{n-1} ... s_1 s_0."""
    return coxeter_element(datum, list(range(datum.rank, -1, -1)))


def check_action_word_independence(datum: RootSystemDatum) -> CheckReport:
    """For every w in W and right descent s: act(canon(ws) + s) = act(canon(w)).

    By induction on length this shows act_word only depends on the element.
    """
    rep = CheckReport("action_words", datum.type_label, datum.rank)
    elems = coxeter_elements(datum)
    bad = None
    count = 0
    for w in enumerate_finite_group(datum):
        base = reduced_word(w)
        for s in range(1, datum.rank + 1):
            ws = multiply(w, simple_reflection(datum, s))
            if length(ws) < length(w):
                other = reduced_word(ws) + (s,)
                for c in elems:
                    count += 1
                    if act_word(datum, base, c) != act_word(datum, other, c):
                        bad = bad or (base, other, c)
    rep.add(check("word_independence", bad is None, "independent", None if bad is None else
                  f"{format_word(bad[0])} vs {format_word(bad[1])} on {bad[2]}", f"{count} comparisons"))
    return rep


def _require_C(datum):
    if datum.type_label != "C":
        raise RootSystemError("this check is stated for type C~n")


def verify_coxlemma(datum: RootSystemDatum, depth: int | None = None) -> CheckReport:
    """The quotient word, the power identity and the conjugated periods for C~n."""
    _require_C(datum)
    K = default_depth() if depth is None else depth
    n = datum.rank
    rep = CheckReport("lemma6", "C", n, n)
    stated = []
    for k in range(1, n + 1):
        stated += list(range(n, k - 1, -1))
    x = quotient_element(datum, n)
    rep.add(check("quotient_word_reduced", is_reduced(datum, stated), True, is_reduced(datum, stated)))
    rep.add(check("quotient_word_value", evaluate(datum, stated) == x, format_word(quotient_word(datum, n)),
                  format_word(reduced_word(evaluate(datum, stated)))))

    c0 = standard_coxeter(datum)
    t = translation(datum, distinguished_coroot(datum, n))
    cn = power(c0.element, n)
    rep.add(check("power_is_translation", cn == t, to_text(t), to_text(cn)))
    lw = evaluate(datum, distinguished_word(datum, n))
    rep.add(check("power_matches_lemma_word", lw == cn, to_text(cn), to_text(lw)))

    coxes = set(coxeter_elements(datum))
    conj = set()
    bad = None
    splits = enumerate_splits(datum, quotient_word(datum, n))
    tail = distinguished_tail(datum, n)
    for u, v in splits:
        ue = evaluate(datum, u)
        period = evaluate(datum, v + tail + u)
        cu = multiply(multiply(inverse(ue), c0.element), ue)
        conj.add(cu)
        if period != power(cu, n) or cu not in {c.element for c in coxes}:
            bad = bad or split_id((u, v))
    rep.add(check("periods_are_coxeter_powers", bad is None, len(splits), bad))
    rep.add(check("conjugates_are_all_coxeter", conj == {c.element for c in coxes}, len(coxes), len(conj)))

    # converse: each Coxeter element's power word matches some split at depth K
    missing = []
    for c in coxeter_elements(datum):
        found = False
        for u, v in splits:
            p = evaluate(datum, v + tail + u)
            if all(inversion_intervals(power(p, k)) == inversion_intervals(power(c.element, n * k))
                   for k in range(1, K + 1)):
                found = True
                break
        if not found:
            missing.append(str(c))
    rep.add(check("every_coxeter_matches_a_split", not missing, 0, missing))
    return rep


def verify_action_C(datum: RootSystemDatum) -> CheckReport:
    """Well-definedness, orbit size 2^n and stabiliser n! for C~n."""
    _require_C(datum)
    import math
    n = datum.rank
    rep = check_action_well_defined(datum)
    rep.clause = "lemma6_action"
    c0 = standard_coxeter(datum)
    orb = orbit(datum, c0)
    rep.add(check("orbit_size", len(orb) == 2 ** n, 2 ** n, len(orb)))
    rep.add(check("orbit_is_all_coxeter", orb == set(coxeter_elements(datum)), 2 ** n, len(orb)))
    st = stabilizer_order(datum, c0)
    rep.add(check("stabilizer_order", st == math.factorial(n), math.factorial(n), st))
    return rep


# ------------------------------------------------------------------ remarks

# (u, v, c) triples for F~4 with quotient index 2; c^6 = v + tail + u
F4_TRIPLES = (
    ((2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3), (2, 1, 2, 3, 4, 2, 3, 1, 2), (1, 2, 3, 4, 0)),
    ((2, 1, 3, 2, 3, 4, 3, 2, 3, 1, 2, 3, 2, 4, 3), (1, 2, 3, 1, 2), (0, 1, 2, 3, 4)),
    ((2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3, 1, 2, 3), (1, 4, 2, 3, 1, 2), (0, 1, 2, 4, 3)),
    ((2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3, 1, 2), (3, 1, 4, 2, 3, 1, 2), (3, 0, 1, 2, 4)),
    ((2, 1, 3, 2, 3, 1, 4, 3, 2, 3, 1, 2), (1, 4, 3, 4, 2, 3, 1, 2), (4, 3, 0, 1, 2)),
    ((2, 3, 2, 4, 3, 1, 2, 3, 2, 4, 3, 1), (2, 1, 3, 4, 2, 3, 1, 2), (2, 0, 1, 3, 4)),
    ((2, 1, 3, 2, 3, 1, 4, 3, 2, 3, 1), (4, 2, 1, 3, 4, 2, 3, 1, 2), (4, 0, 2, 1, 3)),
    ((2, 1, 3, 2, 3, 1, 4, 3, 2, 1), (3, 4, 2, 1, 3, 4, 2, 3, 1, 2), (3, 4, 0, 2, 1)),
    ((2, 3, 4, 2, 1, 2, 3, 2, 1), (4, 3, 4, 2, 1, 3, 4, 2, 3, 1, 2), (4, 3, 2, 0, 1)),
    ((2, 1, 3, 2, 3, 1, 4, 3, 2, 3), (2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (4, 1, 2, 3, 0)),
    ((2, 1, 3, 2, 3, 1, 4, 3, 2), (3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (3, 4, 1, 2, 0)),
    ((2, 3, 4, 2, 1, 2, 3, 2), (4, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (4, 3, 1, 2, 0)),
    ((2, 1, 3, 2, 3, 1, 4, 3), (2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (2, 1, 0, 3, 4)),
    ((2, 1, 3, 2, 1, 4, 3), (4, 2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (4, 2, 1, 0, 3)),
    ((2, 1, 3, 2, 1, 4), (3, 4, 2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (3, 4, 2, 1, 0)),
    ((2, 1, 3, 2, 1), (4, 3, 4, 2, 3, 2, 4, 1, 2, 3, 4, 2, 3, 1, 2), (4, 3, 2, 1, 0)),
)

# (u, v, c) triples for G~2 with quotient index 2; c^2 = v + tail + u
G2_TRIPLES = (
    ((2,), (1, 2, 1, 2), (1, 2, 0)),
    ((2, 1), (2, 1, 2), (2, 1, 0)),
    ((2, 1, 2), (1, 2), (1, 0, 2)),
    ((2, 1, 2, 1), (2,), (0, 2, 1)),
)

REMARK_INDEX = 2
REMARK_POWER = {"F4": 6, "G2": 2}
B4_WITNESS = {
    "c": (1, 4, 2, 3, 0),
    "left": (2, 3, 2),
    "right": (3, 2, 3),
    "left_result": (3, 1, 4, 2, 0),
    "right_result": (1, 4, 2, 3, 0),
}


def verify_remark_calculations(datum: RootSystemDatum) -> CheckReport:
    t = datum.type_label
    if t not in REMARK_POWER:
        raise RootSystemError("remark calculations exist for G2 and F4 only")
    triples = F4_TRIPLES if t == "F4" else G2_TRIPLES
    m = REMARK_POWER[t]
    rep = CheckReport("remarks", t, datum.rank, REMARK_INDEX)
    x = quotient_element(datum, REMARK_INDEX)
    tail = distinguished_tail(datum, REMARK_INDEX)
    seen = set()
    for k, (u, v, c) in enumerate(triples, 1):
        uv_ok = is_reduced(datum, u + v) and evaluate(datum, u + v) == x
        rep.add(check(f"triple{k}_uv_is_quotient", uv_ok, True, uv_ok))
        lhs = v + tail + u
        rhs = tuple(c) * m
        ok = (is_reduced(datum, lhs) and is_reduced(datum, rhs) and len(lhs) == len(rhs)
              and evaluate(datum, lhs) == evaluate(datum, rhs))
        rep.add(check(f"triple{k}_power", ok, f"({format_word(c)})^{m}", format_word(lhs)))
        seen.add(coxeter_element(datum, c))
    allc = set(coxeter_elements(datum))
    rep.add(check("all_coxeter_elements_listed", seen == allc, len(allc), len(seen)))
    if t == "G2":
        w = (1, 2, 0, 1, 2, 0)
        fc = is_fully_commutative(datum, w)
        rep.add(check("not_fully_commutative", not fc, False, fc))
    return rep


def verify_b4_failure(datum: RootSystemDatum | None = None) -> CheckReport:
    """Reproduce the B~4 witness; passes when the action fails as stated."""
    datum = datum or build("B", 4)
    rep = CheckReport("remarks", "B", 4)
    w = B4_WITNESS
    r1, r2 = action_witness(datum, w["c"], w["left"], w["right"])
    e1 = coxeter_element(datum, w["left_result"])
    e2 = coxeter_element(datum, w["right_result"])
    rep.add(check("left_path", r1 == e1, format_word(w["left_result"]), str(r1)))
    rep.add(check("right_path", r2 == e2, format_word(w["right_result"]), str(r2)))
    rep.add(check("expected_failure_reproduced", r1 != r2, "different results", f"{r1} vs {r2}"))
    wd = check_action_well_defined(datum)
    failed = not wd.ok
    rep.add(check("action_not_well_defined", failed, "braid relation failure",
                  wd.checks[0].detail or wd.checks[0].actual))
    return rep


def coxeter_straightness(datum: RootSystemDatum, K: int = 8) -> list:
    """Coxeter elements that fail the straightness test up to K."""
    return [str(c) for c in coxeter_elements(datum) if not is_straight_up_to(c.element, K)]
