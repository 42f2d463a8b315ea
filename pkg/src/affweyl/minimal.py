"""Distinguished translations and minimal infinite reduced words.

For each simple index i the i-th distinguished coroot lambda_i pairs
positively with beta_i and trivially with the other simple roots.  The
translation t = t_{lambda_i} factors as

    t = x . tail,      x = w_0^{W_{S minus s_i}} w_0,

with a tail word given by explicit patterns (classical types) or by literal
tables (exceptional types).  For a split x = u v (lengths adding) the period
v . tail . u evaluates to u^{-1} t u, and its infinite power is the minimal
infinite reduced word whose inversion set is the hat of u^{-1}(Phi+ minus
Phi_{S minus s_i}).
"""
from __future__ import annotations

import os
import re
from fractions import Fraction

from . import affine
from .affine import inverse, inversion_intervals, length, multiply, translation
from .biclosed import hat_contains, maximal_standard
from .report import Check, CheckReport, check
from .rootsys import RootSystemDatum, RootSystemError, build, inner, unit, weyl_group_order
from .words import (
    coset_min_rep,
    enumerate_finite_group,
    enumerate_splits,
    evaluate,
    first_non_reduced,
    format_word,
    is_reduced,
    quotient_element,
    quotient_word,
    reduced_word,
)

DEFAULT_DEPTH = 6
F = Fraction


def default_depth() -> int:
    """Depth K for straightness and inversion checks (env AFFWEYL_DEPTH)."""
    raw = os.environ.get("AFFWEYL_DEPTH")
    if raw:
        k = int(raw)
        if k < 1:
            raise ValueError("AFFWEYL_DEPTH must be a positive integer")
        return k
    return DEFAULT_DEPTH


# ------------------------------------------------------------ tail patterns

def _up(a, b):
    return list(range(a, b + 1))


def _down(a, b):
    return list(range(a, b - 1, -1))


def _q(k):
    return [k, k - 1, k + 1, k]


def _q_blocks(top):
    """(Q_2 ... Q_{2m} 0) for m = top, top-1, ..., 1."""
    out = []
    for m in range(top, 0, -1):
        for k in range(2, 2 * m + 1, 2):
            out += _q(k)
        out.append(0)
    return out


def _tail_C(n, i):
    out = [0]
    for k in range(1, i):
        out += _down(k, 1) + [0]
    return out


def _tail_B(n, i):
    if i == 1:
        return [0] + _up(2, n) + _down(n - 1, 2) + [0]
    if i % 2 == 0:
        return [0] + _q_blocks((i - 2) // 2)
    block = [0] + _up(2, n) + _down(n - 1, i)
    out = (block + _up(1, n) + _down(n - 1, i)) * ((i - 1) // 2)
    out += block + _up(1, i - 1)
    for m in range((i - 3) // 2, 0, -1):
        out.append(0)
        for k in range(2, 2 * m + 1, 2):
            out += _q(k)
    return out + [0]


def _tail_D(n, i):
    if i == 1:
        return [0] + _up(2, n - 2) + [n - 1, n] + _down(n - 2, 2) + [0]
    if i <= n - 2 and i % 2 == 0:
        return [0] + _q_blocks((i - 2) // 2)
    if i <= n - 2:
        pairs = []
        for k in range(n - 3, i - 2, -1):
            pairs += [k, k + 1]
        out = [0] + (_up(2, n) + _up(1, n) + pairs + [0]) * ((i - 1) // 2)
        out += _up(2, n) + _down(n - 2, i) + _up(1, i - 1) + [0]
        return out + _q_blocks((i - 3) // 2)
    a, b = (n - 1, n) if i == n - 1 else (n, n - 1)
    if n % 2 == 0:
        return [0] + _up(2, n - 2) + [b] + _up(1, n - 2) + [0] + _q_blocks((n - 4) // 2)
    # n odd: the repeated block ends with s_b after beta_1..beta_{n-2}
    block = _up(2, n - 2) + [a] + _up(1, n - 2) + [b] + [0]
    return [0] + block * ((n + 1) // 2) + _q_blocks((n - 3) // 2)


# literal tails for the exceptional types, in "(...)^k" notation
_EXCEPTIONAL_TAILS = {
    ('E6', 1): (
        '0 (2 4 5 3 4 1 2 3 4 5 6 0)^2 2 4 5 3 4 2 0'
    ),
    ('E6', 2): (
        '0'
    ),
    ('E6', 3): (
        '0 (2 4 5 6 3 4 5 2 4 1 3 4 2 5 4 6 5 0)^2 (2 4 3 5 4 2 1 3 4 6 5 4 3 2 4 0) (2 4 '
        '3 5 6 4 1 5 3 4 2 0)'
    ),
    ('E6', 4): (
        '0 2 4 3 5 6 4 1 5 3 4 2 0'
    ),
    ('E6', 5): (
        '0 (2 4 3 1 5 4 3 2 4 6 5 4 2 3 4 1 3 0)^2 (2 4 5 3 4 2 6 5 4 1 3 4 5 2 4 0) (2 4 '
        '3 5 6 4 1 5 3 4 2 0)'
    ),
    ('E6', 6): (
        '0 (2 4 3 5 4 6 2 5 4 3 1 0)^2 2 4 3 5 4 2 0'
    ),
    ('E7', 1): (
        '0'
    ),
    ('E7', 2): (
        '0 1 3 4 2 5 4 3 1 6 5 4 2 3 4 5 7 6 5 4 3 2 1 4 3 5 4 2 0 1 3 4 2 5 4 3 1 6 5 4 '
        '2 3 4 7 5 6 0 1 3 4 5 2 4 3 1 0'
    ),
    ('E7', 3): (
        '0 1 3 4 5 2 6 4 7 5 3 6 4 5 2 4 3 1 0'
    ),
    ('E7', 4): (
        '0 1 3 4 2 5 4 3 1 6 5 4 3 2 4 7 6 5 4 2 3 4 1 3 0 1 3 4 5 2 6 4 7 5 3 6 4 5 2 4 '
        '3 1 0'
    ),
    ('E7', 5): (
        '0 1 3 4 5 6 7 2 4 3 5 1 4 2 6 3 4 5 6 7 4 3 1 2 4 5 3 6 4 5 0 1 3 4 5 6 7 2 4 3 '
        '5 1 4 2 6 3 4 5 6 4 3 1 2 4 5 3 4 0 1 3 4 2 5 4 3 1 6 5 4 3 2 4 7 6 5 4 2 3 4 1 '
        '3 0 1 3 4 5 2 6 4 7 5 3 6 4 5 2 4 3 1 0'
    ),
    ('E7', 6): (
        '0 1 3 4 5 2 4 3 1 0'
    ),
    ('E7', 7): (
        '0 1 3 4 2 5 6 4 5 3 4 1 2 3 4 5 6 0 1 3 4 5 2 4 3 1 0'
    ),
    ('E8', 1): (
        '0 8 7 6 5 4 3 2 4 5 6 7 8 0'
    ),
    ('E8', 2): (
        '0 8 7 6 5 4 2 3 4 5 6 7 8 1 3 4 5 2 6 4 7 5 3 6 4 5 2 4 3 1 0 8 7 6 5 4 3 2 4 5 '
        '6 7 8 0'
    ),
    ('E8', 3): (
        '0 8 7 6 5 4 3 1 2 4 3 5 4 2 6 5 4 3 1 7 6 5 4 2 3 4 5 8 7 6 5 4 3 2 1 4 3 5 4 2 '
        '0 8 7 6 5 4 2 3 4 5 6 7 8 1 3 4 5 2 6 4 7 5 3 6 4 5 2 4 3 1 0 8 7 6 5 4 3 2 4 5 '
        '6 7 8 0'
    ),
    ('E8', 4): (
        '0 8 7 6 5 4 3 2 4 5 6 7 8 1 3 4 2 5 4 3 1 6 5 4 3 2 4 5 6 7 8 6 5 4 2 3 4 5 6 7 '
        '1 3 4 5 2 6 4 5 0 8 7 6 5 4 2 3 4 1 3 5 6 7 8 4 5 6 7 2 4 3 5 1 4 2 6 3 4 5 6 7 '
        '8 4 3 1 2 4 5 3 6 4 7 5 6 0 8 7 6 5 4 3 2 1 4 3 5 4 6 7 8 5 6 7 2 4 5 6 3 4 2 5 '
        '4 1 3 4 5 2 6 4 7 5 8 6 7 0 8 7 6 5 4 2 3 4 1 5 3 6 4 7 5 2 6 4 5 3 4 1 3 2 4 5 '
        '6 7 8 0'
    ),
    ('E8', 5): (
        '0 8 7 6 5 4 2 3 4 1 3 5 6 7 8 4 5 6 7 2 4 3 5 1 4 2 6 3 4 5 6 7 8 4 3 1 2 4 5 3 '
        '6 4 7 5 6 0 8 7 6 5 4 3 2 1 4 3 5 4 6 7 8 5 6 7 2 4 5 6 3 4 2 5 4 1 3 4 5 2 6 4 '
        '7 5 8 6 7 0 8 7 6 5 4 2 3 4 1 5 3 6 4 7 5 2 6 4 5 3 4 1 3 2 4 5 6 7 8 0'
    ),
    ('E8', 6): (
        '0 8 7 6 5 4 3 2 1 4 3 5 4 6 7 8 5 6 7 2 4 5 6 3 4 2 5 4 1 3 4 5 2 6 4 7 5 8 6 7 '
        '0 8 7 6 5 4 2 3 4 1 5 3 6 4 7 5 2 6 4 5 3 4 1 3 2 4 5 6 7 8 0'
    ),
    ('E8', 7): (
        '0 8 7 6 5 4 2 3 4 1 5 3 6 4 7 5 2 6 4 5 3 4 1 3 2 4 5 6 7 8 0'
    ),
    ('E8', 8): (
        '0'
    ),
    ('F4', 1): (
        '0'
    ),
    ('F4', 2): (
        '0 1 2 3 4 2 3 2 1 0'
    ),
    ('F4', 3): (
        '0 1 2 3 2 1 4 3 2 3 1 2 0 1 2 3 4 2 3 2 1 0'
    ),
    ('F4', 4): (
        '0 1 2 3 2 1 0'
    ),
    ('G2', 1): (
        '0 2 1 2 0'
    ),
    ('G2', 2): (
        '0'
    ),
}


def expand_notation(text: str) -> list:
    """Expand ``"0 (2 1 0)^2 1"`` into a flat list of generator indices."""
    tokens = re.findall(r"\(|\)\^\d+|\)|\d+", text)
    stack = [[]]
    for tok in tokens:
        if tok == "(":
            stack.append([])
        elif tok.startswith(")"):
            grp = stack.pop()
            rep = int(tok[2:]) if "^" in tok else 1
            stack[-1].extend(grp * rep)
        else:
            stack[-1].append(int(tok))
    if len(stack) != 1:
        raise ValueError(f"unbalanced notation {text!r}")
    return stack[0]


_EXCEPTIONAL_COROOTS = {
    ("E6", 1): (8, 6, 10, 12, 8, 4),
    ("E6", 2): (2, 4, 4, 6, 4, 2),
    ("E6", 3): (10, 12, 20, 24, 16, 8),
    ("E6", 4): (4, 6, 8, 12, 8, 4),
    ("E6", 5): (8, 12, 16, 24, 20, 10),
    ("E6", 6): (4, 6, 8, 12, 10, 8),
    ("E7", 1): (4, 4, 6, 8, 6, 4, 2),
    ("E7", 2): (8, 14, 16, 24, 18, 12, 6),
    ("E7", 3): (6, 8, 12, 16, 12, 8, 4),
    ("E7", 4): (8, 12, 16, 24, 18, 12, 6),
    ("E7", 5): (12, 18, 24, 36, 30, 20, 10),
    ("E7", 6): (4, 6, 8, 12, 10, 8, 4),
    ("E7", 7): (4, 6, 8, 12, 10, 8, 6),
    ("E8", 1): (8, 10, 14, 20, 16, 12, 8, 4),
    ("E8", 2): (10, 16, 20, 30, 24, 18, 12, 6),
    ("E8", 3): (14, 20, 28, 40, 32, 24, 16, 8),
    ("E8", 4): (20, 30, 40, 60, 48, 36, 24, 12),
    ("E8", 5): (16, 24, 32, 48, 40, 30, 20, 10),
    ("E8", 6): (12, 18, 24, 36, 30, 24, 16, 8),
    ("E8", 7): (8, 12, 16, 24, 20, 16, 12, 6),
    ("E8", 8): (4, 6, 8, 12, 10, 8, 6, 4),
    ("F4", 1): (2, 3, 4, 2),
    ("F4", 2): (3, 6, 8, 4),
    ("F4", 3): (4, 8, 12, 6),
    ("F4", 4): (2, 4, 6, 4),
    ("G2", 1): (2, 1),
    ("G2", 2): (1, F(2, 3)),
}


def _check_index(datum: RootSystemDatum, i: int):
    if not 1 <= i <= datum.rank:
        raise RootSystemError(f"index {i} out of range 1..{datum.rank} for {datum.label}")


def distinguished_coroot(datum: RootSystemDatum, i: int) -> tuple:
    """The i-th distinguished coroot for this type."""
    _check_index(datum, i)
    t, n = datum.type_label, datum.rank
    if t == "C":
        lam = [2 * j if j < i else 2 * i for j in range(1, n)] + [i]
    elif t == "B":
        if i == 1:
            lam = [2] * n
        elif i % 2 == 0:
            lam = [min(j, i) for j in range(1, n + 1)]
        else:
            lam = [2 * min(j, i) for j in range(1, n + 1)]
    elif t == "D":
        if i == 1:
            lam = [4] * (n - 2) + [2, 2]
        elif i <= n - 2 and i % 2 == 0:
            lam = [2 * min(j, i) for j in range(1, n - 1)] + [i, i]
        elif i <= n - 2:
            lam = [4 * min(j, i) for j in range(1, n - 1)] + [2 * i, 2 * i]
        elif n % 2 == 0:
            lam = [2 * j for j in range(1, n - 1)] + ([n, n - 2] if i == n - 1 else [n - 2, n])
        else:
            lam = [4 * j for j in range(1, n - 1)] + ([2 * n, 2 * n - 4] if i == n - 1 else [2 * n - 4, 2 * n])
    elif (t, i) in _EXCEPTIONAL_COROOTS:
        lam = list(_EXCEPTIONAL_COROOTS[(t, i)])
    else:
        raise RootSystemError(f"no distinguished coroots recorded for type {t}")
    return tuple(F(x) for x in lam)


def distinguished_tail(datum: RootSystemDatum, i: int) -> tuple:
    """The word following w_0^{W_{S minus s_i}} w_0 in the distinguished word."""
    _check_index(datum, i)
    t, n = datum.type_label, datum.rank
    if t == "C":
        return tuple(_tail_C(n, i))
    if t == "B":
        return tuple(_tail_B(n, i))
    if t == "D":
        return tuple(_tail_D(n, i))
    if (t, i) in _EXCEPTIONAL_TAILS:
        return tuple(expand_notation(_EXCEPTIONAL_TAILS[(t, i)]))
    raise RootSystemError(f"no distinguished words recorded for type {t}")


def distinguished_word(datum: RootSystemDatum, i: int) -> tuple:
    return quotient_word(datum, i) + distinguished_tail(datum, i)


def distinguished_translation(datum: RootSystemDatum, i: int):
    return translation(datum, distinguished_coroot(datum, i))


def _type_name(datum):
    return datum.type_label


def _reduced_check(datum, word, name="reduced") -> Check:
    bad = first_non_reduced(datum, word)
    if bad is None:
        return check(name, True, True, True)
    pos, root = bad
    return check(name, False, True, False,
                 f"suspected erratum: letter {pos} (s_{word[pos]}) sends its simple root to {root}")


def verify_translation_identity(datum: RootSystemDatum, i: int) -> CheckReport:
    """Reducedness, element equality and length equality for t_{lambda_i}."""
    rep = CheckReport("translation", _type_name(datum), datum.rank, i)
    lam = distinguished_coroot(datum, i)
    pairs = [inner(datum, unit(datum.rank, j), lam) for j in range(datum.rank)]
    ok = pairs[i - 1] > 0 and all(p == 0 for j, p in enumerate(pairs) if j != i - 1)
    rep.add(check("distinguished", ok, f"positive at {i}, zero elsewhere", [str(p) for p in pairs]))
    word = distinguished_word(datum, i)
    rep.add(_reduced_check(datum, word))
    t = translation(datum, lam)
    g = evaluate(datum, word)
    rep.add(check("element", g == t, affine.to_text(t), affine.to_text(g)))
    lt = length(t)
    rep.add(check("length", len(word) == lt, lt, len(word)))
    return rep


# ------------------------------------------------------------------ counts

def count_minimal_formula(datum: RootSystemDatum) -> int:
    """|W| times the sum over maximal parabolics of 1/|W_{S minus s_i}|."""
    order = weyl_group_order(datum)
    total = F(0)
    for i in range(1, datum.rank + 1):
        total += F(order, weyl_group_order(datum, [j for j in range(1, datum.rank + 1) if j != i]))
    assert total.denominator == 1
    return int(total)


def _target_sets(datum, group):
    bases = {i: sorted(maximal_standard(datum, i)) for i in range(1, datum.rank + 1)}
    seen = {}
    for i, base in bases.items():
        for w in group:
            key = frozenset(w.apply_finite(r) for r in base)
            seen.setdefault(key, (w, i))
    return seen


def count_minimal_bruteforce(datum: RootSystemDatum, limit: int = 60000) -> int:
    """Number of distinct sets w(Phi+_{Delta minus beta_i, empty}) over w in W and i."""
    return len(_target_sets(datum, enumerate_finite_group(datum, limit)))


def enumerate_minimal_targets(datum: RootSystemDatum, limit: int = 60000) -> list:
    """One (u', i) per distinct target, u' the minimal coset representative."""
    out = {}
    for key, (w, i) in _target_sets(datum, enumerate_finite_group(datum, limit)).items():
        M = [j for j in range(1, datum.rank + 1) if j != i]
        u = coset_min_rep(w, M)
        out[key] = (u, i)
    return sorted(out.values(), key=lambda p: (p[1], len(reduced_word(p[0])), reduced_word(p[0])))


# ------------------------------------------------------------ period checks

def split_id(split) -> str:
    u, v = split
    return f"u={format_word(u)}|v={format_word(v)}"


def minimal_splits(datum: RootSystemDatum, i: int, exhaustive: bool = False) -> list:
    """All element-level splits of the quotient word, or just the two trivial ones."""
    x = quotient_word(datum, i)
    if exhaustive:
        return enumerate_splits(datum, x)
    return [((), x), (x, ())] if x else [((), ())]


def theorem_period(datum: RootSystemDatum, i: int, split) -> tuple:
    """The period v + tail + u for a split (u, v) of w_0^{W_{S minus s_i}} w_0."""
    u, v = tuple(split[0]), tuple(split[1])
    x = quotient_element(datum, i)
    if not is_reduced(datum, u + v) or evaluate(datum, u + v) != x:
        raise RootSystemError(f"({format_word(u)}; {format_word(v)}) is not a split of the quotient element")
    return v + distinguished_tail(datum, i) + u


def verify_minimal_instance(datum: RootSystemDatum, i: int, split, depth: int | None = None) -> CheckReport:
    """Checks (a)-(e) for one split, plus the additivity t = x . (x^{-1} t)."""
    K = default_depth() if depth is None else depth
    rep = CheckReport("theorem4", _type_name(datum), datum.rank, i, split_id(split))
    period = theorem_period(datum, i, split)
    u_el = evaluate(datum, split[0])
    t = distinguished_translation(datum, i)
    x = quotient_element(datum, i)

    rep.add(_reduced_check(datum, period, "a_reduced"))
    p = evaluate(datum, period)
    expect = multiply(multiply(inverse(u_el), t), u_el)
    rep.add(check("b_conjugate", p == expect, affine.to_text(expect), affine.to_text(p)))
    lens = []
    h = p
    for _ in range(K):
        lens.append(length(h))
        h = multiply(h, p)
    rep.add(check("c_straight", all(lens[k] == (k + 1) * lens[0] for k in range(K)),
                  [(k + 1) * lens[0] for k in range(K)], lens))

    target = frozenset(inverse(u_el).apply_finite(r) for r in maximal_standard(datum, i))
    bad, covered = None, set()
    h = p
    for k in range(1, K + 1):
        for alpha, (lo, hi) in inversion_intervals(h).items():
            covered.add(alpha)
            # the hat condition only depends on the lowest level
            if bad is None and not hat_contains(datum, (alpha, lo), target):
                bad = (k, alpha, lo)
        h = multiply(h, p)
    rep.add(check("d_in_hat_target", bad is None, "all finite parts in target",
                  None if bad is None else f"k={bad[0]} root={bad[1]} level={bad[2]}"))
    rep.add(check("d_covers_target", covered == target, len(target), len(covered)))
    rep.add(check("e_lengths", lens == [(k + 1) * len(period) for k in range(K)],
                  [(k + 1) * len(period) for k in range(K)], lens))
    lx, lt = length(x), length(t)
    rest = length(multiply(inverse(x), t))
    rep.add(check("x_additivity", lx + rest == lt, lt, lx + rest))
    return rep


def level_zero_part(g) -> frozenset:
    """Finite roots alpha with (alpha, 0) in the inversion set of g."""
    return frozenset(a for a, (lo, hi) in inversion_intervals(g).items() if lo == 0)


SCOPE_TYPES = (
    [("B", n) for n in range(2, 9)] + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(4, 9)] + [("E6", None), ("E7", None), ("E8", None), ("F4", None), ("G2", None)]
)


def scope_data():
    return [build(t, n) for t, n in SCOPE_TYPES]
