"""Words in the generators s_0, ..., s_n of the affine Weyl group.

A word is a tuple of generator indices; index 0 is s_{delta-rho}.  Products
are read left to right.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .affine import (
    AffineElement,
    act,
    identity,
    inverse,
    length,
    multiply,
    simple_affine_root,
    simple_reflection,
)
from .rootsys import RootSystemDatum, RootSystemError, coxeter_matrix, is_positive_vector, unit

Word = tuple


class WordError(ValueError):
    pass


def parse_word(text: str) -> Word:
    """Parse ``"0,2,1"`` (spaces allowed, empty string = empty word)."""
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(" ", ",").split(",") if tok != "")
    except ValueError as exc:
        raise WordError(f"cannot parse word {text!r}") from exc


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


def check_word(datum: RootSystemDatum, word: Sequence[int]) -> Word:
    word = tuple(word)
    for x in word:
        if not (isinstance(x, int) and 0 <= x <= datum.rank):
            raise WordError(f"letter {x!r} out of range 0..{datum.rank}")
    return word


def evaluate(datum: RootSystemDatum, word: Sequence[int]) -> AffineElement:
    g = identity(datum)
    for x in check_word(datum, word):
        g = multiply(g, simple_reflection(datum, x))
    return g


def first_non_reduced(datum: RootSystemDatum, word: Sequence[int]):
    """Return (position, root) for the first letter breaking reducedness.

    The root is the image of the letter's simple root under the prefix
    before it, which is negative exactly when the word stops being reduced.
    Returns None for reduced words.
    """
    g = identity(datum)
    for pos, x in enumerate(check_word(datum, word)):
        r = act(g, simple_affine_root(datum, x))
        if not r.is_positive():
            return pos, r
        g = multiply(g, simple_reflection(datum, x))
    return None


def is_reduced(datum: RootSystemDatum, word: Sequence[int]) -> bool:
    return first_non_reduced(datum, word) is None


def is_left_descent(g: AffineElement, i: int) -> bool:
    """l(s_i g) < l(g), i.e. g^{-1}(alpha_i) < 0."""
    return not act(inverse(g), simple_affine_root(g.datum, i)).is_positive()


def is_right_descent(g: AffineElement, i: int) -> bool:
    """l(g s_i) < l(g), i.e. g(alpha_i) < 0."""
    return not act(g, simple_affine_root(g.datum, i)).is_positive()


def reduced_word(g: AffineElement) -> Word:
    """Canonical reduced word: repeatedly peel the smallest left descent."""
    datum = g.datum
    out = []
    while True:
        ginv = inverse(g)
        for i in range(datum.rank + 1):
            if not act(ginv, simple_affine_root(datum, i)).is_positive():
                out.append(i)
                g = multiply(simple_reflection(datum, i), g)
                break
        else:
            return tuple(out)


def _check_finite_subset(datum, J):
    J = sorted(set(J))
    for j in J:
        if not 1 <= j <= datum.rank:
            raise WordError(f"parabolic index {j} must lie in 1..{datum.rank}")
    return J


def longest_element(datum: RootSystemDatum, J: Iterable[int]) -> Word:
    """Reduced word of the longest element of the finite parabolic W_J.

    Greedy: append the smallest j in J that lengthens, until none does.
    """
    J = _check_finite_subset(datum, J)
    g = identity(datum)
    out = []
    while True:
        for j in J:
            # g s_j is longer iff g(beta_j) > 0
            if is_positive_vector(g.apply_finite(unit(datum.rank, j - 1))):
                out.append(j)
                g = multiply(g, simple_reflection(datum, j))
                break
        else:
            return tuple(out)


def quotient_element(datum: RootSystemDatum, i: int) -> AffineElement:
    """w_0^{W_{S minus s_i}} w_0."""
    if not 1 <= i <= datum.rank:
        raise WordError(f"index {i} out of range 1..{datum.rank}")
    rest = [j for j in range(1, datum.rank + 1) if j != i]
    w0 = evaluate(datum, longest_element(datum, range(1, datum.rank + 1)))
    return multiply(evaluate(datum, longest_element(datum, rest)), w0)


def quotient_word(datum: RootSystemDatum, i: int) -> Word:
    return reduced_word(quotient_element(datum, i))


def coset_min_rep(w: AffineElement, J: Iterable[int]) -> AffineElement:
    """Minimal length representative u of w W_J, by right-peeling descents in J."""
    if not w.is_finite():
        raise WordError("coset_min_rep expects a finite Weyl group element")
    J = _check_finite_subset(w.datum, J)
    datum = w.datum
    while True:
        for j in J:
            if not is_positive_vector(w.apply_finite(unit(datum.rank, j - 1))):
                w = multiply(w, simple_reflection(datum, j))
                break
        else:
            return w


def prefix_elements(target: AffineElement) -> list:
    """All u with l(u) + l(u^{-1} target) = l(target), by weak-order search."""
    datum = target.datum
    start = identity(datum)
    seen = {start: None}
    order = [start]
    queue = deque([(start, target)])
    while queue:
        u, rest = queue.popleft()
        rinv = inverse(rest)
        for s in range(datum.rank + 1):
            # s is a left descent of rest = u^{-1} target
            if not act(rinv, simple_affine_root(datum, s)).is_positive():
                nu = multiply(u, simple_reflection(datum, s))
                if nu not in seen:
                    seen[nu] = None
                    order.append(nu)
                    queue.append((nu, multiply(simple_reflection(datum, s), rest)))
    return order


def enumerate_splits(datum: RootSystemDatum, word: Sequence[int]) -> list:
    """All element-level splits (u, v) of a reduced word, as canonical words.

    Sorted by (len(u), u).
    """
    word = check_word(datum, word)
    if not is_reduced(datum, word):
        raise WordError("enumerate_splits needs a reduced word")
    target = evaluate(datum, word)
    out = []
    for u in prefix_elements(target):
        v = multiply(inverse(u), target)
        out.append((reduced_word(u), reduced_word(v)))
    out.sort(key=lambda p: (len(p[0]), p[0]))
    return out


def affine_coxeter_matrix(datum: RootSystemDatum) -> tuple:
    return coxeter_matrix(datum, affine=True)


def commutation_class(datum: RootSystemDatum, word: Sequence[int]) -> set:
    m = affine_coxeter_matrix(datum)
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for k in range(len(w) - 1):
            a, b = w[k], w[k + 1]
            if a != b and m[a][b] == 2:
                nw = w[:k] + (b, a) + w[k + 2:]
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
    return seen


def _has_braid_factor(w, m) -> bool:
    for k in range(len(w) - 1):
        a, b = w[k], w[k + 1]
        if a == b:
            continue
        mm = m[a][b]
        if mm < 3 or mm == float("inf"):
            continue
        if k + mm <= len(w) and all(w[k + t] == (a if t % 2 == 0 else b) for t in range(mm)):
            return True
    return False


def is_fully_commutative(datum: RootSystemDatum, word: Sequence[int]) -> bool:
    word = check_word(datum, word)
    if not is_reduced(datum, word):
        raise WordError("is_fully_commutative needs a reduced word")
    m = affine_coxeter_matrix(datum)
    return not any(_has_braid_factor(w, m) for w in commutation_class(datum, word))


def enumerate_finite_group(datum: RootSystemDatum, limit: int = 60000) -> list:
    """All elements of the finite Weyl group W by breadth-first search."""
    start = identity(datum)
    seen = {start}
    order = [start]
    queue = deque([start])
    gens = [simple_reflection(datum, i) for i in range(1, datum.rank + 1)]
    while queue:
        g = queue.popleft()
        for s in gens:
            h = multiply(g, s)
            if h not in seen:
                seen.add(h)
                order.append(h)
                if len(order) > limit:
                    raise RootSystemError(f"group of {datum.label} exceeds limit {limit}")
                queue.append(h)
    return order


__all__ = [
    "Word", "WordError", "parse_word", "format_word", "evaluate", "is_reduced",
    "first_non_reduced", "reduced_word", "longest_element", "quotient_word",
    "quotient_element", "coset_min_rep", "enumerate_splits", "prefix_elements",
    "is_fully_commutative", "commutation_class", "is_left_descent",
    "is_right_descent", "enumerate_finite_group", "length",
]
