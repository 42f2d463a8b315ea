"""Finite crystallographic root systems in the simple-root basis.

Roots are integer tuples of coefficients with respect to the simple roots
``beta_1, ..., beta_n``.  Inner products come from a rational Gram matrix,
normalised so that the norms agree with the coordinate realisations used for
the affine computations (for instance in type C the short simple roots have
norm 1 and the long one norm 2).

Also contains a small classifier for Coxeter matrices (finite / affine /
other) together with the word-hyperbolicity test built on it.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Root = tuple  # tuple[int, ...] in the simple-root basis

TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}

F = Fraction


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class RootSystemDatum:
    type_label: str
    rank: int
    gram: tuple  # n x n tuple of Fractions
    positive_roots: tuple  # sorted by (height, coords)
    highest_root: Root
    simple_coroots: tuple = field(repr=False)

    @property
    def label(self) -> str:
        if self.type_label in _FIXED_RANK:
            return self.type_label
        return f"{self.type_label}{self.rank}"

    @property
    def roots(self) -> tuple:
        """All roots: positive ones followed by their negatives."""
        return self.positive_roots + tuple(neg(r) for r in self.positive_roots)

    @property
    def simple_roots(self) -> tuple:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    def cartan(self, i: int, j: int) -> int:
        """Cartan integer 2(b_i, b_j)/(b_j, b_j), zero-based indices."""
        c = 2 * self.gram[i][j] / self.gram[j][j]
        assert c.denominator == 1
        return int(c)

    def is_root(self, v) -> bool:
        return _root_set(self).__contains__(tuple(v))

    def is_positive(self, r) -> bool:
        return is_positive_vector(r)

    def __hash__(self):
        return hash((self.type_label, self.rank))

    def __eq__(self, other):
        if not isinstance(other, RootSystemDatum):
            return NotImplemented
        return (self.type_label, self.rank) == (other.type_label, other.rank)


def unit(n: int, i: int) -> Root:
    return tuple(1 if k == i else 0 for k in range(n))


def neg(v) -> tuple:
    return tuple(-x for x in v)


def height(v) -> int:
    return sum(v)


def is_positive_vector(v) -> bool:
    """True for a nonzero vector whose first nonzero entry is positive.

    For roots this is the usual positivity since coefficients share a sign.
    """
    for x in v:
        if x:
            return x > 0
    return False


# ---------------------------------------------------------------- Gram tables

def _gram_from_edges(n, norms, edges):
    g = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = F(norms[i])
    for (i, j), val in edges.items():
        g[i - 1][j - 1] = g[j - 1][i - 1] = F(val)
    return g


def _gram(type_label: str, n: int):
    if type_label == "A":
        return _gram_from_edges(n, [2] * n, {(i, i + 1): -1 for i in range(1, n)})
    if type_label == "B":
        # b_i = e_i - e_{i+1}, b_n = e_n
        norms = [2] * (n - 1) + [1]
        return _gram_from_edges(n, norms, {(i, i + 1): -1 for i in range(1, n)})
    if type_label == "C":
        # b_i = (e_i - e_{i+1})/sqrt2, b_n = sqrt2 e_n
        norms = [1] * (n - 1) + [2]
        edges = {(i, i + 1): F(-1, 2) for i in range(1, n - 1)}
        edges[(n - 1, n)] = -1
        return _gram_from_edges(n, norms, edges)
    if type_label == "D":
        edges = {(i, i + 1): F(-1, 2) for i in range(1, n - 1)}
        edges[(n - 2, n)] = F(-1, 2)
        return _gram_from_edges(n, [1] * n, edges)
    if type_label in ("E6", "E7", "E8"):
        pairs = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
        edges = {p: F(-1, 2) for p in pairs if max(p) <= n}
        return _gram_from_edges(n, [1] * n, edges)
    if type_label == "F4":
        return _gram_from_edges(4, [2, 2, 1, 1], {(1, 2): -1, (2, 3): -1, (3, 4): F(-1, 2)})
    if type_label == "G2":
        return _gram_from_edges(2, [2, 6], {(1, 2): -3})
    raise RootSystemError(f"unknown type {type_label!r}")


def normalize_type(type_label: str, rank: int | None = None) -> tuple[str, int]:
    """Validate a (type, rank) pair; accepts 'E6' or ('E', 6) style input."""
    t = str(type_label).strip().upper()
    if t in ("E", "F", "G") and rank is not None:
        t = f"{t}{rank}"
    if t in _FIXED_RANK:
        if rank is not None and rank != _FIXED_RANK[t]:
            raise RootSystemError(f"type {t} has rank {_FIXED_RANK[t]}, not {rank}")
        return t, _FIXED_RANK[t]
    if t not in _MIN_RANK:
        raise RootSystemError(f"unknown type {type_label!r}")
    if rank is None:
        raise RootSystemError(f"type {t} needs a rank")
    if not isinstance(rank, int) or rank < _MIN_RANK[t]:
        raise RootSystemError(f"rank {rank} invalid for type {t} (minimum {_MIN_RANK[t]})")
    return t, rank


@lru_cache(maxsize=None)
def build(type_label: str, rank: int | None = None) -> RootSystemDatum:
    """Build the root system datum for a finite type.

    >>> build("G2").highest_root
    (3, 2)
    >>> len(build("C", 3).positive_roots)
    9
    """
    t, n = normalize_type(type_label, rank)
    gram = _gram(t, n)
    cart = [[int(2 * gram[i][j] / gram[j][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and (2 * gram[i][j] / gram[j][j]).denominator != 1:
                raise RootSystemError("non-crystallographic Gram matrix")

    # breadth-first closure by root strings: for a positive root a and simple
    # root b_j, the b_j-string through a is a - p b_j, ..., a + q b_j with
    # p - q = <a, b_j^vee>, so a + b_j is a root iff q > 0.
    simple = [unit(n, i) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for a in layer:
            for j in range(n):
                pair = sum(a[k] * cart[k][j] for k in range(n))
                p = 0
                b = list(a)
                while True:
                    b[j] -= 1
                    if tuple(b) in found:
                        p += 1
                    else:
                        break
                q = p - pair
                if q > 0:
                    c = list(a)
                    c[j] += 1
                    c = tuple(c)
                    if c not in found:
                        found.add(c)
                        nxt.append(c)
        layer = nxt
    pos = tuple(sorted(found, key=lambda r: (height(r), r)))
    highest = pos[-1]
    coroots = tuple(tuple(F(2) * x / gram[i][i] for x in unit(n, i)) for i in range(n))
    return RootSystemDatum(t, n, tuple(tuple(row) for row in gram), pos, highest, coroots)


@lru_cache(maxsize=None)
def _root_set(datum: RootSystemDatum) -> frozenset:
    return frozenset(datum.roots)


@lru_cache(maxsize=None)
def root_index(datum: RootSystemDatum) -> dict:
    return {r: k for k, r in enumerate(datum.roots)}


def inner(datum: RootSystemDatum, a: Sequence, b: Sequence) -> Fraction:
    """Bilinear form a^T G b in the simple-root basis."""
    n = datum.rank
    if len(a) != n or len(b) != n:
        raise RootSystemError(f"vectors must have length {n}")
    g = datum.gram
    return sum((F(a[i]) * g[i][j] * b[j] for i in range(n) if a[i] for j in range(n) if b[j]), F(0))


def reflect(datum: RootSystemDatum, root: Sequence, v: Sequence) -> tuple:
    """Reflect v in the hyperplane orthogonal to root."""
    if not any(root):
        raise RootSystemError("cannot reflect in the zero vector")
    c = 2 * inner(datum, v, root) / inner(datum, root, root)
    out = tuple(F(x) - c * r for x, r in zip(v, root))
    if all(x.denominator == 1 for x in out):
        return tuple(int(x) for x in out)
    return out


def coroot(datum: RootSystemDatum, root: Sequence) -> tuple:
    """alpha^vee = 2 alpha / (alpha, alpha) as a rational vector."""
    nrm = inner(datum, root, root)
    return tuple(F(2) * x / nrm for x in root)


def gram_inverse(datum: RootSystemDatum) -> tuple:
    return _inverse(datum.gram)


def _inverse(m):
    n = len(m)
    a = [[F(x) for x in row] + [F(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


# ------------------------------------------------------- Coxeter matrices

INF = math.inf


def coxeter_matrix(datum: RootSystemDatum, affine: bool = False) -> tuple:
    """Coxeter matrix of W (or of the affine group, index 0 = s_{delta-rho}).

    For the finite group the indices are 0..n-1 standing for s_1..s_n; for
    the affine group they are 0..n with 0 the affine node.
    """
    n = datum.rank
    vecs = [unit(n, i) for i in range(n)]
    if affine:
        vecs = [neg(datum.highest_root)] + vecs
    k = len(vecs)
    m = [[1] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            a = 2 * inner(datum, vecs[i], vecs[j]) / inner(datum, vecs[j], vecs[j])
            b = 2 * inner(datum, vecs[j], vecs[i]) / inner(datum, vecs[i], vecs[i])
            m[i][j] = m[j][i] = {0: 2, 1: 3, 2: 4, 3: 6}.get(int(a * b), INF)
    return tuple(tuple(row) for row in m)


def _check_matrix(m):
    k = len(m)
    for i in range(k):
        if len(m[i]) != k:
            raise RootSystemError("Coxeter matrix must be square")
        if m[i][i] != 1:
            raise RootSystemError("Coxeter matrix must have 1 on the diagonal")
        for j in range(k):
            if i != j:
                x = m[i][j]
                if x != m[j][i]:
                    raise RootSystemError("Coxeter matrix must be symmetric")
                if not (x == INF or (isinstance(x, int) and x >= 2)):
                    raise RootSystemError(f"invalid order m({i},{j}) = {x!r}")


def _components(m, nodes):
    nodes = list(nodes)
    seen, comps = set(), []
    for s in nodes:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            a = stack.pop()
            comp.append(a)
            for b in nodes:
                if b not in seen and m[a][b] != 2:
                    seen.add(b)
                    stack.append(b)
        comps.append(sorted(comp))
    return comps


def classify_component(m, nodes) -> tuple[str, str]:
    """Classify a connected Coxeter graph on ``nodes``.

    Returns (kind, name) with kind in {'finite', 'affine', 'other'}.
    """
    nodes = list(nodes)
    k = len(nodes)
    if k == 1:
        return "finite", "A1"
    edges = {}
    for a, b in itertools.combinations(nodes, 2):
        if m[a][b] != 2:
            edges[(a, b)] = m[a][b]
    deg = {v: 0 for v in nodes}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    labels = sorted((x for x in edges.values() if x != 3), key=lambda x: (x == INF, x))
    if k == 2:
        x = next(iter(edges.values()))
        if x == INF:
            return "affine", "A~1"
        return "finite", {3: "A2", 4: "B2", 6: "G2"}.get(x, f"I2({x})")
    if len(edges) == k:  # single cycle
        if all(x == 3 for x in edges.values()) and all(d == 2 for d in deg.values()):
            return "affine", f"A~{k - 1}"
        return "other", ""
    if len(edges) != k - 1:
        return "other", ""
    if any(x == INF for x in edges.values()):
        return "other", ""

    def path_order():
        end = next(v for v in nodes if deg[v] == 1)
        order, prev = [end], None
        while len(order) < k:
            cur = order[-1]
            nb = [b for b in nodes if b != prev and b != cur and m[cur][b] != 2]
            prev = cur
            order.append(nb[0])
        return order

    def arms(center):
        return [_arm(m, nodes, center, b) for b in nodes if b != center and m[center][b] != 2]

    branch = [v for v in nodes if deg[v] >= 3]
    if not branch:
        order = path_order()
        seq = [m[order[t]][order[t + 1]] for t in range(k - 1)]
        if seq[0] != 3 and seq[-1] == 3:
            seq = seq[::-1]
        if labels == []:
            return "finite", f"A{k}"
        if labels == [4]:
            if seq[-1] == 4:
                return "finite", f"B{k}"
            if k == 4 and seq[1] == 4:
                return "finite", "F4"
            if k == 5 and seq in ([3, 3, 4, 3], [3, 4, 3, 3]):
                return "affine", "F~4"
            return "other", ""
        if labels == [4, 4] and seq[0] == 4 and seq[-1] == 4:
            return "affine", f"C~{k - 1}"
        if labels == [5]:
            if seq[-1] == 5 and k in (3, 4):
                return "finite", f"H{k}"
            return "other", ""
        if labels == [6] and k == 3 and seq[-1] == 6:
            return "affine", "G~2"
        return "other", ""
    if len(branch) == 1 and deg[branch[0]] == 3:
        c = branch[0]
        arm_list = arms(c)
        a = sorted(len(x) for x in arm_list)
        if labels == []:
            if a[0] == 1 and a[1] == 1:
                return "finite", f"D{k}"
            if a == [1, 2, 2]:
                return "finite", "E6"
            if a == [1, 2, 3]:
                return "finite", "E7"
            if a == [1, 2, 4]:
                return "finite", "E8"
            if a == [2, 2, 2]:
                return "affine", "E~6"
            if a == [1, 3, 3]:
                return "affine", "E~7"
            if a == [1, 2, 5]:
                return "affine", "E~8"
            return "other", ""
        if labels == [4]:
            # B~: fork at one end, the 4-bond is the outermost edge of the third arm
            (x, y), = [p for p, v in edges.items() if v == 4]
            for arm in arm_list:
                others = [len(o) for o in arm_list if o is not arm]
                if others == [1, 1] and {x, y} == {arm[-1], ([c] + arm)[-2]}:
                    return "affine", f"B~{k - 1}"
        return "other", ""
    if len(branch) == 1 and deg[branch[0]] == 4 and k == 5 and not labels:
        return "affine", "D~4"
    if len(branch) == 2 and not labels and all(deg[v] == 3 for v in branch):
        leaves = [v for v in nodes if deg[v] == 1]
        if len(leaves) == 4 and all(sum(1 for l in leaves if m[b][l] != 2) == 2 for b in branch):
            return "affine", f"D~{k - 1}"
    return "other", ""


def _arm(m, nodes, center, start):
    """Nodes along the arm leaving ``center`` through ``start``."""
    out, prev, cur = [start], center, start
    while True:
        nb = [c for c in nodes if c not in (prev, cur) and m[cur][c] != 2]
        if len(nb) != 1:
            return out
        prev, cur = cur, nb[0]
        out.append(cur)


def classify(m, nodes=None) -> list[tuple[str, str]]:
    """Classify every connected component of the induced Coxeter graph."""
    _check_matrix(m)
    if nodes is None:
        nodes = range(len(m))
    return [classify_component(m, c) for c in _components(m, nodes)]


def is_word_hyperbolic(m) -> bool:
    """No irreducible affine R of rank >= 3 and no R splitting into two
    infinite commuting factors."""
    _check_matrix(m)
    k = len(m)
    for size in range(2, k + 1):
        for r in itertools.combinations(range(k), size):
            comps = _components(m, r)
            kinds = [classify_component(m, c)[0] for c in comps]
            if len(comps) == 1 and kinds[0] == "affine" and size >= 3:
                return False
            if sum(1 for x in kinds if x != "finite") >= 2:
                return False
    return True


_EXC_ORDER = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12,
              "H3": 120, "H4": 14400}


def finite_component_order(name: str) -> int:
    if name in _EXC_ORDER:
        return _EXC_ORDER[name]
    if name.startswith("I2("):
        return 2 * int(name[3:-1])
    t, k = name[0], int(name[1:])
    if t == "A":
        return math.factorial(k + 1)
    if t == "B":
        return 2 ** k * math.factorial(k)
    if t == "D":
        return 2 ** (k - 1) * math.factorial(k)
    raise RootSystemError(f"unknown finite type {name}")


def coxeter_group_order(m, nodes=None) -> int:
    """|W_J| for J = nodes, from the classification table."""
    total = 1
    for kind, name in classify(m, nodes):
        if kind != "finite":
            raise RootSystemError("parabolic subgroup is infinite")
        total *= finite_component_order(name)
    return total


def weyl_group_order(datum: RootSystemDatum, J=None) -> int:
    """Order of the parabolic W_J, J a set of one-based simple indices."""
    m = coxeter_matrix(datum)
    nodes = range(datum.rank) if J is None else sorted(j - 1 for j in J)
    if not nodes:
        return 1
    return coxeter_group_order(m, nodes)
