"""Independent constructions used as oracles by the test suite.

Roots are built in the usual orthonormal epsilon coordinates with sympy and
converted to simple root coordinates by exact linear solving.
"""
import itertools
import math

import numpy as np
import sympy as sp

half = sp.Rational(1, 2)


def _e(n, *pairs):
    v = [0] * n
    for k, c in pairs:
        v[k] = c
    return sp.Matrix(v)


def epsilon_data(type_label, n=None):
    """(simple roots, all roots) as sympy column vectors, Bourbaki numbering."""
    if type_label in ("B", "C", "D"):
        simple = [_e(n, (k, 1), (k + 1, -1)) for k in range(n - 1)]
        roots = []
        for i, j in itertools.combinations(range(n), 2):
            for a, b in itertools.product((1, -1), repeat=2):
                roots.append(_e(n, (i, a), (j, b)))
        if type_label == "B":
            simple.append(_e(n, (n - 1, 1)))
            roots += [_e(n, (i, s)) for i in range(n) for s in (1, -1)]
        elif type_label == "C":
            simple.append(_e(n, (n - 1, 2)))
            roots += [_e(n, (i, 2 * s)) for i in range(n) for s in (1, -1)]
        else:
            simple.append(_e(n, (n - 2, 1), (n - 1, 1)))
        return simple, roots
    if type_label == "G2":
        simple = [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
        roots = []
        for i, j in itertools.permutations(range(3), 2):
            roots.append(_e(3, (i, 1), (j, -1)))
        for i in range(3):
            o = [k for k in range(3) if k != i]
            for s in (1, -1):
                roots.append(_e(3, (i, 2 * s), (o[0], -s), (o[1], -s)))
        return simple, roots
    if type_label == "F4":
        simple = [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)),
                  sp.Matrix([half, -half, -half, -half])]
        roots = [_e(4, (i, s)) for i in range(4) for s in (1, -1)]
        for i, j in itertools.combinations(range(4), 2):
            for a, b in itertools.product((1, -1), repeat=2):
                roots.append(_e(4, (i, a), (j, b)))
        roots += [sp.Matrix([half * s for s in signs]) for signs in itertools.product((1, -1), repeat=4)]
        return simple, roots
    if type_label in ("E6", "E7", "E8"):
        simple = [sp.Matrix([half, -half, -half, -half, -half, -half, -half, half]),
                  _e(8, (0, 1), (1, 1))]
        simple += [_e(8, (k, -1), (k + 1, 1)) for k in range(6)]
        roots = []
        for i, j in itertools.combinations(range(8), 2):
            for a, b in itertools.product((1, -1), repeat=2):
                roots.append(_e(8, (i, a), (j, b)))
        for signs in itertools.product((1, -1), repeat=8):
            if signs.count(-1) % 2 == 0:
                roots.append(sp.Matrix([half * s for s in signs]))
        k = int(type_label[1])
        if k < 8:
            # E7, E6: roots in the span of the first k simple roots
            simple = simple[:k]
            roots = [r for r in roots if _in_span(simple, r)]
        return simple, roots
    raise ValueError(type_label)


def _in_span(simple, r):
    A = sp.Matrix.hstack(*simple)
    sol = A.solve_least_squares(r) if A.rows > A.cols else A.solve(r)
    return A * sol == r


def simple_coordinates(simple, roots):
    A = sp.Matrix.hstack(*simple)
    pinv = (A.T * A).inv() * A.T
    out = set()
    for r in roots:
        c = pinv * r
        assert A * c == r
        assert all(x.is_integer for x in c)
        out.add(tuple(int(x) for x in c))
    return out


def epsilon_gram(simple):
    return [[(a.T * b)[0] for b in simple] for a in simple]


def epsilon_reflect(simple, k, v_coords):
    """Reflect a vector given in simple coordinates, returning simple coordinates."""
    A = sp.Matrix.hstack(*simple)
    v = A * sp.Matrix(v_coords)
    a = simple[k]
    w = v - 2 * (a.T * v)[0] / (a.T * a)[0] * a
    pinv = (A.T * A).inv() * A.T
    return tuple(pinv * w)


def coxeter_form_kind(m):
    """Classify a connected Coxeter matrix by the spectrum of its cosine form."""
    k = len(m)
    B = np.empty((k, k))
    for i in range(k):
        for j in range(k):
            B[i, j] = -1.0 if m[i][j] == math.inf else -math.cos(math.pi / m[i][j])
    ev = np.sort(np.linalg.eigvalsh(B))
    if ev[0] > 1e-9:
        return "finite"
    if abs(ev[0]) <= 1e-9 and (k == 1 or ev[1] > 1e-9):
        return "affine"
    return "other"
