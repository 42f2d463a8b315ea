"""Affine Weyl group elements in normal form.

An element g acts on V' = V + R delta by

    g(v) = A v + (v, mu) delta,      g(delta) = delta,

where A is a finite Weyl group element and mu a translation vector.  We keep
A as the integer matrix of images of the simple roots (columns) together with
its inverse, and instead of mu we store the integer pairings p_j = (beta_j, mu).
In these terms

    (g h) = (A B, B^T p_g + p_h),     g^{-1} = (A^{-1}, -(A^{-1})^T p_g),

and an affine root (alpha, m) is sent to (A alpha, m + alpha . p).  The
rational vector mu itself is recovered as G^{-1} p with G the Gram matrix.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .rootsys import (
    RootSystemDatum,
    RootSystemError,
    gram_inverse,
    inner,
    is_positive_vector,
    neg,
    unit,
)


class AffineRoot(NamedTuple):
    finite: tuple
    level: int

    def is_positive(self) -> bool:
        return self.level > 0 or (self.level == 0 and is_positive_vector(self.finite))

    def __neg__(self):
        return AffineRoot(neg(self.finite), -self.level)

    def __str__(self):
        return f"({','.join(map(str, self.finite))};{self.level})"


def _matvec(cols, v):
    n = len(cols)
    out = [0] * n
    for j, x in enumerate(v):
        if x:
            c = cols[j]
            for k in range(n):
                out[k] += x * c[k]
    return tuple(out)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


class AffineElement:
    """Element of the affine Weyl group attached to a finite datum."""

    __slots__ = ("datum", "cols", "inv_cols", "pairing", "_hash")

    def __init__(self, datum: RootSystemDatum, cols, inv_cols, pairing):
        self.datum = datum
        self.cols = cols
        self.inv_cols = inv_cols
        self.pairing = pairing
        self._hash = None

    # normal form data
    @property
    def finite_part(self) -> tuple:
        """Images of the simple roots under the finite component."""
        return self.cols

    @property
    def trans(self) -> tuple:
        """The translation vector mu in the simple-root basis (rational)."""
        ginv = gram_inverse(self.datum)
        n = self.datum.rank
        return tuple(sum((ginv[i][j] * self.pairing[j] for j in range(n)), Fraction(0)) for i in range(n))

    def is_finite(self) -> bool:
        return not any(self.pairing)

    def is_translation(self) -> bool:
        return self.cols == identity(self.datum).cols

    def key(self):
        return (self.datum.type_label, self.datum.rank, self.cols, self.pairing)

    def __eq__(self, other):
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, k: int):
        return power(self, k)

    def __repr__(self):
        return f"AffineElement<{self.datum.label}>{to_text(self)}"

    def apply_finite(self, v) -> tuple:
        return _matvec(self.cols, v)

    def __call__(self, r):
        return act(self, r)


def to_text(g: AffineElement) -> str:
    """Canonical text form ``(matrix cols | trans)`` with exact p/q entries."""
    cols = " ".join("[" + ",".join(map(str, c)) + "]" for c in g.cols)
    tr = ",".join(str(x) for x in g.trans)
    return f"({cols} | {tr})"


@lru_cache(maxsize=None)
def identity(datum: RootSystemDatum) -> AffineElement:
    n = datum.rank
    cols = tuple(unit(n, j) for j in range(n))
    return AffineElement(datum, cols, cols, (0,) * n)


@lru_cache(maxsize=None)
def simple_reflection(datum: RootSystemDatum, i: int) -> AffineElement:
    """s_i for 1 <= i <= n, and s_{delta - rho} for i = 0."""
    n = datum.rank
    if not 0 <= i <= n:
        raise RootSystemError(f"generator index {i} out of range 0..{n}")
    if i == 0:
        rho = datum.highest_root
        rr = inner(datum, rho, rho)
        cols, pairing = [], []
        for j in range(n):
            c = 2 * inner(datum, unit(n, j), rho) / rr
            assert c.denominator == 1
            c = int(c)
            cols.append(tuple(int(j == k) - c * rho[k] for k in range(n)))
            pairing.append(c)
        cols = tuple(cols)
        return AffineElement(datum, cols, cols, tuple(pairing))
    cols = []
    for j in range(n):
        col = [int(j == k) for k in range(n)]
        col[i - 1] -= datum.cartan(j, i - 1)
        cols.append(tuple(col))
    cols = tuple(cols)
    return AffineElement(datum, cols, cols, (0,) * n)


def simple_affine_root(datum: RootSystemDatum, i: int) -> AffineRoot:
    if i == 0:
        return AffineRoot(neg(datum.highest_root), 1)
    return AffineRoot(unit(datum.rank, i - 1), 0)


def _check_same(g, h):
    if g.datum != h.datum:
        raise RootSystemError(f"datum mismatch: {g.datum.label} vs {h.datum.label}")


def multiply(g: AffineElement, h: AffineElement) -> AffineElement:
    _check_same(g, h)
    cols = tuple(_matvec(g.cols, c) for c in h.cols)
    inv_cols = tuple(_matvec(h.inv_cols, c) for c in g.inv_cols)
    pairing = tuple(_dot(c, g.pairing) + ph for c, ph in zip(h.cols, h.pairing))
    return AffineElement(g.datum, cols, inv_cols, pairing)


def inverse(g: AffineElement) -> AffineElement:
    pairing = tuple(-_dot(c, g.pairing) for c in g.inv_cols)
    return AffineElement(g.datum, g.inv_cols, g.cols, pairing)


def power(g: AffineElement, k: int) -> AffineElement:
    if k < 0:
        return power(inverse(g), -k)
    out, base = identity(g.datum), g
    while k:
        if k & 1:
            out = multiply(out, base)
        base = multiply(base, base)
        k >>= 1
    return out


def product(datum: RootSystemDatum, elements: Iterable[AffineElement]) -> AffineElement:
    out = identity(datum)
    for e in elements:
        out = multiply(out, e)
    return out


def act(g: AffineElement, r) -> AffineRoot:
    """Image of an affine root (or a pair (alpha, level)) under g."""
    alpha, level = tuple(r[0]), r[1]
    if not g.datum.is_root(alpha):
        raise RootSystemError(f"{alpha} is not a root of {g.datum.label}")
    return AffineRoot(_matvec(g.cols, alpha), level + _dot(alpha, g.pairing))


def act_vector(g: AffineElement, v, level=0) -> tuple:
    """Action on an arbitrary vector v + level*delta of V' (rational allowed)."""
    return _matvec(g.cols, v), level + _dot(v, g.pairing)


def translation(datum: RootSystemDatum, lam) -> AffineElement:
    """t_lam : v -> v + (v, lam) delta."""
    n = datum.rank
    if len(lam) != n:
        raise RootSystemError(f"translation vector must have length {n}")
    pairing = []
    for j in range(n):
        x = inner(datum, unit(n, j), lam)
        if x.denominator != 1:
            raise RootSystemError(f"(beta_{j + 1}, lambda) = {x} is not an integer")
        pairing.append(int(x))
    ident = identity(datum)
    return AffineElement(datum, ident.cols, ident.cols, tuple(pairing))


def inversion_intervals(g: AffineElement) -> dict:
    """Map each finite root alpha to the level range (lo, hi) such that
    (alpha, m) lies in the inversion set of g exactly when lo <= m <= hi.

    Only roots with a nonempty range are returned.  With g^{-1} = (A', p')
    the root (alpha, m) is an inversion iff m + alpha.p' < 0, or it equals 0
    and A' alpha is negative.
    """
    out = {}
    ginv_cols = g.inv_cols
    pinv = tuple(-_dot(c, g.pairing) for c in g.inv_cols)
    for alpha in g.datum.positive_roots:
        img = _matvec(ginv_cols, alpha)
        k = _dot(alpha, pinv)
        img_pos = is_positive_vector(img)
        # alpha positive: lo = 0
        hi = -k - (1 if img_pos else 0)
        if hi >= 0:
            out[alpha] = (0, hi)
        # -alpha: image -img, pairing -k, lo = 1
        hi = k - (0 if img_pos else 1)
        if hi >= 1:
            out[neg(alpha)] = (1, hi)
    return out


def inversion_set(g: AffineElement) -> frozenset:
    return frozenset(
        AffineRoot(a, m) for a, (lo, hi) in inversion_intervals(g).items() for m in range(lo, hi + 1)
    )


def length(g: AffineElement) -> int:
    return sum(hi - lo + 1 for lo, hi in inversion_intervals(g).values())


def is_straight_up_to(g: AffineElement, K: int) -> bool:
    if K < 1:
        raise ValueError("K must be at least 1")
    l1 = length(g)
    h = g
    for k in range(1, K + 1):
        if length(h) != k * l1:
            return False
        h = multiply(h, g)
    return True
