"""Closed and biclosed sets of finite roots, atoms, hats and the dot action.

Closure follows the definition literally: Gamma is closed when every root
that is a nonnegative rational combination of two members of Gamma lies in
Gamma.  The cones {k1 a + k2 b : k1, k2 >= 0} intersected with the root
system are precomputed per datum, and sets are handled internally as
bitmasks over the root list of the datum.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .affine import AffineElement, AffineRoot, act, inversion_set
from .rootsys import RootSystemDatum, inner, is_positive_vector, root_index


class BiclosedError(ValueError):
    pass


def _solve_cone(a, b, g):
    """Return True if g = k1 a + k2 b with rational k1, k2 >= 0."""
    n = len(a)
    # find two coordinates with a nonzero 2x2 minor
    for p in range(n):
        for q in range(p + 1, n):
            det = a[p] * b[q] - a[q] * b[p]
            if det:
                k1 = Fraction(g[p] * b[q] - g[q] * b[p], det)
                k2 = Fraction(a[p] * g[q] - a[q] * g[p], det)
                if k1 < 0 or k2 < 0:
                    return False
                return all(k1 * a[t] + k2 * b[t] == g[t] for t in range(n))
    # a and b parallel (roots are never zero)
    p = next(t for t in range(n) if a[t])
    if any(a[t] * g[p] != g[t] * a[p] for t in range(n)):
        return False
    ratio_g = Fraction(g[p], a[p])
    ratio_b = Fraction(b[p], a[p])
    return ratio_g > 0 or ratio_b < 0 and ratio_g < 0


@lru_cache(maxsize=None)
def cone_masks(datum: RootSystemDatum) -> tuple:
    """cone[x][y] = bitmask of roots in the cone spanned by roots x and y."""
    roots = datum.roots
    N = len(roots)
    cone = [[0] * N for _ in range(N)]
    for x in range(N):
        for y in range(x, N):
            m = 0
            for z in range(N):
                if _solve_cone(roots[x], roots[y], roots[z]):
                    m |= 1 << z
            cone[x][y] = cone[y][x] = m
    return tuple(tuple(row) for row in cone)


def to_mask(datum: RootSystemDatum, gamma: Iterable) -> int:
    idx = root_index(datum)
    m = 0
    for r in gamma:
        r = tuple(r)
        if r not in idx:
            raise BiclosedError(f"{r} is not a root of {datum.label}")
        m |= 1 << idx[r]
    return m


def from_mask(datum: RootSystemDatum, mask: int) -> frozenset:
    roots = datum.roots
    return frozenset(roots[k] for k in range(len(roots)) if mask >> k & 1)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def closed_mask(datum: RootSystemDatum, mask: int) -> bool:
    cone = cone_masks(datum)
    members = list(_bits(mask))
    for a_pos, x in enumerate(members):
        row = cone[x]
        for y in members[a_pos:]:
            if row[y] & ~mask:
                return False
    return True


def is_closed(datum: RootSystemDatum, gamma: Iterable) -> bool:
    return closed_mask(datum, to_mask(datum, gamma))


def is_biclosed(datum: RootSystemDatum, gamma: Iterable, ambient: Iterable | None = None) -> bool:
    g = to_mask(datum, gamma)
    amb = (1 << len(datum.roots)) - 1 if ambient is None else to_mask(datum, ambient)
    if g & ~amb:
        raise BiclosedError("set is not contained in the ambient set")
    return closed_mask(datum, g) and closed_mask(datum, amb & ~g)


def canonical(gamma: Iterable) -> list:
    """Sorted list form used for serialisation and comparisons."""
    return sorted(tuple(r) for r in gamma)


# ------------------------------------------------------------ standard sets

@dataclass(frozen=True)
class BiclosedDescriptor:
    w: AffineElement
    M1: frozenset
    M2: frozenset = frozenset()


def subsystem(datum: RootSystemDatum, M: Iterable[int]) -> frozenset:
    """Roots (both signs) supported on the simple roots indexed by M (1-based)."""
    M = {m - 1 for m in M}
    return frozenset(r for r in datum.roots if all(r[k] == 0 for k in range(datum.rank) if k not in M))


def standard_set(datum: RootSystemDatum, descriptor: BiclosedDescriptor) -> frozenset:
    """w((Phi+ minus Phi_M1) union Phi_M2)."""
    M1, M2 = set(descriptor.M1), set(descriptor.M2)
    if M1 & M2:
        raise BiclosedError("M1 and M2 must be disjoint")
    n = datum.rank
    for a in M1:
        for b in M2:
            e_a = tuple(int(k == a - 1) for k in range(n))
            e_b = tuple(int(k == b - 1) for k in range(n))
            if inner(datum, e_a, e_b) != 0:
                raise BiclosedError("M1 and M2 must be orthogonal")
    w = descriptor.w
    if not w.is_finite():
        raise BiclosedError("descriptor element must lie in the finite Weyl group")
    base = (frozenset(datum.positive_roots) - subsystem(datum, M1)) | subsystem(datum, M2)
    return frozenset(w.apply_finite(r) for r in base)


def maximal_standard(datum: RootSystemDatum, i: int) -> frozenset:
    """Phi+_{Delta minus beta_i, empty}: positive roots with beta_i in their support."""
    return frozenset(r for r in datum.positive_roots if r[i - 1] != 0)


# ------------------------------------------------------ biclosed enumeration

def _biclosed_search(datum: RootSystemDatum, allowed: int):
    """Yield every mask B inside ``allowed`` with B and Phi - B closed."""
    cone = cone_masks(datum)
    N = len(datum.roots)
    full = (1 << N) - 1
    order = list(range(N))

    def propagate(inn, out):
        changed = True
        while changed:
            changed = False
            if inn & out:
                return None
            for x in _bits(inn):
                row = cone[x]
                for y in _bits(inn):
                    extra = row[y] & ~inn
                    if extra:
                        inn |= extra
                        changed = True
            for x in _bits(out):
                row = cone[x]
                for y in _bits(out):
                    extra = row[y] & ~out
                    if extra:
                        out |= extra
                        changed = True
        if inn & out:
            return None
        return inn, out

    def rec(inn, out, k):
        st = propagate(inn, out)
        if st is None:
            return
        inn, out = st
        while k < N and ((inn | out) >> order[k]) & 1:
            k += 1
        if k == N:
            yield inn
            return
        bit = 1 << order[k]
        if allowed & bit:
            yield from rec(inn | bit, out, k + 1)
        yield from rec(inn, out | bit, k + 1)

    yield from rec(0, full & ~allowed, 0)


def biclosed_sets(datum: RootSystemDatum, within: Iterable | None = None) -> list:
    """All subsets B of ``within`` (default: Phi) that are biclosed in Phi."""
    allowed = (1 << len(datum.roots)) - 1 if within is None else to_mask(datum, within)
    return sorted(set(_biclosed_search(datum, allowed)))


def atoms(datum: RootSystemDatum) -> list:
    """Minimal nonempty biclosed subsets of Phi, as frozensets."""
    masks = [m for m in biclosed_sets(datum) if m]
    out = []
    for m in masks:
        if not any(o != m and o & ~m == 0 for o in masks):
            out.append(from_mask(datum, m))
    return out


def is_atom(datum: RootSystemDatum, gamma: Iterable) -> bool:
    gamma = frozenset(tuple(r) for r in gamma)
    if not is_biclosed(datum, gamma):
        raise BiclosedError("is_atom expects a set biclosed in Phi")
    if not gamma:
        return False
    full = to_mask(datum, gamma)
    return all(m in (0, full) for m in _biclosed_search(datum, full))


# ------------------------------------------------------------ hats and dots

def hat_contains(datum: RootSystemDatum, r, lam: Iterable) -> bool:
    """Membership in the hat of lam; the sign is judged against the standard Phi+."""
    alpha, m = tuple(r[0]), r[1]
    if not datum.is_root(alpha):
        raise BiclosedError(f"{alpha} is not a root of {datum.label}")
    if alpha not in frozenset(tuple(x) for x in lam):
        return False
    return m >= 0 if is_positive_vector(alpha) else m >= 1


def dot_action(g: AffineElement, B: Iterable) -> frozenset:
    """(N(g) minus g(-B)) union (g(B) minus -N(g))."""
    B = [AffineRoot(tuple(b[0]), b[1]) for b in B]
    N = inversion_set(g)
    gB = frozenset(act(g, b) for b in B)
    g_negB = frozenset(act(g, -b) for b in B)
    negN = frozenset(-x for x in N)
    return (N - g_negB) | (gB - negN)
