# -*- coding: utf-8 -*-
"""Combinatorics of the simplex category.

Objects of Δ are the integers n standing for [n] = {0 < ... < n}; morphisms
are `MonotoneMap` values. Objects of the pointed simplex category Δ_* are
pairs (n, i) with 0 ≤ i ≤ n, and a morphism (n, i) → (m, j) is a
`PointedMap` wrapping a monotone φ with φ(i) ≤ j.
"""
from __future__ import annotations

import dataclasses
import itertools
import logging

from . import fincat
from .config import DEFAULT_DELTA_TRUNCATION, DEFAULT_EPSILON_BOUND
from .errors import ShapeError, TruncationError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class MonotoneMap:
    """A monotone map [n] → [m] given by its values."""
    n: int
    m: int
    values: tuple

    def __post_init__(self):
        if len(self.values) != self.n + 1:
            raise ShapeError('A map out of [{}] needs {} values.'.format(self.n, self.n + 1))
        if any(v < 0 or v > self.m for v in self.values):
            raise ShapeError('Values {} leave [{}].'.format(self.values, self.m))
        if any(a > b for (a, b) in zip(self.values, self.values[1:])):
            raise ShapeError('Values {} are not monotone.'.format(self.values))

    def __call__(self, i):
        return self.values[i]

    @property
    def is_lv(self):
        """Last-vertex map: φ(n) = m."""
        return self.values[-1] == self.m

    @property
    def is_iv(self):
        """Initial-vertex map: φ(0) = 0."""
        return self.values[0] == 0

    def after(self, other):
        """Return self∘other."""
        if other.m != self.n:
            raise ShapeError('Monotone maps are not composable.')
        return MonotoneMap(other.n, self.m, tuple(self.values[v] for v in other.values))

    def restrict(self, i):
        """Values of the restriction to {0..i}."""
        return tuple(self.values[:i + 1])

    def __str__(self):
        return '[{}]->[{}]:{}'.format(self.n, self.m, ''.join(map(str, self.values)))


def identity(n):
    return MonotoneMap(n, n, tuple(range(n + 1)))


def coface(n, i):
    """δ^i: [n-1] → [n], the injection skipping i."""
    return MonotoneMap(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def codegeneracy(n, i):
    """σ^i: [n+1] → [n], the surjection hitting i twice."""
    return MonotoneMap(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def monotone_maps(n, m):
    """All monotone maps [n] → [m]; there are binomial(n+m+1, n+1)."""
    return [MonotoneMap(n, m, values)
            for values in itertools.combinations_with_replacement(range(m + 1), n + 1)]


def delta(N=DEFAULT_DELTA_TRUNCATION):
    """Δ^{≤N} as a FinCat with objects 0..N."""
    morphisms = [(phi, n, m) for n in range(N + 1) for m in range(N + 1)
                 for phi in monotone_maps(n, m)]
    return fincat.FinCat(range(N + 1), morphisms, {n: identity(n) for n in range(N + 1)},
                         lambda g, f: g.after(f), name='Delta<={}'.format(N))


@dataclasses.dataclass(frozen=True)
class PointedMap:
    """A morphism (n, i) → (m, j) of Δ_* lying over φ."""
    phi: MonotoneMap
    i: int
    j: int

    def __post_init__(self):
        if not (0 <= self.i <= self.phi.n and 0 <= self.j <= self.phi.m):
            raise ShapeError('Base points leave the simplices.')
        if self.phi(self.i) > self.j:
            raise ShapeError('{} does not satisfy phi(i) <= j.'.format(self))

    @property
    def source(self):
        return (self.phi.n, self.i)

    @property
    def target(self):
        return (self.phi.m, self.j)

    def after(self, other):
        return PointedMap(self.phi.after(other.phi), other.i, self.j)

    def __str__(self):
        return '{}@{}->{}'.format(self.phi, self.i, self.j)


def delta_star(N=DEFAULT_DELTA_TRUNCATION):
    """Δ_*^{≤N}: objects (n, i), morphisms monotone φ with φ(i) ≤ j."""
    objects = [(n, i) for n in range(N + 1) for i in range(n + 1)]
    morphisms = []
    for (n, i) in objects:
        for (m, j) in objects:
            for phi in monotone_maps(n, m):
                if phi(i) <= j:
                    morphisms.append((PointedMap(phi, i, j), (n, i), (m, j)))
    identities = {(n, i): PointedMap(identity(n), i, i) for (n, i) in objects}
    return fincat.FinCat(objects, morphisms, identities, lambda g, f: g.after(f),
                         name='Delta_*<={}'.format(N))


def pi(x):
    """π: Δ_* → Δ; (n, i) ↦ n and a pointed map to its underlying φ."""
    if isinstance(x, PointedMap):
        return x.phi
    n, i = x
    return n


def l(x):
    """l: Δ → Δ_*; n ↦ (n, n) and φ ↦ φ, right adjoint to π."""
    if isinstance(x, MonotoneMap):
        return PointedMap(x, x.n, x.m)
    return (x, x)


def lam(x):
    """λ: Δ_* → Δ; (n, i) ↦ i and φ ↦ φ restricted to {0..i}, right adjoint to l."""
    if isinstance(x, PointedMap):
        return MonotoneMap(x.i, x.j, x.phi.restrict(x.i))
    n, i = x
    return i


def pi_l_bijection(n, i, m):
    """Hom_{Δ_*}((n, i), l(m)) → Hom_Δ(n, m), given by π."""
    return {PointedMap(phi, i, m): pi(PointedMap(phi, i, m)) for phi in monotone_maps(n, m)}


def l_lam_bijection(n, m, i):
    """Hom_{Δ_*}(l(n), (m, i)) → Hom_Δ(n, λ(m, i)), given by λ."""
    result = {}
    for phi in monotone_maps(n, m):
        if phi(n) <= i:
            p = PointedMap(phi, n, i)
            result[p] = lam(p)
    return result


def unit_pi_l(n, i):
    """Unit (n, i) → l π (n, i) = (n, n) of π ⊣ l."""
    return PointedMap(identity(n), i, n)


def counit_pi_l(n):
    """Counit π l (n) = n → n of π ⊣ l (an identity)."""
    return identity(n)


def unit_l_lam(n):
    """Unit n → λ l (n) = n of l ⊣ λ (an identity)."""
    return identity(n)


def counit_l_lam(n, i):
    """Counit l λ (n, i) = (i, i) → (n, i): the inclusion {0..i} ⊆ [n]."""
    return PointedMap(MonotoneMap(i, n, tuple(range(i + 1))), i, i)


def is_cocartesian(p):
    """A pointed map over φ is π-cocartesian when it is (n, i) → (m, φ(i))."""
    return p.j == p.phi(p.i)


def has_cocartesian_factorization(p, N=DEFAULT_DELTA_TRUNCATION):
    """Search Δ_*^{≤N} for the π-cocartesian factorization property of p.

    For every g out of the source of p and every ψ with π(g) = ψ∘π(p), there
    must be exactly one h over ψ with h∘p = g.
    """
    ds = delta_star(N)
    x, y = p.source, p.target
    for z in ds.objects:
        for g in ds.hom(x, z):
            for psi in monotone_maps(y[0], z[0]):
                if psi.after(p.phi) != g.phi:
                    continue
                lifts = [h for h in ds.hom(y, z) if h.phi == psi and h.after(p) == g]
                if len(lifts) != 1:
                    return False
    return True


def rev(phi):
    """rev(φ)(i) = m − φ(n − i); an involution exchanging LV and IV maps."""
    return MonotoneMap(phi.n, phi.m, tuple(phi.m - phi(phi.n - i) for i in range(phi.n + 1)))


def epsilon(x, bound=DEFAULT_EPSILON_BOUND):
    """ε: Δ → Δ, [n] ↦ [n]^op ⋆ [n] = [2n+1].

    On φ: [n] → [m], ε(φ)(i) = m − φ(n − i) for i ≤ n and
    ε(φ)(n + 1 + j) = m + 1 + φ(j).

    Raises:
        TruncationError: if the output dimension exceeds `bound`
    """
    if isinstance(x, MonotoneMap):
        n, m = x.n, x.m
        if 2 * m + 1 > bound:
            raise TruncationError('epsilon of a map into [{}] exceeds [{}].'.format(m, bound))
        values = tuple(m - x(n - i) for i in range(n + 1)) + tuple(m + 1 + x(j) for j in range(n + 1))
        return MonotoneMap(2 * n + 1, 2 * m + 1, values)
    if 2 * x + 1 > bound:
        raise TruncationError('epsilon([{}]) exceeds [{}].'.format(x, bound))
    return 2 * x + 1


def iota(n):
    """ι_n: [n] → [2n+1], j ↦ n + 1 + j (the second join factor)."""
    return MonotoneMap(n, 2 * n + 1, tuple(n + 1 + j for j in range(n + 1)))


def rho(n):
    """ρ_n: [n] → [2n+1] in the rev coordinate, k ↦ k (the first join factor)."""
    return MonotoneMap(n, 2 * n + 1, tuple(range(n + 1)))
