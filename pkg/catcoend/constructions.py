# -*- coding: utf-8 -*-
"""Categories built over a finite base category.

Twisted arrow categories, truncated categories of simplices with their
initial- and last-vertex functors, the comparison between simplices of
Tw^ℓ(C) and odd-dimensional simplices of C, and categories of elements of
Set-valued weights.
"""
from __future__ import annotations

import dataclasses
import logging

from . import fincat, simplicial
from .config import DEFAULT_BUDGET, DEFAULT_EPSILON_BOUND, DEFAULT_TRUNCATION
from .errors import BudgetExceeded, ConventionError, FunctorError, TruncationError

logger = logging.getLogger(__name__)

LEFT, RIGHT = 'left', 'right'
COVARIANT, CONTRAVARIANT = 'covariant', 'contravariant'


class TwCat(object):
    """A twisted arrow category together with its projection η.

    Carrier objects are the morphisms of the base. The left-handed carrier
    has a morphism (f, a, b, g): f → g for every a: x_g → x_f and
    b: y_f → y_g with b∘f∘a = g; the right-handed carrier is its opposite.
    """

    def __init__(self, base, handedness, carrier, eta):
        self.base = base
        self.handedness = handedness
        self.carrier = carrier
        self.eta = eta

    def __repr__(self):
        return '<TwCat {} of {!r}>'.format(self.handedness, self.base)


def _left_carrier(c):
    morphisms = []
    for f in c.morphisms:
        x, y = c.ends(f)
        for g in c.morphisms:
            x2, y2 = c.ends(g)
            for a in c.hom(x2, x):
                for b in c.hom(y, y2):
                    if c.comp(b, c.comp(f, a)) == g:
                        morphisms.append(((f, a, b, g), f, g))
    identities = {f: (f, c.identity(c.src(f)), c.identity(c.dst(f)), f) for f in c.morphisms}

    def compose(second, first):
        f, a1, b1, _ = first
        _, a2, b2, h = second
        return (f, c.comp(a1, a2), c.comp(b2, b1), h)
    return fincat.FinCat(c.morphisms, morphisms, identities, compose,
                         name='Tw^l({})'.format(c.name or '?'))


def twisted(c, handedness=LEFT):
    """Twisted arrow category of `c`.

    Args:
        c (FinCat): base category
        handedness (str): 'left' (η to C^op × C) or 'right' (η to C × C^op)

    Returns:
        TwCat: Tw^r is identifier-exactly the opposite of Tw^ℓ
    """
    if handedness not in (LEFT, RIGHT):
        raise ConventionError('Unknown handedness {!r}.'.format(handedness))
    left = _left_carrier(c)
    obmap = {f: c.ends(f) for f in c.morphisms}
    mormap = {m: (m[1], m[2]) for m in left.morphisms}
    if handedness == LEFT:
        eta = fincat.FinFunctor(left, fincat.product(fincat.opposite(c), c), obmap, mormap,
                                name='eta')
        return TwCat(c, LEFT, left, eta)
    right = fincat.opposite(left)
    right.name = 'Tw^r({})'.format(c.name or '?')
    eta = fincat.FinFunctor(right, fincat.product(c, fincat.opposite(c)), obmap, mormap,
                            name='eta')
    return TwCat(c, RIGHT, right, eta)


@dataclasses.dataclass(frozen=True)
class Simplex:
    """A functor [n] → C as its vertices and its n consecutive arrows."""
    vertices: tuple
    arrows: tuple

    @property
    def dim(self):
        return len(self.vertices) - 1

    def reversed(self):
        return Simplex(self.vertices[::-1], self.arrows[::-1])

    def __str__(self):
        if not self.arrows:
            return '<{}>'.format(self.vertices[0])
        return '<{}>'.format(','.join(map(str, self.arrows)))


@dataclasses.dataclass(frozen=True)
class SimplexMap:
    """A morphism α → β of simplices lying over φ, with β∘φ = α."""
    source: Simplex
    target: Simplex
    phi: simplicial.MonotoneMap


class SimplexCat(object):
    """The truncated category of simplices Δ_{/C}^{≤N}."""

    def __init__(self, base, N, carrier, edges):
        self.base = base
        self.N = N
        self.carrier = carrier
        self._edges = edges
        self._level = None

    def level_objects(self, n):
        return [a for a in self.carrier.objects if a.dim == n]

    def edge(self, alpha, i, j):
        """The base morphism α(i ≤ j)."""
        return self._edges[(alpha, i, j)]

    @property
    def level(self):
        """The functor to Δ^{≤N}: α ↦ dim α, a morphism to its φ."""
        if self._level is None:
            self._level = fincat.FinFunctor(
                self.carrier, simplicial.delta(self.N),
                {a: a.dim for a in self.carrier.objects},
                {m: m.phi for m in self.carrier.morphisms}, name='level')
        return self._level

    def __repr__(self):
        return '<SimplexCat {!r} N={}: {} objects>'.format(self.base, self.N, len(self.carrier.objects))


def simplices(c, N=DEFAULT_TRUNCATION, budget=DEFAULT_BUDGET):
    """Build Δ_{/C}^{≤N}, degenerate simplices included.

    Level-n objects are the functors [n] → C found by
    `functor_category_objects`; morphisms α → β are enumerated from the
    target: every φ: [n] → [dim β] determines α = β∘φ.

    Raises:
        BudgetExceeded: if enumeration or the morphism count exceeds `budget`
    """
    objects, edges = [], {}
    for n in range(N + 1):
        for functor in fincat.functor_category_objects(fincat.chain(n), c, budget=budget):
            alpha = Simplex(tuple(functor.ob(k) for k in range(n + 1)),
                            tuple(functor.mor((k, k + 1)) for k in range(n)))
            objects.append(alpha)
            for i in range(n + 1):
                for j in range(i, n + 1):
                    edges[(alpha, i, j)] = functor.mor((i, j))
    morphisms = []
    for beta in objects:
        for n in range(N + 1):
            for phi in simplicial.monotone_maps(n, beta.dim):
                alpha = Simplex(tuple(beta.vertices[phi(k)] for k in range(n + 1)),
                                tuple(edges[(beta, phi(k), phi(k + 1))] for k in range(n)))
                morphisms.append((SimplexMap(alpha, beta, phi), alpha, beta))
                if len(morphisms) > budget:
                    raise BudgetExceeded('Simplex category exceeds {} morphisms.'.format(budget))
    identities = {a: SimplexMap(a, a, simplicial.identity(a.dim)) for a in objects}

    def compose(g, f):
        return SimplexMap(f.source, g.target, g.phi.after(f.phi))
    carrier = fincat.FinCat(objects, morphisms, identities, compose,
                            name='Delta/{}<={}'.format(c.name or '?', N))
    logger.debug('simplices of %r up to %d: %d objects, %d morphisms',
                 c, N, len(objects), len(morphisms))
    return SimplexCat(c, N, carrier, edges)


def last_vertex(s):
    """α ↦ α(n); a morphism over φ goes to β(φ(n) ≤ m)."""
    return fincat.FinFunctor(
        s.carrier, s.base,
        {a: a.vertices[-1] for a in s.carrier.objects},
        {m: s.edge(m.target, m.phi(m.phi.n), m.target.dim) for m in s.carrier.morphisms},
        name='last_vertex')


def initial_vertex(s):
    """α ↦ α(0); a morphism over φ goes to β(0 ≤ φ(0)), read in C^op."""
    return fincat.FinFunctor(
        s.carrier, fincat.opposite(s.base),
        {a: a.vertices[0] for a in s.carrier.objects},
        {m: s.edge(m.target, 0, m.phi(0)) for m in s.carrier.morphisms},
        name='initial_vertex')


def simplex_endpoints(s):
    """The functor q: Δ_{/C} → C^op × C, pairing initial and last vertex."""
    q = fincat.pairing(initial_vertex(s), last_vertex(s))
    q.name = 'endpoints'
    return q


def _string_edge(c, alpha, p, q):
    if p == q:
        return c.identity(alpha.vertices[p])
    return c.compose_path(list(alpha.arrows[p:q]))


def twisted_to_string(c, beta):
    """Send β: [n] → Tw^ℓ(C) to the string [n]^op ⋆ [n] → C.

    Positions 0..n carry the sources x_n, ..., x_0 (first block reversed),
    positions n+1..2n+1 carry the targets y_0, ..., y_n.
    """
    n = beta.dim
    sources = [c.src(f) for f in beta.vertices]
    targets = [c.dst(f) for f in beta.vertices]
    a_parts = [arrow[1] for arrow in beta.arrows]
    b_parts = [arrow[2] for arrow in beta.arrows]
    vertices = tuple(sources[::-1]) + tuple(targets)
    arrows = tuple(a_parts[::-1]) + (beta.vertices[0],) + tuple(b_parts)
    assert len(vertices) == 2 * n + 2
    return Simplex(vertices, arrows)


def string_to_twisted(c, alpha):
    """Inverse of `twisted_to_string` on strings of odd length."""
    if alpha.dim % 2 == 0:
        raise FunctorError('Only odd-dimensional strings come from twisted arrows.')
    n = (alpha.dim - 1) // 2
    fs = [_string_edge(c, alpha, n - k, n + 1 + k) for k in range(n + 1)]
    arrows = tuple((fs[k], alpha.arrows[n - k - 1], alpha.arrows[n + 1 + k], fs[k + 1])
                   for k in range(n))
    return Simplex(tuple(fs), arrows)


def twisted_string_bijection(c, n, budget=DEFAULT_BUDGET):
    """Fun([n], Tw^ℓ(C)) → Fun([2n+1], C), checked to be a bijection.

    Returns:
        tuple: (mapping, ok) where ok is True iff the mapping is injective,
               lands in Fun([2n+1], C) and hits every element
    """
    tw = twisted(c, LEFT).carrier
    domain = fincat.functor_category_objects(fincat.chain(n), tw, budget=budget)
    codomain = fincat.functor_category_objects(fincat.chain(2 * n + 1), c, budget=budget)
    strings = {Simplex(tuple(f.ob(k) for k in range(2 * n + 2)),
                       tuple(f.mor((k, k + 1)) for k in range(2 * n + 1))) for f in codomain}
    mapping = {}
    for f in domain:
        beta = Simplex(tuple(f.ob(k) for k in range(n + 1)),
                       tuple(f.mor((k, k + 1)) for k in range(n)))
        mapping[beta] = twisted_to_string(c, beta)
    image = set(mapping.values())
    ok = (len(image) == len(mapping) and image <= strings and len(image) == len(strings)
          and all(string_to_twisted(c, s) == b for (b, s) in mapping.items()))
    return mapping, ok


def epsilon_compare(c, N=1, budget=DEFAULT_BUDGET, bound=DEFAULT_EPSILON_BOUND):
    """The functor Δ_{/Tw^ℓ(C)}^{≤N} → Δ_{/C}^{≤2N+1} induced by ε.

    Returns:
        tuple: (functor, s_tw, s_c, tw) with the functor on carriers and the
               categories it was built from

    Raises:
        TruncationError: if 2N+1 exceeds `bound`
    """
    if 2 * N + 1 > bound:
        raise TruncationError('2N+1 = {} exceeds the epsilon bound {}.'.format(2 * N + 1, bound))
    tw = twisted(c, LEFT)
    s_tw = simplices(tw.carrier, N, budget=budget)
    s_c = simplices(c, 2 * N + 1, budget=budget)
    obmap = {beta: twisted_to_string(c, beta) for beta in s_tw.carrier.objects}
    for beta, alpha in obmap.items():
        if not s_c.carrier.has_object(alpha):
            raise FunctorError('{} has no string counterpart.'.format(beta))
    mormap = {m: SimplexMap(obmap[m.source], obmap[m.target], simplicial.epsilon(m.phi, bound))
              for m in s_tw.carrier.morphisms}
    functor = fincat.FinFunctor(s_tw.carrier, s_c.carrier, obmap, mormap, name='epsilon')
    return functor, s_tw, s_c, tw


def twisted_square(c, N=1, budget=DEFAULT_BUDGET, bound=DEFAULT_EPSILON_BOUND):
    """Both composites of the square relating ε, q and η.

    Returns:
        tuple: (ε, q∘ε, η∘last_vertex), the last two as functors
               Δ_{/Tw^ℓ(C)}^{≤N} → C^op × C; the square commutes strictly when
               they are equal
    """
    functor, s_tw, s_c, tw = epsilon_compare(c, N, budget=budget, bound=bound)
    upper = functor.then(simplex_endpoints(s_c))
    lower = last_vertex(s_tw).then(tw.eta)
    return functor, upper, lower


def reverse_simplices(c, N=DEFAULT_TRUNCATION, budget=DEFAULT_BUDGET):
    """The isomorphism Δ_{/C}^{≤N} → Δ_{/C^op}^{≤N} reversing strings over rev."""
    s = simplices(c, N, budget=budget)
    s_op = simplices(fincat.opposite(c), N, budget=budget)
    return fincat.FinFunctor(
        s.carrier, s_op.carrier,
        {a: a.reversed() for a in s.carrier.objects},
        {m: SimplexMap(m.source.reversed(), m.target.reversed(), simplicial.rev(m.phi))
         for m in s.carrier.morphisms},
        name='rev')


class ElementsCat(object):
    """Category of elements of a weight, with its projection to the base."""

    def __init__(self, weight, variance, base, carrier, projection):
        self.weight = weight
        self.variance = variance
        self.base = base
        self.carrier = carrier
        self.projection = projection

    def sections(self, budget=DEFAULT_BUDGET):
        """Functors s: base → carrier with projection∘s = id."""
        ident = fincat.identity_functor(self.base)
        return [s for s in fincat.functor_category_objects(self.base, self.carrier, budget=budget)
                if s.then(self.projection) == ident]

    def __repr__(self):
        return '<ElementsCat {} of {!r}: {} objects>'.format(
            self.variance, self.weight, len(self.carrier.objects))


def elements(w, variance=COVARIANT):
    """Grothendieck construction of a Set-valued weight.

    A covariant weight W on C gives objects (i, e), e ∈ W(i), and morphisms
    (u, e): (i, e) → (i′, W(u)(e)). A contravariant weight is a SetFunctor
    on C^op; it gives morphisms (u, e′): (i, W(u)(e′)) → (i′, e′) for u: i → i′
    in C.
    """
    if variance == COVARIANT:
        base = w.source
        objects = [(i, e) for i in base.objects for e in w.at(i)]
        morphisms = [((u, e), (base.src(u), e), (base.dst(u), w.apply(u, e)))
                     for u in base.morphisms for e in w.at(base.src(u))]

        def compose(g, f):
            return (base.comp(g[0], f[0]), f[1])
    elif variance == CONTRAVARIANT:
        base = fincat.opposite(w.source)
        objects = [(i, e) for i in base.objects for e in w.at(i)]
        morphisms = [((u, e), (base.src(u), w.apply(u, e)), (base.dst(u), e))
                     for u in base.morphisms for e in w.at(base.dst(u))]

        def compose(g, f):
            return (base.comp(g[0], f[0]), g[1])
    else:
        raise ConventionError('Unknown variance {!r}.'.format(variance))
    identities = {(i, e): (base.identity(i), e) for (i, e) in objects}
    carrier = fincat.FinCat(objects, morphisms, identities, compose,
                            name='el({})'.format(w.name or '?'))
    projection = fincat.FinFunctor(carrier, base, {x: x[0] for x in objects},
                                   {m: m[0] for (m, _, _) in morphisms}, name='p')
    return ElementsCat(w, variance, base, carrier, projection)


class HomElements(object):
    """The isomorphism between el(Hom) and Tw^r(C)."""

    def __init__(self, elements, twisted, functor):
        self.elements = elements
        self.twisted = twisted
        self.functor = functor

    def is_isomorphism(self):
        return self.functor.is_isomorphism()


def elements_of_hom(c):
    """Identify the elements of the Hom presheaf on C × C^op with Tw^r(C).

    The object ((x, y), f) goes to f; the morphism ((a, b), g) of el(Hom),
    from ((x, y), b∘g∘a) to ((x′, y′), g), goes to the Tw^r morphism
    (g, a, b, b∘g∘a).
    """
    el = elements(fincat.hom_functor(c), CONTRAVARIANT)
    tw = twisted(c, RIGHT)
    obmap = {(xy, f): f for (xy, f) in el.carrier.objects}
    mormap = {}
    for m in el.carrier.morphisms:
        (a, b), g = m
        f = el.carrier.src(m)[1]
        mormap[m] = (g, a, b, f)
    functor = fincat.FinFunctor(el.carrier, tw.carrier, obmap, mormap, name='el(Hom)->Tw^r')
    return HomElements(el, tw, functor)
