# -*- coding: utf-8 -*-
"""Limits and colimits of Set-valued functors on finite categories."""
from __future__ import annotations

import dataclasses
import itertools
import logging

from . import fincat
from .errors import FunctorError, ShapeError

logger = logging.getLogger(__name__)


class UnionFind(object):
    """Disjoint sets over a fixed, ordered universe.

    Representatives reported by `classes` are the least members in the
    universe order, independent of the order unions happened in.
    """

    def __init__(self, universe):
        self.order = {x: i for (i, x) in enumerate(universe)}
        self.parent = {x: x for x in self.order}
        self.rank = {x: 0 for x in self.order}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self):
        groups = {}
        for x in self.order:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: self.order[g[0]])


class Quotient(object):
    """A set partitioned into classes; class i has representative classes[i][0]."""

    def __init__(self, elements, classes):
        self.elements = tuple(elements)
        self.classes = tuple(tuple(c) for c in classes)
        self._index = {e: i for (i, cls) in enumerate(self.classes) for e in cls}

    def class_of(self, e):
        return self._index[e]

    def representative(self, i):
        return self.classes[i][0]

    def projection(self):
        return {e: self._index[e] for e in self.elements}

    def partition(self):
        return frozenset(frozenset(c) for c in self.classes)

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return '<{} {} classes>'.format(type(self).__name__, len(self.classes))


class LimitResult(object):
    """Compatible families of a SetFunctor, one component per base object."""

    def __init__(self, functor, elements):
        self.functor = functor
        self.objects = functor.source.objects
        self.elements = tuple(elements)

    def family(self, element):
        return dict(zip(self.objects, element))

    def projection(self, x):
        i = self.objects.index(x)
        return {el: el[i] for el in self.elements}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return '<LimitResult {} elements>'.format(len(self.elements))


class ColimitResult(Quotient):
    """Classes of the disjoint union of a SetFunctor's values.

    Elements of the disjoint union are tagged pairs (object, element).
    """

    def __init__(self, functor, classes):
        super(ColimitResult, self).__init__(functor.elements(), classes)
        self.functor = functor

    def injection(self, x):
        return {e: self.class_of((x, e)) for e in self.functor.at(x)}


def limit(functor):
    """Compute lim F as the set of compatible families.

    Objects are visited in base order. A value at an object is forced when
    some morphism arrives from an earlier object; otherwise every element is
    tried. All other morphisms between visited objects are checked as soon as
    both ends are set.

    Args:
        functor (SetFunctor): diagram over a finite base

    Returns:
        LimitResult: families in search order; the empty base gives the
                     singleton {()}
    """
    c = functor.source
    objs = c.objects
    oidx = {x: i for (i, x) in enumerate(objs)}
    forcing = [None] * len(objs)
    checks = [[] for _ in objs]
    for u in c.morphisms:
        s, t = oidx[c.src(u)], oidx[c.dst(u)]
        if s < t and forcing[t] is None:
            forcing[t] = (u, s)
        elif not (s == t and c.is_identity(u)):
            checks[max(s, t)].append((u, s, t))
    apply = functor.apply

    def candidates(k, values):
        if forcing[k] is not None:
            u, s = forcing[k]
            return (apply(u, values[s]),)
        return functor.at(objs[k])

    def accept(k, values):
        for (u, s, t) in checks[k]:
            if apply(u, values[s]) != values[t]:
                return False
        return True

    elements = list(fincat.search(len(objs), candidates, accept))
    logger.debug('limit over %r: %d elements', c, len(elements))
    return LimitResult(functor, elements)


def colimit(functor):
    """Compute colim F as the equivalence closure of (x, e) ~ (y, F(u)(e))."""
    c = functor.source
    uf = UnionFind(functor.elements())
    for u in c.morphisms:
        if c.is_identity(u):
            continue
        s, t = c.ends(u)
        for e in functor.at(s):
            uf.union((s, e), (t, functor.apply(u, e)))
    result = ColimitResult(functor, uf.classes())
    logger.debug('colimit over %r: %d classes', c, len(result))
    return result


def equalizer(f, g):
    """Return {x : f(x) = g(x)} in source order.

    Raises:
        ShapeError: if f and g do not share source and target
    """
    if f.source != g.source or f.target != g.target:
        raise ShapeError('Equalizer needs parallel functions.')
    return [x for x in f.source if f(x) == g(x)]


def coequalizer(f, g):
    """Return the target of f, g modulo the closure of f(x) ~ g(x).

    Raises:
        ShapeError: if f and g do not share source and target
    """
    if f.source != g.source or f.target != g.target:
        raise ShapeError('Coequalizer needs parallel functions.')
    uf = UnionFind(f.target)
    for x in f.source:
        uf.union(f(x), g(x))
    return Quotient(f.target, uf.classes())


def cones(functor, apex, budget=None):
    """All cones over `functor` with vertex the finite set `apex`."""
    return fincat.enumerate_nat(fincat.constant(functor.source, apex), functor, budget=budget)


def cocones(functor, target, budget=None):
    """All cocones under `functor` into the finite set `target`."""
    return fincat.enumerate_nat(functor, fincat.constant(functor.source, target), budget=budget)


def limit_is_universal(result, apex, budget=None):
    """Check that every cone with vertex `apex` factors uniquely through `result`.

    The factorization of a cone sends t to the family of its components at t;
    uniqueness follows from the projections being jointly injective, and
    existence is checked by counting: cones correspond to functions
    apex → lim, so there must be |lim|^|apex| of them, each landing in lim.
    """
    members = set(result.elements)
    found = cones(result.functor, apex, budget=budget)
    objs = result.objects
    for cone in found:
        for t in apex:
            if tuple(cone(x, t) for x in objs) not in members:
                return False
    return len(found) == len(members) ** len(tuple(apex))


def colimit_is_universal(result, target, budget=None):
    """Check that every cocone into `target` factors uniquely through `result`."""
    found = cocones(result.functor, target, budget=budget)
    for cocone in found:
        for cls in result.classes:
            if len({cocone(x, e) for (x, e) in cls}) != 1:
                return False
    return len(found) == len(tuple(target)) ** len(result)


# Objectwise colimits of functors -----------------------------------------

def coproduct(f, g):
    """Objectwise disjoint union; elements are tagged (0, e) and (1, e)."""
    if f.source != g.source:
        raise FunctorError('Coproduct needs functors on a shared base.')
    c = f.source
    sets = {x: tuple((0, e) for e in f.at(x)) + tuple((1, e) for e in g.at(x)) for x in c.objects}
    maps = {}
    for u in c.morphisms:
        table = {(0, e): (0, v) for (e, v) in f.fmap(u).items()}
        table.update({(1, e): (1, v) for (e, v) in g.fmap(u).items()})
        maps[u] = table
    return fincat.SetFunctor(c, sets, maps, name='coproduct')


def coproduct_injections(f, g):
    total = coproduct(f, g)
    c = f.source
    left = fincat.NatTransf(f, total, {x: {e: (0, e) for e in f.at(x)} for x in c.objects})
    right = fincat.NatTransf(g, total, {x: {e: (1, e) for e in g.at(x)} for x in c.objects})
    return total, left, right


def functor_coequalizer(alpha, beta):
    """Objectwise coequalizer of parallel natural transformations α, β: P ⇒ Q.

    Returns:
        tuple: (R, q) with R the quotient functor, whose elements are class
               representatives, and q: Q ⇒ R the quotient map
    """
    if alpha.source != beta.source or alpha.target != beta.target:
        raise ShapeError('Coequalizer needs parallel natural transformations.')
    p, q = alpha.source, alpha.target
    c = p.source
    quotients = {}
    for x in c.objects:
        f = fincat.FunctionTable(p.at(x), q.at(x), alpha.component(x))
        g = fincat.FunctionTable(p.at(x), q.at(x), beta.component(x))
        quotients[x] = coequalizer(f, g)
    sets = {x: tuple(quotients[x].representative(i) for i in range(len(quotients[x])))
            for x in c.objects}
    quotient_map = {x: {e: quotients[x].representative(quotients[x].class_of(e)) for e in q.at(x)}
                    for x in c.objects}
    maps = {}
    for u in c.morphisms:
        s, t = c.ends(u)
        maps[u] = {r: quotient_map[t][q.apply(u, r)] for r in sets[s]}
    r = fincat.SetFunctor(c, sets, maps, name='coequalizer')
    return r, fincat.NatTransf(q, r, quotient_map)


# Route comparison ---------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class Comparison:
    """Result of matching two routes' normalized results.

    `bijection` maps left indices to right indices when the routes agree;
    `witness` names the first element found on one side only.
    """
    agree: bool
    left_size: int
    right_size: int
    bijection: tuple = ()
    witness: tuple = ()

    def __bool__(self):
        return self.agree


def compare_families(left, right):
    """Match two lists of normalized families (hashable tuples) by equality."""
    index = {fam: i for (i, fam) in enumerate(right)}
    bijection = []
    for i, fam in enumerate(left):
        if fam not in index:
            return Comparison(False, len(left), len(right), witness=('left-only', fam))
        bijection.append((i, index[fam]))
    if len(set(left)) != len(set(right)) or len(left) != len(right):
        missing = [fam for fam in right if fam not in set(left)]
        return Comparison(False, len(left), len(right),
                          witness=('right-only', missing[0] if missing else None))
    return Comparison(True, len(left), len(right), bijection=tuple(bijection))


def compare_partitions(left, right):
    """Match two partitions of a common universe class by class.

    Args:
        left (list): classes, each a sequence of hashable elements
        right (list): classes, each a sequence of hashable elements

    Returns:
        Comparison: agree iff the partitions are equal; the bijection sends
                    each left class to the right class holding its first
                    element
    """
    where = {}
    for j, cls in enumerate(right):
        for e in cls:
            where[e] = j
    bijection = []
    for i, cls in enumerate(left):
        targets = {where.get(e) for e in cls}
        if len(targets) != 1 or None in targets:
            e = next(e for e in cls if where.get(e) != where.get(cls[0]) or where.get(e) is None)
            return Comparison(False, len(left), len(right), witness=('split', cls[0], e))
        j = targets.pop()
        if len(right[j]) != len(cls):
            extra = next(e for e in right[j] if e not in set(cls))
            return Comparison(False, len(left), len(right), witness=('merged', cls[0], extra))
        bijection.append((i, j))
    if len(left) != len(right) or sum(map(len, left)) != len(where):
        return Comparison(False, len(left), len(right), witness=('universe',))
    return Comparison(True, len(left), len(right), bijection=tuple(bijection))


def all_functions(source, target):
    """Every function source → target as a dict, in lexicographic order."""
    source, target = tuple(source), tuple(target)
    return [dict(zip(source, image)) for image in itertools.product(target, repeat=len(source))]
