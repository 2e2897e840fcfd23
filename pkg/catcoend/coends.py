# -*- coding: utf-8 -*-
"""Ends and coends of Set-valued bifunctors.

Each end is computed by three routes (the equalizer formula, a limit over the
twisted arrow category and a limit over the truncated category of simplices)
and each coend by four. Every route normalizes its result so that routes can
be compared by computed maps:

  * ends become families (s_x)_x, one component in F(x, x) per object of C,
    in object order;
  * coends become a partition of the tagged diagonal elements (x, e),
    e ∈ F(x, x).

Conventions: an end-convention bifunctor lives on C^op × C, a
coend-convention bifunctor on C × C^op, so in both cases the first slot of a
base object is the first argument of F.
"""
from __future__ import annotations

import logging

from . import constructions, fincat, setops
from .config import DEFAULT_BUDGET, DEFAULT_TRUNCATION
from .errors import ConventionError, FunctorError, TruncationError

logger = logging.getLogger(__name__)

END, COEND = 'end', 'coend'


def end_base(c):
    return fincat.product(fincat.opposite(c), c)


def coend_base(c):
    return fincat.product(c, fincat.opposite(c))


class Bifunctor(object):
    """A SetFunctor on C^op × C (end convention) or C × C^op (coend convention).

    Raises:
        ConventionError: if the functor's base does not match the convention
    """

    def __init__(self, functor, category, convention=END):
        if convention not in (END, COEND):
            raise ConventionError('Unknown convention {!r}.'.format(convention))
        expected = end_base(category) if convention == END else coend_base(category)
        if functor.source != expected:
            raise ConventionError('Bifunctor base does not match the {} convention over {!r}.'.format(
                convention, category))
        self.functor = functor
        self.category = category
        self.convention = convention

    def at(self, x, y):
        return self.functor.at((x, y))

    def apply(self, f, g, e):
        return self.functor.apply((f, g), e)

    def diagonal(self):
        """The tagged elements (x, e) of ∐_x F(x, x) in canonical order."""
        return [(x, e) for x in self.category.objects for e in self.functor.at((x, x))]

    def swap(self):
        """The same data read in the other convention, G(x, y) = F(y, x)."""
        c = self.category
        if self.convention == END:
            g = self.functor.pullback(fincat.swap_functor(c, fincat.opposite(c)))
            return Bifunctor(g, c, COEND)
        g = self.functor.pullback(fincat.swap_functor(fincat.opposite(c), c))
        return Bifunctor(g, c, END)

    def __repr__(self):
        return '<Bifunctor {} over {!r}>'.format(self.convention, self.category)


def hom_bifunctor(c, convention=END):
    """Hom as a bifunctor: Hom(x, y) in end convention, Hom(y, x) in coend convention."""
    b = Bifunctor(fincat.hom_functor(c), c, END)
    return b if convention == END else b.swap()


def constant_bifunctor(c, elements, convention=END):
    base = end_base(c) if convention == END else coend_base(c)
    return Bifunctor(fincat.constant(base, elements), c, convention)


def _require(f, convention):
    if f.convention != convention:
        raise ConventionError('Expected a {}-convention bifunctor, got {}.'.format(
            convention, f.convention))


class EndResult(object):
    """Families (s_x)_x of an end, with the route that produced them."""

    def __init__(self, bifunctor, route, families, raw=None):
        self.bifunctor = bifunctor
        self.route = route
        self.families = list(families)
        self.raw = raw

    def __len__(self):
        return len(self.families)

    def __iter__(self):
        return iter(self.families)

    def __repr__(self):
        return '<EndResult {}: {} elements>'.format(self.route, len(self.families))


class CoendResult(object):
    """Classes of ∐_x F(x, x), with the route that produced them."""

    def __init__(self, bifunctor, route, classes, raw=None):
        self.bifunctor = bifunctor
        self.route = route
        self.classes = _canonical(bifunctor.diagonal(), classes)
        self.raw = raw

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return '<CoendResult {}: {} classes>'.format(self.route, len(self.classes))


def _canonical(universe, classes):
    """Sort members by universe order and classes by their least member."""
    order = {e: i for (i, e) in enumerate(universe)}
    classes = [tuple(sorted(cls, key=order.__getitem__)) for cls in classes if cls]
    return sorted(classes, key=lambda cls: order[cls[0]])


# Ends -----------------------------------------------------------------------

def end_via_equalizer(f, budget=None):
    """The end as the equalizer of ∏_x F(x, x) ⇉ ∏_{u: x → y} F(x, y).

    A family (s_x)_x belongs to the end when F(id_x, u)(s_x) = F(u, id_y)(s_y)
    for every u: x → y.
    """
    _require(f, END)
    c = f.category
    objs = c.objects
    oidx = {x: i for (i, x) in enumerate(objs)}
    checks = [[] for _ in objs]
    for u in c.non_identity_morphisms():
        x, y = c.ends(u)
        checks[max(oidx[x], oidx[y])].append((u, oidx[x], oidx[y]))

    def candidates(k, values):
        return f.at(objs[k], objs[k])

    def accept(k, values):
        for (u, i, j) in checks[k]:
            x, y = objs[i], objs[j]
            if f.apply(c.identity(x), u, values[i]) != f.apply(u, c.identity(y), values[j]):
                return False
        return True
    families = list(fincat.search(len(objs), candidates, accept, budget))
    logger.debug('end via equalizer over %r: %d elements', c, len(families))
    return EndResult(f, 'equalizer', families)


def end_via_tw(f):
    """The end as the limit of F∘η over Tw^ℓ(C), read off at the identities."""
    _require(f, END)
    c = f.category
    tw = constructions.twisted(c, constructions.LEFT)
    lim = setops.limit(f.functor.pullback(tw.eta))
    idx = {g: i for (i, g) in enumerate(tw.carrier.objects)}
    at = [idx[c.identity(x)] for x in c.objects]
    families = [tuple(el[i] for i in at) for el in lim]
    return EndResult(f, 'tw', families, raw=lim)


def _end_over_simplices(f, n, budget):
    c = f.category
    s = constructions.simplices(c, n, budget=budget)
    lim = setops.limit(f.functor.pullback(constructions.simplex_endpoints(s)))
    idx = {a: i for (i, a) in enumerate(s.carrier.objects)}
    at = [idx[constructions.Simplex((x,), ())] for x in c.objects]
    return [tuple(el[i] for i in at) for el in lim], lim


def end_via_simplices(f, N=DEFAULT_TRUNCATION, budget=DEFAULT_BUDGET, stabilize=True):
    """The end as the limit of F∘q over Δ_{/C}^{≤N}, read off at level 0.

    Raises:
        TruncationError: if `stabilize` is set and the result at N+1 differs
    """
    _require(f, END)
    families, lim = _end_over_simplices(f, N, budget)
    if stabilize:
        bigger, _ = _end_over_simplices(f, N + 1, budget)
        if not setops.compare_families(families, bigger):
            raise TruncationError('End over simplices is not stable between N={} and N={}.'.format(
                N, N + 1))
    return EndResult(f, 'simplices', families, raw=lim)


def center_via_nat(c, budget=DEFAULT_BUDGET):
    """Compare End(Hom) with Nat(Hom, Hom) on C^op × C.

    A transformation t goes to the family (t_{(x, x)}(id_x))_x.

    Returns:
        tuple: (EndResult, Comparison)
    """
    hom = fincat.hom_functor(c)
    nats = fincat.enumerate_nat(hom, hom, budget=budget)
    left = [tuple(t((x, x), c.identity(x)) for x in c.objects) for t in nats]
    end = end_via_equalizer(hom_bifunctor(c, END))
    return end, setops.compare_families(left, end.families)


# Coends ---------------------------------------------------------------------

def coend_via_coequalizer(f, mutation=None):
    """The coend as the coequalizer of ∐_{u: x → y} F(x, y) ⇉ ∐_x F(x, x).

    For e ∈ F(x, y) the two legs are (x, F(id_x, u)(e)) and (y, F(u, id_y)(e)).
    With mutation='variance' the tags of the two legs are exchanged; that
    setting exists only to exercise the check harness.

    Raises:
        FunctorError: if a mutated leg lands outside the diagonal
    """
    _require(f, COEND)
    c = f.category
    universe = f.diagonal()
    uf = setops.UnionFind(universe)
    for u in c.non_identity_morphisms():
        x, y = c.ends(u)
        for e in f.at(x, y):
            left = (x, f.apply(c.identity(x), u, e))
            right = (y, f.apply(u, c.identity(y), e))
            if mutation == 'variance':
                left, right = (y, left[1]), (x, right[1])
                if left not in uf.parent or right not in uf.parent:
                    raise FunctorError('Leg of {!r} at {!r} leaves the diagonal.'.format(u, e))
            uf.union(left, right)
    return CoendResult(f, 'coequalizer', uf.classes())


def _diagonal_classes(classes, tag):
    """Restrict classes of a colimit to diagonal members, retagged by `tag`."""
    result = []
    for cls in classes:
        members = [tag(x, e) for (x, e) in cls]
        members = [m for m in members if m is not None]
        if not members:
            raise FunctorError('A class of the colimit contains no diagonal element.')
        result.append(members)
    return result


def coend_via_tw(f):
    """The coend as the colimit of F∘η over Tw^r(C).

    Classes are restricted to elements sitting over identities, which meet
    every class.
    """
    _require(f, COEND)
    c = f.category
    tw = constructions.twisted(c, constructions.RIGHT)
    colim = setops.colimit(f.functor.pullback(tw.eta))
    ids = {c.identity(x): x for x in c.objects}

    def tag(g, e):
        return (ids[g], e) if g in ids else None
    return CoendResult(f, 'tw', _diagonal_classes(colim.classes, tag), raw=colim)


def _coend_over_simplices(f, n, budget):
    c = f.category
    s = constructions.simplices(c, n, budget=budget)
    q = constructions.simplex_endpoints(s).opposite()
    colim = setops.colimit(f.functor.pullback(q))

    def tag(a, e):
        return (a.vertices[0], e) if a.dim == 0 else None
    return _diagonal_classes(colim.classes, tag), colim


def coend_via_simplices(f, N=DEFAULT_TRUNCATION, budget=DEFAULT_BUDGET, stabilize=True):
    """The coend as the colimit of F∘q^op over (Δ_{/C}^{≤N})^op.

    Raises:
        TruncationError: if `stabilize` is set and the result at N+1 differs
    """
    _require(f, COEND)
    classes, colim = _coend_over_simplices(f, N, budget)
    if stabilize:
        bigger, _ = _coend_over_simplices(f, N + 1, budget)
        if not setops.compare_partitions(_canonical(f.diagonal(), classes),
                                         _canonical(f.diagonal(), bigger)):
            raise TruncationError('Coend over simplices is not stable between N={} and N={}.'.format(
                N, N + 1))
    return CoendResult(f, 'simplices', classes, raw=colim)


def simplicial_levels(f, budget=DEFAULT_BUDGET):
    """Levels 0 and 1 of the simplicial set [n] ↦ ∐_{α: [n] → C} F(α(0), α(n)).

    Returns:
        tuple: (level0, level1), each a list of (simplex, elements) summands
    """
    _require(f, COEND)
    s = constructions.simplices(f.category, 1, budget=budget)
    levels = ([], [])
    for a in s.carrier.objects:
        levels[a.dim].append((a, f.at(a.vertices[0], a.vertices[-1])))
    return levels


def coend_simplicial(f, budget=DEFAULT_BUDGET):
    """The coend as the coequalizer of the face maps d_1, d_0 from level 1 to level 0.

    An element e over α: x → y goes to (x, F(id_x, α)(e)) under d_1 and to
    (y, F(α, id_y)(e)) under d_0.
    """
    c = f.category
    level0, level1 = simplicial_levels(f, budget=budget)
    uf = setops.UnionFind([(a.vertices[0], e) for (a, elements) in level0 for e in elements])
    for (a, elements) in level1:
        x, y = a.vertices
        u = a.arrows[0]
        for e in elements:
            uf.union((x, f.apply(c.identity(x), u, e)), (y, f.apply(u, c.identity(y), e)))
    return CoendResult(f, 'simplicial', uf.classes())


COEND_ROUTES = ('coequalizer', 'tw', 'simplices', 'simplicial')
END_ROUTES = ('equalizer', 'tw', 'simplices')


def end_routes(f, N=DEFAULT_TRUNCATION, budget=DEFAULT_BUDGET):
    """Every end route, keyed by name."""
    return {
        'equalizer': end_via_equalizer(f, budget=budget),
        'tw': end_via_tw(f),
        'simplices': end_via_simplices(f, N, budget=budget),
    }


def coend_routes(f, N=DEFAULT_TRUNCATION, budget=DEFAULT_BUDGET, mutation=None):
    """Every coend route, keyed by name."""
    return {
        'coequalizer': coend_via_coequalizer(f, mutation=mutation),
        'tw': coend_via_tw(f),
        'simplices': coend_via_simplices(f, N, budget=budget),
        'simplicial': coend_simplicial(f, budget=budget),
    }


def compare_routes(results):
    """Compare every route against the first one.

    Returns:
        dict: route name -> Comparison with the first route, for the others
    """
    names = list(results)
    first = results[names[0]]
    comparisons = {}
    for name in names[1:]:
        other = results[name]
        if isinstance(first, EndResult):
            comparisons[name] = setops.compare_families(first.families, other.families)
        else:
            comparisons[name] = setops.compare_partitions(first.classes, other.classes)
    return comparisons


# Bousfield–Kan ----------------------------------------------------------------

def colim_bk(functor, budget=DEFAULT_BUDGET):
    """colim F as the coequalizer of the Bousfield–Kan levels 1 ⇉ 0.

    Level 0 is ∐_x F(x) over 0-simplices, level 1 is ∐_{u: x → y} F(x) over
    1-simplices; the faces send (u, s) to (x, s) and to (y, F(u)(s)).
    """
    s = constructions.simplices(functor.source, 1, budget=budget)
    uf = setops.UnionFind(functor.elements())
    for a in s.level_objects(1):
        x, y = a.vertices
        u = s.edge(a, 0, 1)
        for e in functor.at(x):
            uf.union((x, e), (y, functor.apply(u, e)))
    return setops.ColimitResult(functor, uf.classes())


def check_bk(functor, budget=DEFAULT_BUDGET):
    """Compare colim_bk with setops.colimit class by class."""
    return setops.compare_partitions(colim_bk(functor, budget=budget).classes,
                                     setops.colimit(functor).classes)


# Fubini -----------------------------------------------------------------------

class FubiniReport(object):
    """The joint end over C × D and both iterated ends, flattened to C × D families."""

    def __init__(self, joint, c_outer, d_outer):
        self.joint = joint
        self.c_outer = c_outer
        self.d_outer = d_outer
        self.comparisons = {
            'c_outer': setops.compare_families(joint, c_outer),
            'd_outer': setops.compare_families(joint, d_outer),
        }

    @property
    def agree(self):
        return all(self.comparisons.values())

    def __bool__(self):
        return self.agree


def _inner_end(f, c, d, x, x2, inner_first, budget):
    """End over the inner factor of F((x, −), (x2, −)) or F((−, x), (−, x2))."""
    other = d if inner_first else c
    base = end_base(other)
    if inner_first:
        def obj(y, y2):
            return ((x, y), (x2, y2))

        def mor(b, b2):
            return ((c.identity(x), b), (c.identity(x2), b2))
    else:
        def obj(y, y2):
            return ((y, x), (y2, x2))

        def mor(b, b2):
            return ((b, d.identity(x)), (b2, d.identity(x2)))
    sets = {(y, y2): f.functor.at(obj(y, y2)) for (y, y2) in base.objects}
    maps = {(b, b2): f.functor.fmap(mor(b, b2)) for (b, b2) in base.morphisms}
    inner = Bifunctor(fincat.SetFunctor(base, sets, maps), other, END)
    return end_via_equalizer(inner, budget=budget).families


def _iterated(f, c, d, c_outer, budget):
    """∫_C ∫_D F when c_outer, else ∫_D ∫_C F, as families over C × D."""
    outer, inner = (c, d) if c_outer else (d, c)
    base = end_base(outer)
    sets = {(x, x2): tuple(_inner_end(f, c, d, x, x2, c_outer, budget))
            for (x, x2) in base.objects}
    maps = {}
    for (a, a2) in base.morphisms:
        x, x2 = base.src((a, a2))
        table = {}
        for fam in sets[(x, x2)]:
            image = []
            for y, s in zip(inner.objects, fam):
                if c_outer:
                    m = ((a, inner.identity(y)), (a2, inner.identity(y)))
                else:
                    m = ((inner.identity(y), a), (inner.identity(y), a2))
                image.append(f.functor.apply(m, s))
            table[fam] = tuple(image)
        maps[(a, a2)] = table
    g = Bifunctor(fincat.SetFunctor(base, sets, maps), outer, END)
    families = end_via_equalizer(g, budget=budget).families
    flat = []
    for fam in families:
        by_pair = {}
        for xo, inner_fam in zip(outer.objects, fam):
            for yi, s in zip(inner.objects, inner_fam):
                by_pair[(xo, yi) if c_outer else (yi, xo)] = s
        flat.append(tuple(by_pair[xy] for xy in fincat.product(c, d).objects))
    return flat


def check_fubini(f, c, d, budget=DEFAULT_BUDGET):
    """Compute ∫_{C×D} F, ∫_C ∫_D F and ∫_D ∫_C F and compare them.

    Args:
        f (Bifunctor): end-convention bifunctor over product(c, d)
        c (FinCat): first factor
        d (FinCat): second factor

    Returns:
        FubiniReport: the three sides as families over C × D and the
                      comparisons of each iterated end with the joint one
    """
    _require(f, END)
    if f.category != fincat.product(c, d):
        raise ConventionError('Fubini needs a bifunctor over the product of its factors.')
    joint = end_via_equalizer(f, budget=budget).families
    report = FubiniReport(joint, _iterated(f, c, d, True, budget), _iterated(f, c, d, False, budget))
    logger.debug('fubini over %r x %r: %d / %d / %d', c, d,
                 len(report.joint), len(report.c_outer), len(report.d_outer))
    return report
