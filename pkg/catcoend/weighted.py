# -*- coding: utf-8 -*-
"""Weighted limits and colimits of Set-valued functors.

A covariant weight W: C → Set weights limits of ψ: C → Set; a presheaf
weight W: C^op → Set weights colimits of φ: C → Set. Each is computed twice:
through an (co)end and through the category of elements of the weight.

Normal forms:
  * weighted limits are families (h_j)_j indexed by the objects of C, each
    h_j the tuple of values of a function W(j) → ψ(j) listed in W(j) order
    (the layout of `NatTransf.key`);
  * weighted colimits are partitions of the tagged triples (i, (w, s)) with
    w ∈ W(i), s ∈ φ(i).
"""
from __future__ import annotations

import dataclasses
import itertools
import logging

from . import coends, constructions, fincat, setops
from .config import DEFAULT_BUDGET
from .errors import ConventionError

logger = logging.getLogger(__name__)

COVARIANT, PRESHEAF = 'covariant', 'presheaf'


class Weight(object):
    """A Set-valued weight and the category it weights over.

    A covariant weight is a SetFunctor on C and `base` is C; a presheaf
    weight is a SetFunctor on C^op and `base` is C.
    """

    def __init__(self, functor, variance=COVARIANT):
        if variance == COVARIANT:
            self.base = functor.source
        elif variance == PRESHEAF:
            self.base = fincat.opposite(functor.source)
        else:
            raise ConventionError('Unknown weight variance {!r}.'.format(variance))
        self.functor = functor
        self.variance = variance

    def at(self, x):
        return self.functor.at(x)

    def __repr__(self):
        return '<Weight {} over {!r}>'.format(self.variance, self.base)


def unit_weight(c, variance=COVARIANT):
    """The constant singleton weight; it weights conical (co)limits."""
    base = c if variance == COVARIANT else fincat.opposite(c)
    return Weight(fincat.constant(base, (0,), name='1'), variance)


class WeightedResult(object):
    """A weighted limit (families) or colimit (classes) with its route."""

    def __init__(self, route, families=None, classes=None, raw=None):
        self.route = route
        self.families = families
        self.classes = classes
        self.raw = raw

    def __len__(self):
        return len(self.families if self.families is not None else self.classes)

    def __repr__(self):
        return '<WeightedResult {}: {}>'.format(self.route, len(self))


def _check(w, variance, functor):
    if w.variance != variance:
        raise ConventionError('Expected a {} weight, got a {} one.'.format(variance, w.variance))
    if functor.source != w.base:
        raise ConventionError('Weight and diagram live over different categories.')


def _exponential(w, psi):
    """The bifunctor (j, j′) ↦ Functions(W(j), ψ(j′)) on C^op × C.

    A morphism (a, b) acts by h ↦ ψ(b)∘h∘W(a); functions are value tuples
    in W(j) order.
    """
    c = w.base
    base = coends.end_base(c)
    sets = {(j, j2): tuple(itertools.product(psi.at(j2), repeat=len(w.at(j))))
            for (j, j2) in base.objects}
    maps = {}
    for (a, b) in base.morphisms:
        (j, j2), (k, k2) = base.ends((a, b))
        index = {v: i for (i, v) in enumerate(w.at(j))}
        pulled = [index[w.functor.apply(a, v)] for v in w.at(k)]
        maps[(a, b)] = {h: tuple(psi.apply(b, h[i]) for i in pulled) for h in sets[(j, j2)]}
    return coends.Bifunctor(fincat.SetFunctor(base, sets, maps, name='psi^W'), c, coends.END)


def wlimit_via_end(w, psi, budget=None):
    """lim^W ψ as the end of the exponential bifunctor; its elements are Nat(W, ψ)."""
    _check(w, COVARIANT, psi)
    end = coends.end_via_equalizer(_exponential(w, psi), budget=budget)
    return WeightedResult('end', families=end.families, raw=end)


def wlimit_via_fibration(w, psi):
    """lim^W ψ as the conical limit of ψ∘p over el(W)."""
    _check(w, COVARIANT, psi)
    el = constructions.elements(w.functor, constructions.COVARIANT)
    lim = setops.limit(psi.pullback(el.projection))
    idx = {x: i for (i, x) in enumerate(el.carrier.objects)}
    families = [tuple(tuple(family[idx[(j, v)]] for v in w.at(j)) for j in w.base.objects)
                for family in lim]
    return WeightedResult('fibration', families=families, raw=lim)


def _product_bifunctor(w, phi):
    """The coend-convention bifunctor (i, i′) ↦ W(i′) × φ(i)."""
    c = w.base
    base = coends.coend_base(c)
    sets = {(i, i2): tuple(itertools.product(w.at(i2), phi.at(i))) for (i, i2) in base.objects}
    maps = {(f, g): {(v, s): (w.functor.apply(g, v), phi.apply(f, s))
                     for (v, s) in sets[base.src((f, g))]}
            for (f, g) in base.morphisms}
    return coends.Bifunctor(fincat.SetFunctor(base, sets, maps, name='W*phi'), c, coends.COEND)


def wcolimit_via_coend(w, phi):
    """colim^W φ as the coend of W × φ: (w′, s) over i with W(u)(w′)·s ~ w′·φ(u)(s)."""
    _check(w, PRESHEAF, phi)
    coend = coends.coend_via_coequalizer(_product_bifunctor(w, phi))
    return WeightedResult('coend', classes=coend.classes, raw=coend)


def wcolimit_via_fibration(w, phi):
    """colim^W φ as the conical colimit of φ∘p over el(W)."""
    _check(w, PRESHEAF, phi)
    el = constructions.elements(w.functor, constructions.CONTRAVARIANT)
    colim = setops.colimit(phi.pullback(el.projection))
    classes = [tuple((i, (v, s)) for ((i, v), s) in cls) for cls in colim.classes]
    universe = [(i, (v, s)) for i in w.base.objects for v in w.at(i) for s in phi.at(i)]
    return WeightedResult('fibration', classes=coends._canonical(universe, classes), raw=colim)


def compare_wlimit(w, psi, budget=None):
    return setops.compare_families(wlimit_via_end(w, psi, budget=budget).families,
                                   wlimit_via_fibration(w, psi).families)


def compare_wcolimit(w, phi):
    return setops.compare_partitions(wcolimit_via_coend(w, phi).classes,
                                     wcolimit_via_fibration(w, phi).classes)


def nat_space(phi, psi, budget=DEFAULT_BUDGET):
    """Compare Nat(φ, ψ) with lim^φ ψ for presheaves on a common base.

    Both presheaves are SetFunctors on C^op; the weighted limit is taken over
    C^op with φ as covariant weight.

    Returns:
        tuple: (natural transformations, WeightedResult, Comparison)
    """
    nats = fincat.enumerate_nat(phi, psi, budget=budget)
    result = wlimit_via_end(Weight(phi, COVARIANT), psi, budget=budget)
    return nats, result, setops.compare_families([t.key() for t in nats], result.families)


def conical_limit_check(psi):
    """lim^1 ψ against setops.limit(ψ): a family of functions 1 → ψ(j) is a family of values."""
    result = wlimit_via_end(unit_weight(psi.source, COVARIANT), psi)
    values = [tuple(h[0] for h in fam) for fam in result.families]
    return setops.compare_families(values, list(setops.limit(psi)))


def conical_colimit_check(phi):
    """colim^1 φ against setops.colimit(φ), dropping the weight's single element."""
    result = wcolimit_via_coend(unit_weight(phi.source, PRESHEAF), phi)
    classes = [tuple((i, s) for (i, (_, s)) in cls) for cls in result.classes]
    return setops.compare_partitions(classes, setops.colimit(phi).classes)


@dataclasses.dataclass(frozen=True)
class CheckReport:
    """Pass/fail of a composite check with the first failing witness."""
    ok: bool
    details: tuple = ()
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def _canonical_map(classes, value):
    """Check that `value` is constant on classes and injective across them.

    Returns:
        tuple: (image list per class, witness or None)
    """
    images = []
    for cls in classes:
        seen = {value(m) for m in cls}
        if len(seen) != 1:
            return images, ('not constant', cls[0])
        images.append(seen.pop())
    if len(set(images)) != len(images):
        return images, ('not injective',)
    return images, None


def density_check(phi):
    """Check φ(x) ≅ colim_{el(φ)} Hom(x, p(−)) for every object x.

    The canonical map sends the class of ((i, e), h: x → i) to φ(h)(e).

    Args:
        phi (SetFunctor): a presheaf, i.e. a SetFunctor on C^op

    Returns:
        CheckReport: details are (x, classes, |φ(x)|) per object
    """
    el = constructions.elements(phi, constructions.CONTRAVARIANT)
    c = el.base
    details = []
    for x in c.objects:
        colim = setops.colimit(fincat.corepresentable(c, x).pullback(el.projection))
        images, witness = _canonical_map(colim.classes,
                                         lambda m: phi.apply(m[1], m[0][1]))
        details.append((x, len(colim), len(phi.at(x))))
        if witness is not None:
            return CheckReport(False, tuple(details), (x,) + witness)
        if set(images) != set(phi.at(x)):
            return CheckReport(False, tuple(details), (x, 'not surjective'))
    return CheckReport(True, tuple(details))


def _class_lookup(classes):
    return {m: i for (i, cls) in enumerate(classes) for m in cls}


def _induced(transf, classes, lookup):
    """The map colim^P W → colim^Q W induced by P ⇒ Q, on class indices."""
    result = {}
    for k, cls in enumerate(classes):
        j, (p, s) = cls[0]
        result[k] = lookup[(j, (transf(j, p), s))]
    return result


def cocompletion_check(w, presheaves=None, budget=DEFAULT_BUDGET, max_pairs=3):
    """Check that P ↦ colim^P W extends W and preserves coproducts and coequalizers.

    Args:
        w (SetFunctor): covariant W: C → Set
        presheaves (list): presheaves on C^op used for the colimit checks;
                           the representables by default
        max_pairs (int): parallel pairs tried per (P, Q)

    Returns:
        CheckReport: details name each sub-check that ran
    """
    c = w.source
    details = []
    # Representables: colim^{Hom(-, i)} W ≅ W(i), (j, (h, s)) ↦ W(h)(s).
    for i in c.objects:
        result = wcolimit_via_coend(Weight(fincat.representable(c, i), PRESHEAF), w)
        images, witness = _canonical_map(result.classes, lambda m: w.apply(m[1][0], m[1][1]))
        details.append(('representable', i, len(result), len(w.at(i))))
        if witness is not None or set(images) != set(w.at(i)):
            return CheckReport(False, tuple(details), ('representable', i) + (witness or ('not surjective',)))
    if presheaves is None:
        presheaves = [fincat.representable(c, i) for i in c.objects]
    colims = [wcolimit_via_coend(Weight(p, PRESHEAF), w) for p in presheaves]
    # Coproducts: class of (j, ((tag, p), s)) ↦ (tag, class of (j, (p, s))).
    for (a, pa), (b, pb) in itertools.combinations_with_replacement(enumerate(presheaves), 2):
        total = wcolimit_via_coend(Weight(setops.coproduct(pa, pb), PRESHEAF), w)
        lookups = (_class_lookup(colims[a].classes), _class_lookup(colims[b].classes))

        def value(m):
            j, ((tag, p), s) = m
            return (tag, lookups[tag][(j, (p, s))])
        images, witness = _canonical_map(total.classes, value)
        details.append(('coproduct', a, b, len(total)))
        if witness is not None or len(images) != len(colims[a]) + len(colims[b]):
            return CheckReport(False, tuple(details), ('coproduct', a, b) + (witness or ('not surjective',)))
    # Coequalizers of parallel pairs α, β: P ⇒ Q.
    for (a, pa), (b, pb) in itertools.product(enumerate(presheaves), repeat=2):
        nats = fincat.enumerate_nat(pa, pb, budget=budget)[:max_pairs]
        for alpha, beta in itertools.combinations(nats, 2):
            r, q = setops.functor_coequalizer(alpha, beta)
            target = wcolimit_via_coend(Weight(r, PRESHEAF), w)
            t_lookup = _class_lookup(target.classes)
            q_lookup = _class_lookup(colims[b].classes)
            p_classes = colims[a].classes
            legs = [_induced(transf, p_classes, q_lookup) for transf in (alpha, beta)]
            quotient = setops.coequalizer(
                fincat.FunctionTable(range(len(p_classes)), range(len(colims[b])), legs[0]),
                fincat.FunctionTable(range(len(p_classes)), range(len(colims[b])), legs[1]))
            merged = [[m for k in cls for m in colims[b].classes[k]] for cls in quotient.classes]
            images, witness = _canonical_map(
                merged, lambda m: t_lookup[(m[0], (q(m[0], m[1][0]), m[1][1]))])
            details.append(('coequalizer', a, b, len(target)))
            if witness is not None or len(images) != len(target):
                return CheckReport(False, tuple(details), ('coequalizer', a, b) + (witness or ('not surjective',)))
    return CheckReport(True, tuple(details))


def coend_as_weighted(f):
    """Compare ∫^C F with the colimit of F weighted by Hom, through el(Hom) ≅ Tw^r(C).

    The colimit of F∘p over el(Hom) is transported along the isomorphism to
    Tw^r(C) and compared class by class with coend_via_tw.

    Returns:
        tuple: (classes transported to Tw^r, Comparison)
    """
    if f.convention != coends.COEND:
        raise ConventionError('coend_as_weighted needs a coend-convention bifunctor.')
    iso = constructions.elements_of_hom(f.category)
    if not iso.is_isomorphism():
        return [], setops.Comparison(False, 0, 0, witness=('el(Hom) is not isomorphic to Tw^r',))
    colim = setops.colimit(f.functor.pullback(iso.elements.projection))
    classes = [tuple((iso.functor.ob(x), e) for (x, e) in cls) for cls in colim.classes]
    reference = coends.coend_via_tw(f).raw
    return classes, setops.compare_partitions(classes, reference.classes)


def colimit_representability_check(w, phi, max_target=2):
    """Check Map(colim^W φ, T) ≅ lim^W Map(φ, T) for T = {0..k−1}, k ≤ max_target.

    A function g on classes goes to the family whose component at i sends
    w to s ↦ g(class of (i, (w, s))).

    Returns:
        CheckReport: details are (|T|, |Map(colim, T)|, |lim^W Map(φ, T)|)
    """
    _check(w, PRESHEAF, phi)
    c = w.base
    colim = wcolimit_via_coend(w, phi)
    lookup = _class_lookup(colim.classes)
    details = []
    for k in range(max_target + 1):
        target = tuple(range(k))
        sets = {i: tuple(itertools.product(target, repeat=len(phi.at(i)))) for i in c.objects}
        maps = {}
        op = fincat.opposite(c)
        for u in c.morphisms:
            x, y = c.ends(u)
            index = {s: n for (n, s) in enumerate(phi.at(y))}
            pulled = [index[phi.apply(u, s)] for s in phi.at(x)]
            maps[u] = {h: tuple(h[n] for n in pulled) for h in sets[y]}
        mapping = fincat.SetFunctor(op, sets, maps, name='Map(phi,T)')
        limit = wlimit_via_end(Weight(w.functor, COVARIANT), mapping)
        families = []
        for g in setops.all_functions(range(len(colim)), target):
            families.append(tuple(
                tuple(tuple(g[lookup[(i, (v, s))]] for s in phi.at(i)) for v in w.at(i))
                for i in c.objects))
        details.append((k, len(families), len(limit)))
        if not setops.compare_families(families, limit.families):
            return CheckReport(False, tuple(details), (k,))
    return CheckReport(True, tuple(details))
