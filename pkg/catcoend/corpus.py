# -*- coding: utf-8 -*-
"""Seeded corpus of small categories, Set-valued functors and bifunctors."""
from __future__ import annotations

import logging

import numpy as np

from . import coends, fincat, setops
from .config import CORPUS_FAMILIES, DEFAULT_SET_SIZE_CAP
from .errors import BudgetExceeded

logger = logging.getLogger(__name__)

MAX_OBJECTS = 4
MAX_MORPHISMS = 12


def rng(seed, invariant, instance):
    """Generator for one instance; independent of every other instance."""
    return np.random.default_rng([seed, invariant, instance])


def _square():
    return fincat.poset(['0', 'x', 'y', '1'], [('0', 'x'), ('0', 'y'), ('x', '1'), ('y', '1')],
                        name='square')


def _span():
    return fincat.poset(['l', 'c', 'r'], [('c', 'l'), ('c', 'r')], name='span')


def _cospan():
    return fincat.poset(['l', 'c', 'r'], [('l', 'c'), ('r', 'c')], name='cospan')


def _kronecker():
    return fincat.free_category(['s', 't'], [('f', 's', 't'), ('g', 's', 't')], name='kronecker')


def _free_square():
    return fincat.free_category(['0', 'x', 'y', '1'],
                                [('p', '0', 'x'), ('q', 'x', '1'), ('r', '0', 'y'), ('s', 'y', '1')],
                                name='free_square')


def _builders():
    return {
        'posets': [fincat.terminal_category, fincat.walking_arrow, lambda: fincat.chain(2),
                   lambda: fincat.chain(3), _square, _span, _cospan,
                   lambda: fincat.discrete(['p', 'q'], name='discrete2')],
        'monoids': [lambda: fincat.cyclic_group(2), lambda: fincat.cyclic_group(3),
                    fincat.idempotent_monoid, fincat.walking_isomorphism],
        'free': [_kronecker, _free_square,
                 lambda: fincat.free_category(['a', 'b', 'c'], [('f', 'a', 'b'), ('g', 'b', 'c')],
                                              name='path2')],
    }


def _derived(base):
    by_name = {c.name: c for c in base}
    derived = []
    for name in ('2', 'idem', 'span', 'kronecker'):
        if name in by_name:
            derived.append(fincat.opposite(by_name[name]))
    for left, right in (('2', '2'), ('2', 'Z/2'), ('Z/2', 'Z/2'), ('2', 'idem')):
        if left in by_name and right in by_name:
            derived.append(fincat.product(by_name[left], by_name[right]))
    return derived


def categories(families=CORPUS_FAMILIES, max_objects=MAX_OBJECTS, max_morphisms=MAX_MORPHISMS):
    """The corpus categories of the selected families, in a fixed order.

    'derived' adds opposites and products of the other selected families'
    members (of all of them when no other family is selected).
    """
    builders = _builders()
    base = []
    for family in ('posets', 'monoids', 'free'):
        if family in families:
            base.extend(build() for build in builders[family])
    result = list(base)
    if 'derived' in families:
        pool = base or [build() for fam in builders.values() for build in fam]
        result.extend(_derived(pool))
    result = [c for c in result
              if len(c.objects) <= max_objects and len(c.morphisms) <= max_morphisms]
    logger.debug('corpus of %d categories', len(result))
    return result


def small_pairs(cats, max_morphisms=4):
    """Pairs of corpus categories small enough for iterated ends."""
    small = [c for c in cats if len(c.morphisms) <= max_morphisms and len(c.objects) <= 2]
    return [(c, d) for c in small for d in small]


SET_FUNCTOR_KINDS = ('tables', 'corepresentable', 'coproduct')


def _corepresentables(c, cap):
    return [fincat.corepresentable(c, x) for x in c.objects
            if all(len(c.hom(x, j)) <= cap for j in c.objects)]


def _fits(f, g, cap):
    return all(len(f.at(j)) + len(g.at(j)) <= cap for j in f.source.objects)


def random_set_functor(c, generator, cap=DEFAULT_SET_SIZE_CAP, attempts=20, budget=20000):
    """A random SetFunctor on `c` with at most `cap` elements per object.

    The kind is drawn first: explicit tables on sets {0, ..., k−1}, a
    corepresentable Hom(x, −), or a coproduct of two corepresentables. On
    C^op the last two are the representable presheaves and their sums.
    Kinds that do not fit under `cap` fall back to tables.
    """
    kind = SET_FUNCTOR_KINDS[int(generator.integers(len(SET_FUNCTOR_KINDS)))]
    if kind != 'tables':
        pool = _corepresentables(c, cap)
        if kind == 'corepresentable' and pool:
            return pool[int(generator.integers(len(pool)))]
        if kind == 'coproduct':
            pairs = [(f, g) for f in pool for g in pool if _fits(f, g, cap)]
            if pairs:
                f, g = pairs[int(generator.integers(len(pairs)))]
                return setops.coproduct(f, g)
    return _random_tables(c, generator, cap, attempts, budget)


def _random_tables(c, generator, cap, attempts, budget):
    """Random tables on sets {0, ..., k−1}.

    Sizes are drawn first; functions for the non-identity morphisms are then
    found by randomized backtracking under the composition constraints.
    When every attempt fails the constant singleton functor is returned.
    """
    steps = c.non_identity_morphisms()
    pos = {f: i for (i, f) in enumerate(steps)}
    triples = [[] for _ in steps]
    for (g, f) in c.composable_pairs():
        h = c.comp(g, f)
        involved = [pos[m] for m in (g, f, h) if m in pos]
        if involved:
            triples[max(involved)].append((g, f, h))
    for _ in range(attempts):
        sets = {x: tuple(range(int(generator.integers(0, cap + 1)))) for x in c.objects}

        def table(m, values):
            if m in pos:
                return values[pos[m]]
            return {e: e for e in sets[c.src(m)]}

        def candidates(k, values):
            s, t = c.ends(steps[k])
            functions = setops.all_functions(sets[s], sets[t])
            return [functions[i] for i in generator.permutation(len(functions))]

        def accept(k, values):
            for (g, f, h) in triples[k]:
                tg, tf, th = table(g, values), table(f, values), table(h, values)
                if any(tg[tf[e]] != th[e] for e in sets[c.src(f)]):
                    return False
            return True
        try:
            values = next(fincat.search(len(steps), candidates, accept, budget), None)
        except BudgetExceeded:
            continue
        if values is not None:
            return fincat.SetFunctor(c, sets, {f: values[pos[f]] for f in steps}, name='random')
    logger.debug('no random functor on %r; using the constant one', c)
    return fincat.constant(c, (0,))


def random_presheaf(c, generator, cap=DEFAULT_SET_SIZE_CAP):
    return random_set_functor(fincat.opposite(c), generator, cap=cap)


def external_product(p, q):
    """The end-convention bifunctor (x, y) ↦ P(x) × Q(y) for P on C^op, Q on C."""
    c = q.source
    base = coends.end_base(c)
    sets = {(x, y): tuple((s, t) for s in p.at(x) for t in q.at(y)) for (x, y) in base.objects}
    maps = {(a, b): {(s, t): (p.apply(a, s), q.apply(b, t)) for (s, t) in sets[base.src((a, b))]}
            for (a, b) in base.morphisms}
    return coends.Bifunctor(fincat.SetFunctor(base, sets, maps, name='P*Q'), c, coends.END)


BIFUNCTOR_KINDS = ('hom', 'constant', 'product', 'random')


def random_bifunctor(c, generator, cap=DEFAULT_SET_SIZE_CAP, convention=coends.END):
    """Draw a bifunctor: Hom, a constant, an external product or a random one."""
    kind = BIFUNCTOR_KINDS[int(generator.integers(len(BIFUNCTOR_KINDS)))]
    if kind == 'hom':
        f = coends.hom_bifunctor(c, coends.END)
    elif kind == 'constant':
        f = coends.constant_bifunctor(c, tuple(range(int(generator.integers(1, cap + 1)))))
    elif kind == 'product':
        f = external_product(random_presheaf(c, generator, cap), random_set_functor(c, generator, cap))
    else:
        base = coends.end_base(c)
        f = coends.Bifunctor(random_set_functor(base, generator, cap=min(cap, 2)), c, coends.END)
    return f if convention == coends.END else f.swap()
