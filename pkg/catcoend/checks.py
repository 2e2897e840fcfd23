# -*- coding: utf-8 -*-
"""Registry of invariants and the suite runner behind `catcoend check`.

Every invariant has a stable index in the registry; instance k of invariant i
draws its data from `corpus.rng(seed, i, k)`, so outcomes do not depend on
which suites run or in which order.
"""
from __future__ import annotations

import dataclasses
import logging

from . import coends, constructions, corpus, fincat, setops, simplicial, weighted
from .errors import CatCoendError

logger = logging.getLogger(__name__)

INSTANCE, CATEGORY, PAIR, ONCE = 'instance', 'category', 'pair', 'once'


@dataclasses.dataclass(frozen=True)
class Invariant:
    name: str
    suite: str
    scope: str
    fn: object


@dataclasses.dataclass(frozen=True)
class Outcome:
    invariant: str
    suite: str
    instance: int
    subject: str
    ok: bool
    detail: tuple = ()
    witness: tuple = ()


REGISTRY = []


def invariant(name, suite, scope=INSTANCE):
    """Register `fn(ctx, k, generator)` as a named invariant of a suite."""
    def register(fn):
        REGISTRY.append(Invariant(name, suite, scope, fn))
        return fn
    return register


class Context(object):
    """The corpus and settings shared by the invariants of one run."""

    def __init__(self, config):
        self.config = config
        self.categories = corpus.categories(config.families())
        self.pairs = corpus.small_pairs(self.categories)
        self.cap = config.set_size_cap

    def category(self, k):
        return self.categories[k % len(self.categories)]

    def pair(self, k):
        return self.pairs[k % len(self.pairs)]

    def subject(self, scope, k):
        if scope in (INSTANCE, CATEGORY):
            return self.category(k).name
        if scope == PAIR:
            c, d = self.pair(k)
            return '{}x{}'.format(c.name, d.name)
        return '-'

    def runs(self, scope):
        if scope == INSTANCE:
            return range(self.config.instances)
        if scope == CATEGORY:
            return range(len(self.categories))
        if scope == PAIR:
            return range(min(self.config.instances, len(self.pairs)) if self.pairs else 0)
        return range(1)


def _verdict(result):
    """Normalize a check result to (ok, detail, witness)."""
    if isinstance(result, setops.Comparison):
        return result.agree, (result.left_size, result.right_size), result.witness
    if isinstance(result, fincat.ValidationReport):
        return result.ok, (result.law,) if result.law else (), result.witness
    if isinstance(result, weighted.CheckReport):
        return result.ok, result.details, result.witness
    if isinstance(result, tuple):
        return result
    return bool(result), (), ()


def _all(named):
    """Combine named results; the first failure supplies the witness."""
    details = []
    for name, result in named:
        ok, detail, witness = _verdict(result)
        details.append((name, detail))
        if not ok:
            return False, tuple(details), (name,) + tuple(witness)
    return True, tuple(details), ()


# Ends and coends ------------------------------------------------------------

@invariant('category_laws', 'ends', CATEGORY)
def _category_laws(ctx, k, generator):
    return fincat.validate_category(ctx.category(k))


@invariant('opposite_involution', 'ends', CATEGORY)
def _opposite_involution(ctx, k, generator):
    c = ctx.category(k)
    op = fincat.opposite(c)
    # relabel drops the cached opposite
    fresh = fincat.relabel(op, {x: x for x in op.objects}, {f: f for f in op.morphisms})
    twice = fincat.opposite(fresh)
    ok = (twice.objects == c.objects and twice.morphisms == c.morphisms
          and twice.identities == c.identities
          and all(twice.ends(f) == c.ends(f) for f in c.morphisms)
          and twice.table() == c.table())
    return ok, (len(c.objects), len(c.morphisms)), () if ok else (c.name,)


def _associator(c, d, e):
    left = fincat.product(fincat.product(c, d), e)
    right = fincat.product(c, fincat.product(d, e))
    return fincat.FinFunctor(left, right,
                             {((x, y), z): (x, (y, z)) for ((x, y), z) in left.objects},
                             {((f, g), h): (f, (g, h)) for ((f, g), h) in left.morphisms})


def _unitors(c):
    one = fincat.terminal_category()
    (unit,), (unit_id,) = one.objects, one.morphisms
    right = fincat.FinFunctor(fincat.product(c, one), c, {(x, unit): x for x in c.objects},
                              {(f, unit_id): f for f in c.morphisms})
    left = fincat.FinFunctor(fincat.product(one, c), c, {(unit, x): x for x in c.objects},
                             {(unit_id, f): f for f in c.morphisms})
    return right, left


@invariant('product_laws', 'ends', PAIR)
def _product_laws(ctx, k, generator):
    c, d = ctx.pair(k)
    named = [('associator', _associator(c, d, c).is_isomorphism())]
    for e in (c, d):
        right, left = _unitors(e)
        named += [('right_unitor', right.is_isomorphism()), ('left_unitor', left.is_isomorphism())]
    return _all(named)


UNIVERSAL_SIZE_LIMIT = 200


@invariant('limit_universal', 'ends')
def _limit_universal(ctx, k, generator):
    functor = corpus.random_set_functor(ctx.category(k), generator, ctx.cap)
    if functor.size() > UNIVERSAL_SIZE_LIMIT:
        return True, ('skipped', functor.size()), ()
    result = setops.limit(functor)
    return setops.limit_is_universal(result, (0, 1), budget=ctx.config.budget), (len(result),), ()


@invariant('colimit_universal', 'ends')
def _colimit_universal(ctx, k, generator):
    functor = corpus.random_set_functor(ctx.category(k), generator, ctx.cap)
    if functor.size() > UNIVERSAL_SIZE_LIMIT:
        return True, ('skipped', functor.size()), ()
    result = setops.colimit(functor)
    return setops.colimit_is_universal(result, (0, 1), budget=ctx.config.budget), (len(result),), ()


@invariant('end_routes', 'ends')
def _end_routes(ctx, k, generator):
    f = corpus.random_bifunctor(ctx.category(k), generator, ctx.cap, coends.END)
    results = coends.end_routes(f, ctx.config.truncation, ctx.config.budget)
    return _all(coends.compare_routes(results).items())


@invariant('coend_routes', 'ends')
def _coend_routes(ctx, k, generator):
    f = corpus.random_bifunctor(ctx.category(k), generator, ctx.cap, coends.COEND)
    results = coends.coend_routes(f, ctx.config.truncation, ctx.config.budget,
                                  mutation=ctx.config.mutation)
    return _all(coends.compare_routes(results).items())


@invariant('end_stability', 'ends')
def _end_stability(ctx, k, generator):
    f = corpus.random_bifunctor(ctx.category(k), generator, ctx.cap, coends.END)
    budget = ctx.config.budget
    levels = [coends.end_via_simplices(f, n, budget=budget, stabilize=False).families
              for n in (1, 2, 3)]
    return _all([('1-2', setops.compare_families(levels[0], levels[1])),
                 ('2-3', setops.compare_families(levels[1], levels[2]))])


@invariant('bousfield_kan', 'ends')
def _bousfield_kan(ctx, k, generator):
    functor = corpus.random_set_functor(ctx.category(k), generator, ctx.cap)
    return coends.check_bk(functor, budget=ctx.config.budget)


@invariant('fubini', 'ends', PAIR)
def _fubini(ctx, k, generator):
    c, d = ctx.pair(k)
    cd = fincat.product(c, d)
    if generator.integers(2):
        f = coends.hom_bifunctor(cd)
    else:
        f = corpus.external_product(corpus.random_presheaf(cd, generator, min(ctx.cap, 2)),
                                    corpus.random_set_functor(cd, generator, min(ctx.cap, 2)))
    report = coends.check_fubini(f, c, d, budget=ctx.config.budget)
    return _all(report.comparisons.items())


@invariant('center', 'ends', CATEGORY)
def _center(ctx, k, generator):
    _, comparison = coends.center_via_nat(ctx.category(k), budget=ctx.config.budget)
    return comparison


# Weighted (co)limits --------------------------------------------------------

@invariant('wlimit_routes', 'weighted')
def _wlimit_routes(ctx, k, generator):
    c = ctx.category(k)
    w = weighted.Weight(corpus.random_set_functor(c, generator, ctx.cap))
    return weighted.compare_wlimit(w, corpus.random_set_functor(c, generator, ctx.cap),
                                   budget=ctx.config.budget)


@invariant('wcolimit_routes', 'weighted')
def _wcolimit_routes(ctx, k, generator):
    c = ctx.category(k)
    w = weighted.Weight(corpus.random_presheaf(c, generator, ctx.cap), weighted.PRESHEAF)
    return weighted.compare_wcolimit(w, corpus.random_set_functor(c, generator, ctx.cap))


@invariant('yoneda', 'weighted', CATEGORY)
def _yoneda(ctx, k, generator):
    c = ctx.category(k)
    cap = min(ctx.cap, 3)
    g = corpus.random_presheaf(c, generator, cap)
    h = corpus.random_set_functor(c, generator, cap)
    named = []
    for x in c.objects:
        presheaf = len(fincat.enumerate_nat(fincat.representable(c, x), g, budget=ctx.config.budget))
        named.append((('y', x), (presheaf == len(g.at(x)), (presheaf, len(g.at(x))), ())))
        functor = len(fincat.enumerate_nat(fincat.corepresentable(c, x), h, budget=ctx.config.budget))
        named.append((('co-y', x), (functor == len(h.at(x)), (functor, len(h.at(x))), ())))
    return _all(named)


@invariant('nat_space', 'weighted')
def _nat_space(ctx, k, generator):
    c = ctx.category(k)
    cap = min(ctx.cap, 3)
    phi = corpus.random_presheaf(c, generator, cap)
    psi = corpus.random_presheaf(c, generator, cap)
    return weighted.nat_space(phi, psi, budget=ctx.config.budget)[2]


@invariant('density', 'weighted')
def _density(ctx, k, generator):
    return weighted.density_check(corpus.random_presheaf(ctx.category(k), generator, ctx.cap))


@invariant('cocompletion', 'weighted')
def _cocompletion(ctx, k, generator):
    w = corpus.random_set_functor(ctx.category(k), generator, min(ctx.cap, 3))
    return weighted.cocompletion_check(w, budget=ctx.config.budget)


@invariant('coend_as_weighted', 'weighted')
def _coend_as_weighted(ctx, k, generator):
    f = corpus.random_bifunctor(ctx.category(k), generator, ctx.cap, coends.COEND)
    return weighted.coend_as_weighted(f)[1]


@invariant('conical', 'weighted')
def _conical(ctx, k, generator):
    c = ctx.category(k)
    psi = corpus.random_set_functor(c, generator, ctx.cap)
    phi = corpus.random_set_functor(c, generator, ctx.cap)
    return _all([('limit', weighted.conical_limit_check(psi)),
                 ('colimit', weighted.conical_colimit_check(phi))])


@invariant('colimit_representability', 'weighted')
def _colimit_representability(ctx, k, generator):
    c = ctx.category(k)
    cap = min(ctx.cap, 2)
    w = weighted.Weight(corpus.random_presheaf(c, generator, cap), weighted.PRESHEAF)
    return weighted.colimit_representability_check(w, corpus.random_set_functor(c, generator, cap))


@invariant('sections', 'weighted')
def _sections(ctx, k, generator):
    w = corpus.random_set_functor(ctx.category(k), generator, min(ctx.cap, 2))
    el = constructions.elements(w, constructions.COVARIANT)
    sections = el.sections(budget=ctx.config.budget)
    families = [tuple(s.ob(x)[1] for x in w.source.objects) for s in sections]
    return setops.compare_families(families, list(setops.limit(w)))


# Simplicial combinatorics and constructions -----------------------------------

@invariant('delta_star_adjunctions', 'simplicial', ONCE)
def _adjunctions(ctx, k, generator):
    top = ctx.config.delta_truncation
    for n in range(top + 1):
        for m in range(top + 1):
            maps = set(simplicial.monotone_maps(n, m))
            for i in range(n + 1):
                table = simplicial.pi_l_bijection(n, i, m)
                if set(table.values()) != maps or len(table) != len(maps):
                    return False, (), ('pi-l', n, i, m)
            for i in range(m + 1):
                table = simplicial.l_lam_bijection(n, m, i)
                if set(table.values()) != set(simplicial.monotone_maps(n, i)) or \
                        len(table) != len(set(table.values())):
                    return False, (), ('l-lambda', n, m, i)
        for i in range(n + 1):
            ident = simplicial.identity(n)
            if simplicial.counit_pi_l(n).after(simplicial.pi(simplicial.unit_pi_l(n, i))) != ident:
                return False, (), ('triangle pi', n, i)
            if simplicial.lam(simplicial.counit_l_lam(n, i)).after(
                    simplicial.unit_l_lam(i)) != simplicial.identity(i):
                return False, (), ('triangle lambda', n, i)
        l_n = simplicial.l(n)
        if simplicial.l(simplicial.counit_pi_l(n)).after(simplicial.unit_pi_l(*l_n)) != \
                simplicial.l(simplicial.identity(n)):
            return False, (), ('triangle l', n)
        if simplicial.counit_l_lam(*l_n).after(simplicial.l(simplicial.unit_l_lam(n))) != \
                simplicial.l(simplicial.identity(n)):
            return False, (), ('triangle l-lambda', n)
    return True, (top,), ()


@invariant('cocartesian', 'simplicial', ONCE)
def _cocartesian(ctx, k, generator):
    top = min(ctx.config.delta_truncation, 2)
    for p in simplicial.delta_star(top).morphisms:
        if simplicial.is_cocartesian(p) != simplicial.has_cocartesian_factorization(p, top):
            return False, (), (str(p),)
    return True, (top,), ()


@invariant('epsilon_maps', 'simplicial', ONCE)
def _epsilon_maps(ctx, k, generator):
    bound = ctx.config.epsilon_bound
    top = (bound - 1) // 2
    for n in range(min(top, 2) + 1):
        for m in range(top + 1):
            for phi in simplicial.monotone_maps(n, m):
                e = simplicial.epsilon(phi, bound)
                if phi.is_lv and not (e.is_lv and e.is_iv):
                    return False, (), ('lv', str(phi))
                if e.after(simplicial.iota(n)) != simplicial.iota(m).after(phi):
                    return False, (), ('iota', str(phi))
                if e.after(simplicial.rho(n)) != simplicial.rho(m).after(simplicial.rev(phi)):
                    return False, (), ('rho', str(phi))
                if simplicial.rev(simplicial.rev(phi)) != phi or \
                        simplicial.rev(phi).is_iv != phi.is_lv:
                    return False, (), ('rev', str(phi))
                for psi in simplicial.monotone_maps(m, m):
                    if simplicial.epsilon(psi.after(phi), bound) != \
                            simplicial.epsilon(psi, bound).after(e):
                        return False, (), ('functor', str(phi), str(psi))
    return True, (bound,), ()


@invariant('twisted_chain', 'simplicial', ONCE)
def _twisted_chain(ctx, k, generator):
    for n in range(4):
        tw = constructions.twisted(fincat.chain(n)).carrier
        for (i, j) in tw.objects:
            for (i2, j2) in tw.objects:
                expected = 1 if i2 <= i <= j <= j2 else 0
                if len(tw.hom((i, j), (i2, j2))) != expected:
                    return False, (), (n, (i, j), (i2, j2))
        if tw.terminal_objects() != [(0, n)]:
            return False, (), (n, 'terminal', tuple(tw.terminal_objects()))
    return True, (3,), ()


@invariant('twisted_opposite', 'simplicial', CATEGORY)
def _twisted_opposite(ctx, k, generator):
    c = ctx.category(k)
    left = constructions.twisted(c, constructions.LEFT)
    right = constructions.twisted(c, constructions.RIGHT)
    return _all([('opposite', right.carrier == fincat.opposite(left.carrier)),
                 ('eta_l', left.eta.validate()),
                 ('eta_r', right.eta.validate())])


@invariant('twisted_strings', 'simplicial', CATEGORY)
def _twisted_strings(ctx, k, generator):
    c = ctx.category(k)
    return _all([('level{}'.format(n),
                  constructions.twisted_string_bijection(c, n, budget=ctx.config.budget)[1])
                 for n in (0, 1)])


@invariant('twisted_square', 'simplicial', CATEGORY)
def _twisted_square(ctx, k, generator):
    functor, upper, lower = constructions.twisted_square(
        ctx.category(k), 1, budget=ctx.config.budget, bound=ctx.config.epsilon_bound)
    return _all([('functor', functor.validate()), ('square', upper == lower)])


@invariant('vertex_functors', 'simplicial', CATEGORY)
def _vertex_functors(ctx, k, generator):
    s = constructions.simplices(ctx.category(k), ctx.config.truncation, budget=ctx.config.budget)
    lv, iv = constructions.last_vertex(s), constructions.initial_vertex(s)
    named = [('level', s.level.validate()), ('last', lv.validate()), ('initial', iv.validate())]
    for m in s.carrier.morphisms:
        if m.phi.is_lv and not s.base.is_identity(lv.mor(m)):
            return False, (), ('lv', m)
        if m.phi.is_iv and not s.base.is_identity(iv.mor(m)):
            return False, (), ('iv', m)
    return _all(named)


@invariant('reverse_simplices', 'simplicial', CATEGORY)
def _reverse_simplices(ctx, k, generator):
    functor = constructions.reverse_simplices(ctx.category(k), ctx.config.truncation,
                                              budget=ctx.config.budget)
    return functor.is_isomorphism()


@invariant('elements_of_hom', 'simplicial', CATEGORY)
def _elements_of_hom(ctx, k, generator):
    return constructions.elements_of_hom(ctx.category(k)).is_isomorphism()


# Runner -----------------------------------------------------------------------

def run(config, ctx=None):
    """Run the selected suites and yield an Outcome per invariant instance.

    `ctx` replaces the corpus built from `config` when given.
    """
    ctx = ctx or Context(config)
    for index, inv in enumerate(REGISTRY):
        if config.suite not in ('all', inv.suite):
            continue
        logger.info('checking %s', inv.name)
        for k in ctx.runs(inv.scope):
            subject = ctx.subject(inv.scope, k)
            try:
                ok, detail, witness = _verdict(inv.fn(ctx, k, corpus.rng(config.seed, index, k)))
            except CatCoendError as e:
                ok, detail, witness = False, (), (type(e).__name__, str(e))
            yield Outcome(inv.name, inv.suite, k, subject, bool(ok), tuple(detail), tuple(witness))


def summarize(outcomes):
    """Pass/fail counts per invariant, in registry order."""
    counts = {}
    for o in outcomes:
        entry = counts.setdefault(o.invariant, [o.suite, 0, 0])
        entry[1 if o.ok else 2] += 1
    return [(name, suite, passed, failed) for (name, (suite, passed, failed)) in counts.items()]
