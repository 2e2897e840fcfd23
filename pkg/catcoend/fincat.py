# -*- coding: utf-8 -*-
"""Finite categories, functors between them, and Set-valued functors.

A `FinCat` is given by tables: an ordered list of objects, an ordered list
of morphisms with their sources and targets, an identity for every object and
a composition defined on composable pairs. Constructed categories whose
composition is derivable (products, opposites, carriers of the constructions
module) may give the composition as a callable instead of a table.

Identifiers are arbitrary hashable values. Builders use strings for the
categories people write down and tuples for derived ones, so every
construction names its objects and morphisms deterministically from its
inputs.
"""
from __future__ import annotations

import dataclasses
import itertools
import logging

from .config import DEFAULT_BUDGET
from .errors import BudgetExceeded, CategoryError, FunctorError, ShapeError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validation: pass, or the first violated law."""
    ok: bool
    law: str | None = None
    witness: tuple = ()
    message: str = ''

    def __bool__(self):
        return self.ok


PASS = ValidationReport(True)


def _fail(law, witness, message):
    return ValidationReport(False, law, tuple(witness), message)


def search(n, candidates, accept, budget=None):
    """Depth-first search over assignments of `n` positions.

    Args:
        n (int): number of positions
        candidates (callable): `candidates(k, values)` returns the values to
                               try at position k given positions < k
        accept (callable): `accept(k, values)` checks the constraints that
                           become decidable once position k is set
        budget (int): maximum number of candidates tried; None for no cap

    Returns:
        generator: tuples of accepted full assignments, in search order
    """
    if n == 0:
        yield ()
        return
    values = [None] * n
    iters = [None] * n
    tried = 0
    k = 0
    iters[0] = iter(candidates(0, values))
    while k >= 0:
        advanced = False
        for v in iters[k]:
            tried += 1
            if budget is not None and tried > budget:
                raise BudgetExceeded(
                    'Enumeration exceeded the budget of {} candidates.'.format(budget))
            values[k] = v
            if accept(k, values):
                advanced = True
                break
        if not advanced:
            values[k] = None
            k -= 1
            continue
        if k == n - 1:
            yield tuple(values)
            continue
        k += 1
        iters[k] = iter(candidates(k, values))
    logger.debug('search over %d positions tried %d candidates', n, tried)


class FinCat(object):
    """A finite category presented by object, morphism and composition tables.

    :param objects: ordered object identifiers
    :param morphisms: ordered (id, source, target) triples
    :param identities: mapping object -> identity morphism id
    :param compose: mapping (g, f) -> g∘f, or a callable of (g, f)
    """

    def __init__(self, objects, morphisms, identities, compose, name=None):
        self._objects = tuple(objects)
        if len(set(self._objects)) != len(self._objects):
            raise CategoryError('Duplicate object identifiers.')
        obset = set(self._objects)
        self._ends = {}
        order = []
        for (f, s, t) in morphisms:
            if f in self._ends:
                raise CategoryError('Duplicate morphism identifier {!r}.'.format(f))
            if s not in obset or t not in obset:
                raise CategoryError('Morphism {!r} has an endpoint that is not an object.'.format(f))
            self._ends[f] = (s, t)
            order.append(f)
        self._morphisms = tuple(order)
        self._identities = {}
        for x in self._objects:
            if x not in identities:
                raise CategoryError('Object {!r} has no identity.'.format(x))
            i = identities[x]
            if self._ends.get(i) != (x, x):
                raise CategoryError('Identity of {!r} is not an endomorphism of it.'.format(x))
            self._identities[x] = i
        if callable(compose):
            self._compose_fn, self._table = compose, None
        else:
            self._compose_fn, self._table = None, dict(compose)
        self.name = name
        self._hom = None
        self._out = None
        self._in = None
        self._op = None
        self._identity_set = frozenset(self._identities.values())

    @property
    def objects(self):
        return self._objects

    @property
    def morphisms(self):
        return self._morphisms

    def src(self, f):
        return self._ends[f][0]

    def dst(self, f):
        return self._ends[f][1]

    def ends(self, f):
        return self._ends[f]

    def has_object(self, x):
        return x in self._identities

    def has_morphism(self, f):
        return f in self._ends

    def identity(self, x):
        return self._identities[x]

    @property
    def identities(self):
        return dict(self._identities)

    def is_identity(self, f):
        return f in self._identity_set

    def comp(self, g, f):
        """Return g∘f.

        Raises:
            CategoryError: if the pair is not composable or not in the table
        """
        if self._table is not None:
            try:
                return self._table[(g, f)]
            except KeyError:
                raise CategoryError('No composite recorded for {!r} after {!r}.'.format(g, f))
        if self.dst(f) != self.src(g):
            raise CategoryError('{!r} and {!r} are not composable.'.format(g, f))
        return self._compose_fn(g, f)

    def compose_path(self, path):
        """Compose a nonempty list of morphisms given in diagrammatic order."""
        result = path[0]
        for g in path[1:]:
            result = self.comp(g, result)
        return result

    def defined_pairs(self):
        """Pairs for which a composite is recorded."""
        if self._table is not None:
            return list(self._table)
        return list(self.composable_pairs())

    def table(self):
        """Return the composition as a dict over all composable pairs."""
        if self._table is not None:
            return dict(self._table)
        return {(g, f): self._compose_fn(g, f) for (g, f) in self.composable_pairs()}

    def _index(self):
        if self._hom is not None:
            return
        hom, out, inc = {}, {x: [] for x in self._objects}, {x: [] for x in self._objects}
        for f in self._morphisms:
            s, t = self._ends[f]
            hom.setdefault((s, t), []).append(f)
            out[s].append(f)
            inc[t].append(f)
        self._hom = {k: tuple(v) for (k, v) in hom.items()}
        self._out = {k: tuple(v) for (k, v) in out.items()}
        self._in = {k: tuple(v) for (k, v) in inc.items()}

    def hom(self, x, y):
        self._index()
        return self._hom.get((x, y), ())

    def outgoing(self, x):
        self._index()
        return self._out[x]

    def incoming(self, x):
        self._index()
        return self._in[x]

    def composable_pairs(self):
        for f in self._morphisms:
            for g in self.outgoing(self.dst(f)):
                yield (g, f)

    def is_terminal(self, x):
        return all(len(self.hom(y, x)) == 1 for y in self._objects)

    def is_initial(self, x):
        return all(len(self.hom(x, y)) == 1 for y in self._objects)

    def terminal_objects(self):
        return [x for x in self._objects if self.is_terminal(x)]

    def initial_objects(self):
        return [x for x in self._objects if self.is_initial(x)]

    def non_identity_morphisms(self):
        return [f for f in self._morphisms if not self.is_identity(f)]

    def _signature(self):
        return (self._objects, self._morphisms)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FinCat):
            return NotImplemented
        if self._signature() != other._signature():
            return False
        if self._ends != other._ends or self._identities != other._identities:
            return False
        if self._table is not None and other._table is not None:
            return self._table == other._table
        try:
            return all(self.comp(g, f) == other.comp(g, f)
                       for (g, f) in self.composable_pairs())
        except CategoryError:
            return False

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        return '<FinCat {} [{} objects, {} morphisms]>'.format(
            self.name or '?', len(self._objects), len(self._morphisms))


def validate_category(c):
    """Check the category laws on every morphism, pair and triple.

    Identity laws are checked first, then closure of the composition table,
    then associativity.

    Args:
        c (FinCat): category to check

    Returns:
        ValidationReport: PASS or the first violated law with its witnesses
    """
    for f in c.morphisms:
        x, y = c.ends(f)
        for pair in ((c.identity(y), f), (f, c.identity(x))):
            try:
                h = c.comp(*pair)
            except CategoryError:
                return _fail('closure', pair, 'composite of {!r} after {!r} is missing'.format(*pair))
            if h != f:
                return _fail('identity', (f,) + pair,
                             'identity law fails at {!r}: got {!r}'.format(f, h))
    for (g, f) in c.defined_pairs():
        if not (c.has_morphism(g) and c.has_morphism(f)) or c.dst(f) != c.src(g):
            return _fail('closure', (g, f), 'composite recorded for a non-composable pair')
    for (g, f) in c.composable_pairs():
        try:
            h = c.comp(g, f)
        except CategoryError:
            return _fail('closure', (g, f), 'composite of {!r} after {!r} is missing'.format(g, f))
        if not c.has_morphism(h) or c.ends(h) != (c.src(f), c.dst(g)):
            return _fail('closure', (g, f, h), 'composite lands outside hom({!r}, {!r})'.format(
                c.src(f), c.dst(g)))
    for (g, f) in c.composable_pairs():
        gf = c.comp(g, f)
        for h in c.outgoing(c.dst(g)):
            if c.comp(h, gf) != c.comp(c.comp(h, g), f):
                return _fail('associativity', (h, g, f),
                             'associativity fails at ({!r}, {!r}, {!r})'.format(h, g, f))
    return PASS


def opposite(c):
    """Return C^op: same identifiers, endpoints and composition order swapped."""
    if c._op is not None:
        return c._op
    morphisms = [(f, c.dst(f), c.src(f)) for f in c.morphisms]
    if c._table is not None:
        compose = {(f, g): h for ((g, f), h) in c._table.items()}
    else:
        def compose(g, f):
            return c.comp(f, g)
    name = c.name[:-3] if c.name and c.name.endswith('^op') else (
        '{}^op'.format(c.name) if c.name else None)
    op = FinCat(c.objects, morphisms, c.identities, compose, name=name)
    op._op = c
    c._op = op
    return op


def product(c, d):
    """Return C × D with pair identifiers and componentwise composition."""
    objects = list(itertools.product(c.objects, d.objects))
    morphisms = [((f, g), (c.src(f), d.src(g)), (c.dst(f), d.dst(g)))
                 for (f, g) in itertools.product(c.morphisms, d.morphisms)]
    identities = {(x, y): (c.identity(x), d.identity(y)) for (x, y) in objects}
    if c._table is not None and d._table is not None:
        compose = {((g1, g2), (f1, f2)): (h1, h2)
                   for ((g1, f1), h1) in c._table.items()
                   for ((g2, f2), h2) in d._table.items()}
    else:
        def compose(g, f):
            return (c.comp(g[0], f[0]), d.comp(g[1], f[1]))
    name = '{}x{}'.format(c.name or '?', d.name or '?')
    return FinCat(objects, morphisms, identities, compose, name=name)


def relabel(c, objects, morphisms, name=None):
    """Return a copy of `c` with identifiers renamed by the given maps."""
    new_morphisms = [(morphisms[f], objects[c.src(f)], objects[c.dst(f)]) for f in c.morphisms]
    identities = {objects[x]: morphisms[c.identity(x)] for x in c.objects}
    compose = {(morphisms[g], morphisms[f]): morphisms[h] for ((g, f), h) in c.table().items()}
    return FinCat([objects[x] for x in c.objects], new_morphisms, identities, compose,
                  name=name or c.name)


# Builders ---------------------------------------------------------------

def discrete(objects, name=None):
    objects = list(objects)
    ids = {x: ('id', x) for x in objects}
    return FinCat(objects, [(ids[x], x, x) for x in objects], ids,
                  {(ids[x], ids[x]): ids[x] for x in objects}, name=name or 'discrete')


def poset(elements, relations, name=None):
    """Category of a finite poset; the morphism x → y is named (x, y).

    Args:
        elements (list): the elements, in order
        relations (list): generating pairs (x, y) meaning x ≤ y

    Raises:
        CategoryError: if the generated preorder is not antisymmetric
    """
    elements = list(elements)
    leq = {(x, x) for x in elements} | set(relations)
    changed = True
    while changed:
        changed = False
        for (x, y) in list(leq):
            for (y2, z) in list(leq):
                if y == y2 and (x, z) not in leq:
                    leq.add((x, z))
                    changed = True
    for (x, y) in leq:
        if x != y and (y, x) in leq:
            raise CategoryError('Relations are not antisymmetric at {!r}, {!r}.'.format(x, y))
    morphisms = [((x, y), x, y) for x in elements for y in elements if (x, y) in leq]
    compose = {((y, z), (x, y2)): (x, z)
               for (y, z) in leq for (x, y2) in leq if y == y2}
    return FinCat(elements, morphisms, {x: (x, x) for x in elements}, compose, name=name)


def chain(n):
    """The ordinal [n] = {0 < 1 < ... < n} as a category."""
    return poset(range(n + 1), [(i, i + 1) for i in range(n)], name='[{}]'.format(n))


def monoid(elements, multiply, unit, obj='*', name=None):
    """One-object category of a finite monoid.

    Args:
        elements (list): monoid elements; each becomes a morphism id
        multiply (callable): `multiply(g, f)` is the product g·f
        unit: the unit element; it becomes the identity
    """
    elements = list(elements)
    compose = {(g, f): multiply(g, f) for g in elements for f in elements}
    return FinCat([obj], [(e, obj, obj) for e in elements], {obj: unit}, compose, name=name)


def cyclic_group(n, obj='*'):
    """Z/n as a one-object category; morphisms 'id_*', 't', 't2', ..."""
    names = ['id_{}'.format(obj)] + ['t' if k == 1 else 't{}'.format(k) for k in range(1, n)]

    def multiply(g, f):
        return names[(names.index(g) + names.index(f)) % n]
    return monoid(names, multiply, names[0], obj=obj, name='Z/{}'.format(n))


def idempotent_monoid(obj='*'):
    """The two-element monoid {1, e} with e·e = e."""
    unit = 'id_{}'.format(obj)

    def multiply(g, f):
        return unit if g == f == unit else 'e'
    return monoid([unit, 'e'], multiply, unit, obj=obj, name='idem')


def free_category(vertices, edges, name=None):
    """Free category on an acyclic quiver.

    Identities are named 'id_<vertex>'; an edge keeps its id; a longer path
    e1, ..., ek (diagrammatic order) is named 'ek.....e1', i.e. in
    composition order.

    Args:
        vertices (list): vertex identifiers
        edges (list): (id, source, target) triples

    Raises:
        CategoryError: if the quiver has a directed cycle
    """
    vertices = list(vertices)
    out = {v: [] for v in vertices}
    for (e, s, t) in edges:
        out[s].append((e, t))
    paths = []

    def walk(start, current, path, seen):
        for (e, t) in out[current]:
            if t in seen:
                raise CategoryError('Quiver has a cycle through {!r}.'.format(t))
            p = path + [e]
            paths.append((tuple(p), start, t))
            walk(start, t, p, seen | {t})

    for v in vertices:
        walk(v, v, [], {v})
    ids = {v: 'id_{}'.format(v) for v in vertices}

    def pname(p):
        return '.'.join(reversed(p))
    morphisms = [(ids[v], v, v) for v in vertices] + [(pname(p), s, t) for (p, s, t) in paths]
    by_name = {pname(p): p for (p, _, _) in paths}
    ends = {m: (s, t) for (m, s, t) in morphisms}
    compose = {}
    for (g, (gs, gt)) in ends.items():
        for (f, (fs, ft)) in ends.items():
            if ft != gs:
                continue
            if g in ids.values():
                compose[(g, f)] = f
            elif f in ids.values():
                compose[(g, f)] = g
            else:
                compose[(g, f)] = pname(by_name[f] + by_name[g])
    return FinCat(vertices, morphisms, ids, compose, name=name)


def walking_arrow():
    """The category 2 = {a, b, u: a → b}."""
    return free_category(['a', 'b'], [('u', 'a', 'b')], name='2')


def walking_isomorphism():
    """Two objects a, b and inverse isomorphisms u: a → b, v: b → a."""
    morphisms = [('id_a', 'a', 'a'), ('id_b', 'b', 'b'), ('u', 'a', 'b'), ('v', 'b', 'a')]
    ends = {m: (s, t) for (m, s, t) in morphisms}
    compose = {}
    for (g, (gs, gt)) in ends.items():
        for (f, (fs, ft)) in ends.items():
            if ft != gs:
                continue
            if g.startswith('id_'):
                compose[(g, f)] = f
            elif f.startswith('id_'):
                compose[(g, f)] = g
            else:
                compose[(g, f)] = 'id_{}'.format(fs)
    return FinCat(['a', 'b'], morphisms, {'a': 'id_a', 'b': 'id_b'}, compose, name='iso')


def terminal_category():
    return FinCat(['*'], [('id_*', '*', '*')], {'*': 'id_*'},
                  {('id_*', 'id_*'): 'id_*'}, name='1')


# Functors -------------------------------------------------------------

class FinFunctor(object):
    """A functor between finite categories, given by object and morphism maps."""

    def __init__(self, source, target, objects, morphisms, name=None):
        self.source = source
        self.target = target
        self._ob = dict(objects)
        self._mor = dict(morphisms)
        self.name = name

    def ob(self, x):
        return self._ob[x]

    def mor(self, f):
        return self._mor[f]

    @property
    def object_map(self):
        return dict(self._ob)

    @property
    def morphism_map(self):
        return dict(self._mor)

    def validate(self):
        """Check totality, endpoints, identities and composition exhaustively."""
        s, t = self.source, self.target
        for x in s.objects:
            if x not in self._ob or not t.has_object(self._ob[x]):
                return _fail('totality', (x,), 'object {!r} has no image'.format(x))
        for f in s.morphisms:
            if f not in self._mor or not t.has_morphism(self._mor[f]):
                return _fail('totality', (f,), 'morphism {!r} has no image'.format(f))
            a, b = s.ends(f)
            if t.ends(self._mor[f]) != (self._ob[a], self._ob[b]):
                return _fail('endpoints', (f,), 'image of {!r} has the wrong endpoints'.format(f))
        for x in s.objects:
            if self._mor[s.identity(x)] != t.identity(self._ob[x]):
                return _fail('identity', (x,), 'identity of {!r} is not preserved'.format(x))
        for (g, f) in s.composable_pairs():
            if self._mor[s.comp(g, f)] != t.comp(self._mor[g], self._mor[f]):
                return _fail('composition', (g, f),
                             'composite of {!r} after {!r} is not preserved'.format(g, f))
        return PASS

    def then(self, other):
        """Return other∘self."""
        if self.target != other.source:
            raise FunctorError('Functors are not composable.')
        return FinFunctor(self.source, other.target,
                          {x: other._ob[y] for (x, y) in self._ob.items()},
                          {f: other._mor[g] for (f, g) in self._mor.items()})

    def opposite(self):
        return FinFunctor(opposite(self.source), opposite(self.target), self._ob, self._mor,
                          name='{}^op'.format(self.name) if self.name else None)

    def is_isomorphism(self):
        return (bool(self.validate())
                and len(set(self._ob.values())) == len(self.target.objects) == len(self._ob)
                and len(set(self._mor.values())) == len(self.target.morphisms) == len(self._mor))

    def inverse(self):
        if not self.is_isomorphism():
            raise FunctorError('Functor is not an isomorphism.')
        return FinFunctor(self.target, self.source,
                          {y: x for (x, y) in self._ob.items()},
                          {g: f for (f, g) in self._mor.items()})

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self._ob == other._ob and self._mor == other._mor)

    def __hash__(self):
        return hash((tuple(sorted(map(repr, self._ob.items()))),))

    def __repr__(self):
        return '<FinFunctor {} : {!r} -> {!r}>'.format(self.name or '', self.source, self.target)


def identity_functor(c):
    return FinFunctor(c, c, {x: x for x in c.objects}, {f: f for f in c.morphisms}, name='id')


def pairing(f, g):
    """Return <f, g>: C → D × E for functors f: C → D and g: C → E."""
    if f.source != g.source:
        raise FunctorError('Paired functors need a common source.')
    return FinFunctor(f.source, product(f.target, g.target),
                      {x: (f.ob(x), g.ob(x)) for x in f.source.objects},
                      {m: (f.mor(m), g.mor(m)) for m in f.source.morphisms})


def swap_functor(c, d):
    """The isomorphism C × D → D × C."""
    cd, dc = product(c, d), product(d, c)
    return FinFunctor(cd, dc, {(x, y): (y, x) for (x, y) in cd.objects},
                      {(f, g): (g, f) for (f, g) in cd.morphisms}, name='swap')


def functor_category_objects(c, d, budget=DEFAULT_BUDGET):
    """Enumerate all functors C → D.

    Objects of C are assigned in order; each morphism is assigned as soon as
    both of its endpoints are, choosing among hom-sets of D and filtering by
    identities and by every composite whose three morphisms are assigned.

    Args:
        c (FinCat): source category
        d (FinCat): target category
        budget (int): maximum number of candidates tried

    Returns:
        list: every FinFunctor from C to D, in search order

    Raises:
        BudgetExceeded: if the search tries more than `budget` candidates
    """
    oidx = {x: i for (i, x) in enumerate(c.objects)}
    steps = []
    for k, x in enumerate(c.objects):
        steps.append(('ob', x))
        for f in c.morphisms:
            s, t = oidx[c.src(f)], oidx[c.dst(f)]
            if max(s, t) == k:
                steps.append(('mor', f))
    pos = {item: i for (i, item) in enumerate(steps)}
    triples = [[] for _ in steps]
    for (g, f) in c.composable_pairs():
        h = c.comp(g, f)
        last = max(pos[('mor', g)], pos[('mor', f)], pos[('mor', h)])
        triples[last].append((pos[('mor', g)], pos[('mor', f)], pos[('mor', h)]))

    def candidates(k, values):
        kind, item = steps[k]
        if kind == 'ob':
            return d.objects
        if c.is_identity(item):
            return (d.identity(values[pos[('ob', c.src(item))]]),)
        return d.hom(values[pos[('ob', c.src(item))]], values[pos[('ob', c.dst(item))]])

    def accept(k, values):
        return all(values[h] == d.comp(values[g], values[f]) for (g, f, h) in triples[k])

    result = []
    for values in search(len(steps), candidates, accept, budget):
        ob = {item: values[i] for (i, (kind, item)) in enumerate(steps) if kind == 'ob'}
        mor = {item: values[i] for (i, (kind, item)) in enumerate(steps) if kind == 'mor'}
        result.append(FinFunctor(c, d, ob, mor))
    logger.debug('%d functors %r -> %r', len(result), c, d)
    return result


# Set-valued functors -----------------------------------------------------

class FunctionTable(object):
    """A function between finite sets given by its table."""

    def __init__(self, source, target, values):
        self.source = tuple(source)
        self.target = tuple(target)
        self._values = dict(values)
        targets = set(self.target)
        for x in self.source:
            if x not in self._values:
                raise ShapeError('Function is undefined at {!r}.'.format(x))
            if self._values[x] not in targets:
                raise ShapeError('Value {!r} at {!r} is outside the target.'.format(self._values[x], x))

    @classmethod
    def identity(cls, elements):
        return cls(elements, elements, {x: x for x in elements})

    def __call__(self, x):
        return self._values[x]

    def items(self):
        return [(x, self._values[x]) for x in self.source]

    def then(self, other):
        """Return other∘self."""
        return FunctionTable(self.source, other.target, {x: other(self(x)) for x in self.source})

    def __eq__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self._values == other._values)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.items())))

    def __repr__(self):
        return '<FunctionTable {}>'.format(dict(self.items()))


class SetFunctor(object):
    """A functor from a finite category to finite sets.

    Sets are tuples of hashable elements; every morphism carries a function
    table. Tables for identity morphisms may be omitted and are filled in.
    """

    def __init__(self, source, sets, maps, name=None):
        self.source = source
        try:
            self._sets = {x: tuple(sets[x]) for x in source.objects}
        except KeyError as e:
            raise FunctorError('No set assigned to object {!r}.'.format(e.args[0]))
        self._maps = {}
        for f in source.morphisms:
            if f in maps:
                self._maps[f] = dict(maps[f])
            elif source.is_identity(f):
                self._maps[f] = {e: e for e in self._sets[source.src(f)]}
            else:
                raise FunctorError('No function assigned to morphism {!r}.'.format(f))
        self.name = name

    @classmethod
    def _trusted(cls, source, sets, maps, name=None):
        # Skips copying; callers pass tables they do not mutate afterwards.
        obj = cls.__new__(cls)
        obj.source, obj._sets, obj._maps, obj.name = source, sets, maps, name
        return obj

    def at(self, x):
        return self._sets[x]

    def apply(self, f, e):
        return self._maps[f][e]

    def fmap(self, f):
        return dict(self._maps[f])

    def function(self, f):
        s, t = self.source.ends(f)
        return FunctionTable(self._sets[s], self._sets[t], self._maps[f])

    def size(self):
        return sum(len(v) for v in self._sets.values())

    def elements(self):
        """The disjoint union as (object, element) pairs in canonical order."""
        return [(x, e) for x in self.source.objects for e in self._sets[x]]

    def validate(self):
        """Check totality, identities and composition exhaustively."""
        c = self.source
        for f in c.morphisms:
            s, t = c.ends(f)
            table, target = self._maps[f], set(self._sets[t])
            for e in self._sets[s]:
                if e not in table or table[e] not in target:
                    return _fail('totality', (f, e), 'F({!r}) is not a function at {!r}'.format(f, e))
        for x in c.objects:
            table = self._maps[c.identity(x)]
            for e in self._sets[x]:
                if table[e] != e:
                    return _fail('identity', (x, e), 'F(id) moves {!r} at {!r}'.format(e, x))
        for (g, f) in c.composable_pairs():
            h = c.comp(g, f)
            for e in self._sets[c.src(f)]:
                if self._maps[h][e] != self._maps[g][self._maps[f][e]]:
                    return _fail('composition', (g, f, e),
                                 'F({!r}∘{!r}) differs at {!r}'.format(g, f, e))
        return PASS

    def pullback(self, functor):
        """Return the composite self∘functor."""
        if functor.target != self.source:
            raise FunctorError('Cannot precompose: target of the functor is not the base.')
        return SetFunctor._trusted(
            functor.source,
            {x: self._sets[functor.ob(x)] for x in functor.source.objects},
            {f: self._maps[functor.mor(f)] for f in functor.source.morphisms})

    def relabel(self, category, objects, morphisms, elements=None):
        """Transport along identifier renamings of the base and elements."""
        elements = elements or (lambda x, e: e)
        sets = {objects[x]: tuple(elements(x, e) for e in self._sets[x]) for x in self.source.objects}
        maps = {}
        for f in self.source.morphisms:
            s, t = self.source.ends(f)
            maps[morphisms[f]] = {elements(s, e): elements(t, v) for (e, v) in self._maps[f].items()}
        return SetFunctor(category, sets, maps)

    def __eq__(self, other):
        if not isinstance(other, SetFunctor):
            return NotImplemented
        return (self.source == other.source and self._sets == other._sets
                and self._maps == other._maps)

    def __hash__(self):
        return hash(tuple(self._sets.items()))

    def __repr__(self):
        sizes = ', '.join('{!r}: {}'.format(x, len(v)) for (x, v) in self._sets.items())
        return '<SetFunctor {}on {!r} {{{}}}>'.format(
            self.name + ' ' if self.name else '', self.source, sizes)


def constant(c, elements, name=None):
    elements = tuple(elements)
    identity = {e: e for e in elements}
    return SetFunctor(c, {x: elements for x in c.objects},
                      {f: identity for f in c.morphisms}, name=name or 'const')


def representable(c, x):
    """The presheaf Hom(−, x), a SetFunctor on C^op; u acts by h ↦ h∘u."""
    op = opposite(c)
    sets = {j: c.hom(j, x) for j in c.objects}
    maps = {u: {h: c.comp(h, u) for h in sets[c.dst(u)]} for u in c.morphisms}
    return SetFunctor(op, sets, maps, name='Hom(-,{})'.format(x))


def corepresentable(c, x):
    """The functor Hom(x, −) on C; u acts by h ↦ u∘h."""
    sets = {j: c.hom(x, j) for j in c.objects}
    maps = {u: {h: c.comp(u, h) for h in sets[c.src(u)]} for u in c.morphisms}
    return SetFunctor(c, sets, maps, name='Hom({},-)'.format(x))


def hom_functor(c):
    """Hom as a SetFunctor on C^op × C; (a, b) acts by h ↦ b∘h∘a."""
    base = product(opposite(c), c)
    sets = {(x, y): c.hom(x, y) for (x, y) in base.objects}
    maps = {}
    for (a, b) in base.morphisms:
        x, y = base.src((a, b))
        maps[(a, b)] = {h: c.comp(b, c.comp(h, a)) for h in sets[(x, y)]}
    return SetFunctor(base, sets, maps, name='Hom')


class NatTransf(object):
    """A natural transformation between SetFunctors on a shared base."""

    def __init__(self, source, target, components):
        if source.source != target.source:
            raise FunctorError('Natural transformations need functors on a shared base.')
        self.source = source
        self.target = target
        self._components = {x: dict(components[x]) for x in source.source.objects}

    def component(self, x):
        return dict(self._components[x])

    def __call__(self, x, e):
        return self._components[x][e]

    def validate(self):
        f, g = self.source, self.target
        c = f.source
        for x in c.objects:
            target = set(g.at(x))
            for e in f.at(x):
                if self._components[x].get(e) not in target:
                    return _fail('totality', (x, e), 'component at {!r} is not a function'.format(x))
        for u in c.morphisms:
            s, t = c.ends(u)
            for e in f.at(s):
                if g.apply(u, self._components[s][e]) != self._components[t][f.apply(u, e)]:
                    return _fail('naturality', (u, e), 'square for {!r} fails at {!r}'.format(u, e))
        return PASS

    def then(self, other):
        """Return other∘self (vertical composition)."""
        return NatTransf(self.source, other.target,
                         {x: {e: other(x, v) for (e, v) in self._components[x].items()}
                          for x in self.source.source.objects})

    def key(self):
        """Hashable normal form: components in base order."""
        c = self.source.source
        return tuple(tuple(self._components[x][e] for e in self.source.at(x)) for x in c.objects)

    def __eq__(self, other):
        if not isinstance(other, NatTransf):
            return NotImplemented
        return self.source == other.source and self.target == other.target and \
            self._components == other._components

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return '<NatTransf {!r}>'.format(self._components)


def enumerate_nat(f, g, budget=DEFAULT_BUDGET):
    """Enumerate all natural transformations f ⇒ g.

    Components are chosen object by object among all functions f(x) → g(x);
    a naturality square is checked as soon as both of its components are
    chosen.

    Raises:
        FunctorError: if the functors live on different bases
        BudgetExceeded: if more than `budget` component candidates are tried
    """
    if f.source != g.source:
        raise FunctorError('enumerate_nat needs functors on a shared base.')
    c = f.source
    oidx = {x: i for (i, x) in enumerate(c.objects)}
    squares = [[] for _ in c.objects]
    for u in c.morphisms:
        s, t = oidx[c.src(u)], oidx[c.dst(u)]
        squares[max(s, t)].append((u, s, t))

    def candidates(k, values):
        x = c.objects[k]
        dom, cod = f.at(x), g.at(x)
        return (dict(zip(dom, image)) for image in itertools.product(cod, repeat=len(dom)))

    def accept(k, values):
        for (u, s, t) in squares[k]:
            for e in f.at(c.objects[s]):
                if g.apply(u, values[s][e]) != values[t][f.apply(u, e)]:
                    return False
        return True

    result = [NatTransf(f, g, dict(zip(c.objects, values)))
              for values in search(len(c.objects), candidates, accept, budget)]
    logger.debug('%d natural transformations', len(result))
    return result
