# -*- coding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import unittest

from catcoend import fincat
from catcoend.errors import BudgetExceeded, CategoryError, FunctorError


def _corrupt(c, pair, value):
    table = c.table()
    if value is None:
        del table[pair]
    else:
        table[pair] = value
    morphisms = [(f, c.src(f), c.dst(f)) for f in c.morphisms]
    return fincat.FinCat(c.objects, morphisms, c.identities, table, name='corrupt')


def _arrow_functor(c, sets, u_table):
    return fincat.SetFunctor(c, sets, {'u': u_table})


class TestValidateCategory(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()

    def test_terminal(self):
        self.assertTrue(fincat.validate_category(fincat.terminal_category()))

    def test_walking_arrow(self):
        self.assertTrue(fincat.validate_category(self.two))

    def test_identity_law(self):
        report = fincat.validate_category(_corrupt(self.two, ('u', 'id_a'), 'id_a'))
        self.assertFalse(report)
        self.assertEqual(report.law, 'identity')
        self.assertEqual(report.witness[0], 'u')

    def test_closure(self):
        report = fincat.validate_category(_corrupt(self.two, ('u', 'id_a'), None))
        self.assertEqual(report.law, 'closure')

    def test_associativity(self):
        table = {('e', 'e'): 'e', ('a', 'a'): 'b', ('a', 'b'): 'a', ('b', 'a'): 'b', ('b', 'b'): 'e'}
        for m in ('a', 'b'):
            table[('e', m)] = table[(m, 'e')] = m
        c = fincat.FinCat(['*'], [(m, '*', '*') for m in ('e', 'a', 'b')], {'*': 'e'}, table)
        self.assertEqual(fincat.validate_category(c).law, 'associativity')

    def test_builders(self):
        for c in (fincat.chain(3), fincat.cyclic_group(3), fincat.idempotent_monoid(),
                  fincat.walking_isomorphism(), fincat.discrete(['p', 'q'])):
            self.assertTrue(fincat.validate_category(c), c.name)

    def test_malformed_tables(self):
        with self.assertRaises(CategoryError):
            fincat.FinCat(['a', 'a'], [], {}, {})
        with self.assertRaises(CategoryError):
            fincat.FinCat(['a'], [('f', 'a', 'b')], {'a': 'f'}, {})
        with self.assertRaises(CategoryError):
            fincat.poset(['x', 'y'], [('x', 'y'), ('y', 'x')])
        with self.assertRaises(CategoryError):
            fincat.free_category(['x', 'y'], [('f', 'x', 'y'), ('g', 'y', 'x')])


class TestOppositeAndProduct(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()
        self.one = fincat.terminal_category()

    def test_opposite_terminal(self):
        self.assertEqual(fincat.opposite(self.one), self.one)

    def test_opposite_arrow(self):
        op = fincat.opposite(self.two)
        self.assertEqual(op.ends('u'), ('b', 'a'))
        self.assertEqual(op.name, '2^op')

    def test_opposite_involution(self):
        self.assertIs(fincat.opposite(fincat.opposite(self.two)), self.two)
        rebuilt = fincat.opposite(fincat.opposite(fincat.chain(2)))
        self.assertEqual(rebuilt, fincat.chain(2))

    def test_product_counts(self):
        p = fincat.product(self.two, self.two)
        self.assertEqual(len(p.objects), 4)
        self.assertEqual(len(p.morphisms), 9)
        self.assertTrue(fincat.validate_category(p))

    def test_product_with_opposite(self):
        p = fincat.product(self.two, fincat.opposite(self.two))
        self.assertEqual(len(p.hom(('a', 'b'), ('b', 'a'))), 1)

    def test_product_unit(self):
        p = fincat.product(self.one, self.two)
        self.assertEqual(len(p.objects), len(self.two.objects))
        self.assertEqual(len(p.morphisms), len(self.two.morphisms))

    def test_product_associative(self):
        c, d, e = self.two, fincat.cyclic_group(2), self.two
        left = fincat.product(fincat.product(c, d), e)
        right = fincat.product(c, fincat.product(d, e))
        moved = fincat.relabel(left, {((x, y), z): (x, (y, z)) for ((x, y), z) in left.objects},
                               {((f, g), h): (f, (g, h)) for ((f, g), h) in left.morphisms})
        self.assertEqual(moved, right)

    def test_terminal_objects(self):
        self.assertEqual(self.two.terminal_objects(), ['b'])
        self.assertEqual(self.two.initial_objects(), ['a'])


class TestFunctors(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()

    def test_functors_out_of_chains(self):
        self.assertEqual(len(fincat.functor_category_objects(fincat.chain(1), self.two)), 3)
        self.assertEqual(len(fincat.functor_category_objects(fincat.chain(2), self.two)), 4)
        z3 = fincat.cyclic_group(3)
        self.assertEqual(len(fincat.functor_category_objects(fincat.chain(0), z3)), 1)

    def test_functors_are_valid(self):
        for f in fincat.functor_category_objects(fincat.chain(2), fincat.cyclic_group(2)):
            self.assertTrue(f.validate())

    def test_budget(self):
        with self.assertRaises(BudgetExceeded):
            fincat.functor_category_objects(fincat.chain(3), fincat.cyclic_group(3), budget=5)

    def test_identity_functor(self):
        ident = fincat.identity_functor(self.two)
        self.assertTrue(ident.is_isomorphism())
        self.assertEqual(ident.then(ident), ident)
        self.assertEqual(ident.inverse(), ident)

    def test_swap_functor(self):
        swap = fincat.swap_functor(self.two, fincat.cyclic_group(2))
        self.assertTrue(swap.validate())
        self.assertTrue(swap.is_isomorphism())

    def test_collapse_is_not_iso(self):
        one = fincat.terminal_category()
        collapse = fincat.FinFunctor(self.two, one, {'a': '*', 'b': '*'},
                                     {f: 'id_*' for f in self.two.morphisms})
        self.assertTrue(collapse.validate())
        self.assertFalse(collapse.is_isomorphism())
        with self.assertRaises(FunctorError):
            collapse.inverse()

    def test_broken_functor(self):
        f = fincat.FinFunctor(self.two, self.two, {'a': 'b', 'b': 'a'},
                              {'id_a': 'id_b', 'id_b': 'id_a', 'u': 'u'})
        self.assertEqual(f.validate().law, 'endpoints')


class TestSetFunctors(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()
        self.f = _arrow_functor(self.two, {'a': (0,), 'b': (0, 1)}, {0: 0})
        self.g = _arrow_functor(self.two, {'a': ('x', 'y'), 'b': ('z', 'w')}, {'x': 'z', 'y': 'z'})

    def test_valid(self):
        self.assertTrue(self.f.validate())
        self.assertEqual(self.f.size(), 3)
        self.assertEqual(self.f.elements(), [('a', 0), ('b', 0), ('b', 1)])

    def test_totality(self):
        bad = _arrow_functor(self.two, {'a': (0,), 'b': (1,)}, {0: 0})
        self.assertEqual(bad.validate().law, 'totality')

    def test_composition(self):
        z2 = fincat.cyclic_group(2)
        bad = fincat.SetFunctor(z2, {'*': (0, 1)}, {'t': {0: 0, 1: 0}})
        self.assertEqual(bad.validate().law, 'composition')

    def test_missing_set(self):
        with self.assertRaises(FunctorError):
            fincat.SetFunctor(self.two, {'a': (0,)}, {'u': {0: 0}})

    def test_hom_functors(self):
        self.assertTrue(fincat.hom_functor(self.two).validate())
        self.assertTrue(fincat.representable(self.two, 'b').validate())
        self.assertTrue(fincat.corepresentable(self.two, 'a').validate())
        self.assertEqual(fincat.representable(self.two, 'b').at('a'), ('u',))

    def test_pullback(self):
        pulled = self.g.pullback(fincat.identity_functor(self.two))
        self.assertEqual(pulled, self.g)

    def test_function_table(self):
        table = self.g.function('u')
        self.assertEqual(table('y'), 'z')
        self.assertEqual(table.then(fincat.FunctionTable.identity(('z', 'w'))), table)


class TestNatTransf(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()

    def test_constant(self):
        one = fincat.constant(self.two, (0,))
        self.assertEqual(len(fincat.enumerate_nat(one, one)), 1)

    def test_yoneda(self):
        op = fincat.opposite(self.two)
        g = fincat.SetFunctor(op, {'a': ('x',), 'b': ('z', 'w')}, {'u': {'z': 'x', 'w': 'x'}})
        nats = fincat.enumerate_nat(fincat.representable(self.two, 'b'), g)
        self.assertEqual(len(nats), len(g.at('b')))

    def test_four_transformations(self):
        f = _arrow_functor(self.two, {'a': (0,), 'b': (0, 1)}, {0: 0})
        g = _arrow_functor(self.two, {'a': ('x', 'y'), 'b': ('z', 'w')}, {'x': 'z', 'y': 'z'})
        nats = fincat.enumerate_nat(f, g)
        self.assertEqual(len(nats), 4)
        for t in nats:
            self.assertTrue(t.validate())
            self.assertEqual(t('b', 0), 'z')

    def test_naturality_failure(self):
        f = _arrow_functor(self.two, {'a': (0,), 'b': (0, 1)}, {0: 0})
        t = fincat.NatTransf(f, f, {'a': {0: 0}, 'b': {0: 1, 1: 1}})
        self.assertEqual(t.validate().law, 'naturality')

    def test_shared_base(self):
        f = fincat.constant(self.two, (0,))
        g = fincat.constant(fincat.terminal_category(), (0,))
        with self.assertRaises(FunctorError):
            fincat.enumerate_nat(f, g)


if __name__ == '__main__':
    unittest.main()
