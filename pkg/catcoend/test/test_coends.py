# -*- coding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import unittest

from catcoend import coends, fincat
from catcoend.errors import ConventionError, FunctorError


class TestBifunctor(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()

    def test_conventions(self):
        with self.assertRaises(ConventionError):
            coends.Bifunctor(fincat.hom_functor(self.two), self.two, coends.COEND)
        with self.assertRaises(ConventionError):
            coends.Bifunctor(fincat.hom_functor(self.two), self.two, 'diagonal')

    def test_hom(self):
        end = coends.hom_bifunctor(self.two, coends.END)
        coend = coends.hom_bifunctor(self.two, coends.COEND)
        self.assertEqual(end.at('a', 'b'), ('u',))
        self.assertEqual(coend.at('b', 'a'), ('u',))
        self.assertEqual(coend.at('a', 'b'), ())
        self.assertEqual(coend.diagonal(), [('a', 'id_a'), ('b', 'id_b')])

    def test_swap(self):
        end = coends.hom_bifunctor(fincat.cyclic_group(2), coends.END)
        back = end.swap().swap()
        self.assertEqual(back.convention, coends.END)
        self.assertEqual(back.functor, end.functor)

    def test_wrong_convention(self):
        coend = coends.hom_bifunctor(self.two, coends.COEND)
        with self.assertRaises(ConventionError):
            coends.end_via_equalizer(coend)
        with self.assertRaises(ConventionError):
            coends.coend_via_coequalizer(coend.swap())


class TestEnds(unittest.TestCase):

    def test_hom_arrow(self):
        f = coends.hom_bifunctor(fincat.walking_arrow())
        result = coends.end_via_equalizer(f)
        self.assertEqual(result.families, [('id_a', 'id_b')])

    def test_hom_group(self):
        f = coends.hom_bifunctor(fincat.cyclic_group(2))
        self.assertEqual(len(coends.end_via_equalizer(f)), 2)

    def test_routes_agree(self):
        for c in (fincat.walking_arrow(), fincat.cyclic_group(2), fincat.chain(2)):
            results = coends.end_routes(coends.hom_bifunctor(c), N=1)
            self.assertEqual(list(results), list(coends.END_ROUTES))
            for name, comparison in coends.compare_routes(results).items():
                self.assertTrue(comparison, (c.name, name, comparison.witness))

    def test_constant(self):
        f = coends.constant_bifunctor(fincat.walking_arrow(), (0, 1))
        self.assertEqual(len(coends.end_via_tw(f)), 2)
        self.assertEqual(len(coends.end_via_simplices(f, 1)), 2)

    def test_center(self):
        for (c, size) in ((fincat.walking_arrow(), 1), (fincat.cyclic_group(2), 2)):
            end, comparison = coends.center_via_nat(c)
            self.assertEqual(len(end), size)
            self.assertTrue(comparison)


class TestCoends(unittest.TestCase):

    def test_hom_arrow(self):
        f = coends.hom_bifunctor(fincat.walking_arrow(), coends.COEND)
        result = coends.coend_via_coequalizer(f)
        self.assertEqual(result.classes, [(('a', 'id_a'),), (('b', 'id_b'),)])

    def test_hom_group(self):
        f = coends.hom_bifunctor(fincat.cyclic_group(2), coends.COEND)
        self.assertEqual(len(coends.coend_via_coequalizer(f)), 2)
        self.assertEqual(len(coends.coend_simplicial(f)), 2)

    def test_constant(self):
        f = coends.constant_bifunctor(fincat.walking_arrow(), (0,), coends.COEND)
        self.assertEqual(len(coends.coend_via_coequalizer(f)), 1)
        self.assertEqual(len(coends.coend_via_tw(f)), 1)

    def test_routes_agree(self):
        for c in (fincat.walking_arrow(), fincat.cyclic_group(2), fincat.walking_isomorphism()):
            results = coends.coend_routes(coends.hom_bifunctor(c, coends.COEND), N=1)
            self.assertEqual(list(results), list(coends.COEND_ROUTES))
            for name, comparison in coends.compare_routes(results).items():
                self.assertTrue(comparison, (c.name, name, comparison.witness))

    def test_simplicial_levels(self):
        f = coends.hom_bifunctor(fincat.walking_arrow(), coends.COEND)
        level0, level1 = coends.simplicial_levels(f)
        self.assertEqual(len(level0), 2)
        self.assertEqual(sum(len(elements) for (_, elements) in level0), 2)
        self.assertEqual(len(level1), 3)
        self.assertEqual(sum(len(elements) for (_, elements) in level1), 2)
        self.assertEqual(len(coends.coend_simplicial(f)), 2)

    def test_variance_mutation(self):
        f = coends.hom_bifunctor(fincat.walking_isomorphism(), coends.COEND)
        with self.assertRaises(FunctorError):
            coends.coend_via_coequalizer(f, mutation='variance')


class TestBousfieldKan(unittest.TestCase):

    def test_arrow(self):
        two = fincat.walking_arrow()
        f = fincat.SetFunctor(two, {'a': ('p',), 'b': ('q', 'r')}, {'u': {'p': 'q'}})
        self.assertEqual(len(coends.colim_bk(f)), 2)
        self.assertTrue(coends.check_bk(f))

    def test_group(self):
        f = fincat.SetFunctor(fincat.cyclic_group(2), {'*': (0, 1, 2)}, {'t': {0: 1, 1: 0, 2: 2}})
        self.assertEqual(len(coends.colim_bk(f)), 2)
        self.assertTrue(coends.check_bk(f))


class TestFubini(unittest.TestCase):

    def setUp(self):
        self.two = fincat.walking_arrow()

    def test_arrows(self):
        f = coends.hom_bifunctor(fincat.product(self.two, self.two))
        report = coends.check_fubini(f, self.two, self.two)
        self.assertTrue(report)
        self.assertEqual(len(report.joint), 1)
        self.assertEqual(len(report.c_outer), 1)
        self.assertEqual(len(report.d_outer), 1)

    def test_mixed(self):
        z2 = fincat.cyclic_group(2)
        f = coends.hom_bifunctor(fincat.product(self.two, z2))
        report = coends.check_fubini(f, self.two, z2)
        self.assertTrue(report.agree)
        self.assertEqual(len(report.joint), 2)

    def test_constant(self):
        one = fincat.terminal_category()
        f = coends.constant_bifunctor(fincat.product(one, one), (0, 1))
        report = coends.check_fubini(f, one, one)
        self.assertTrue(report)
        self.assertEqual(sorted(report.joint), [(0,), (1,)])

    def test_mismatch(self):
        with self.assertRaises(ConventionError):
            coends.check_fubini(coends.hom_bifunctor(self.two), self.two, self.two)


if __name__ == '__main__':
    unittest.main()
