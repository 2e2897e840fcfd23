# -*- coding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import math
import unittest

from catcoend import fincat, simplicial
from catcoend.errors import ShapeError, TruncationError
from catcoend.simplicial import MonotoneMap, PointedMap


class TestMonotoneMaps(unittest.TestCase):

    def test_counts(self):
        for n in range(4):
            for m in range(4):
                self.assertEqual(len(simplicial.monotone_maps(n, m)), math.comb(n + m + 1, n + 1))

    def test_malformed(self):
        with self.assertRaises(ShapeError):
            MonotoneMap(1, 2, (2, 1))
        with self.assertRaises(ShapeError):
            MonotoneMap(1, 1, (0, 2))
        with self.assertRaises(ShapeError):
            MonotoneMap(1, 1, (0,))
        with self.assertRaises(ShapeError):
            PointedMap(simplicial.identity(1), 1, 0)

    def test_cofaces(self):
        self.assertEqual(simplicial.coface(2, 1).values, (0, 2))
        self.assertEqual(simplicial.codegeneracy(1, 0).values, (0, 0, 1))
        s = simplicial.codegeneracy(1, 0).after(simplicial.coface(2, 0))
        self.assertEqual(s, simplicial.identity(1))

    def test_lv_iv(self):
        self.assertTrue(simplicial.coface(1, 0).is_lv)
        self.assertFalse(simplicial.coface(1, 0).is_iv)
        self.assertTrue(simplicial.coface(1, 1).is_iv)


class TestSimplexCategories(unittest.TestCase):

    def setUp(self):
        self.d = simplicial.delta(2)
        self.ds = simplicial.delta_star(2)

    def test_valid(self):
        self.assertTrue(fincat.validate_category(self.d))
        self.assertTrue(fincat.validate_category(self.ds))

    def test_sizes(self):
        self.assertEqual(len(self.ds.objects), 6)
        self.assertEqual(len(self.ds.hom((1, 0), (1, 1))), 3)
        self.assertEqual(len(self.ds.hom((1, 1), (1, 0))), 1)

    def test_adjoint_functors(self):
        p = fincat.FinFunctor(self.ds, self.d, {x: simplicial.pi(x) for x in self.ds.objects},
                              {f: simplicial.pi(f) for f in self.ds.morphisms})
        l = fincat.FinFunctor(self.d, self.ds, {x: simplicial.l(x) for x in self.d.objects},
                              {f: simplicial.l(f) for f in self.d.morphisms})
        lam = fincat.FinFunctor(self.ds, self.d, {x: simplicial.lam(x) for x in self.ds.objects},
                                {f: simplicial.lam(f) for f in self.ds.morphisms})
        for functor in (p, l, lam):
            self.assertTrue(functor.validate())
        self.assertEqual(l.then(p), fincat.identity_functor(self.d))
        self.assertEqual(l.then(lam), fincat.identity_functor(self.d))


class TestAdjunctions(unittest.TestCase):

    def test_pi_l(self):
        for n in range(3):
            for i in range(n + 1):
                for m in range(3):
                    table = simplicial.pi_l_bijection(n, i, m)
                    self.assertEqual(len(set(table.values())), len(table))
                    self.assertEqual(set(table.values()), set(simplicial.monotone_maps(n, m)))

    def test_l_lam(self):
        for n in range(3):
            for m in range(3):
                for i in range(m + 1):
                    table = simplicial.l_lam_bijection(n, m, i)
                    self.assertEqual(set(table.values()), set(simplicial.monotone_maps(n, i)))
                    self.assertEqual(len(table), len(simplicial.monotone_maps(n, i)))

    def test_triangles_pi_l(self):
        for n in range(3):
            for i in range(n + 1):
                eta = simplicial.unit_pi_l(n, i)
                self.assertEqual(simplicial.counit_pi_l(n).after(simplicial.pi(eta)),
                                 simplicial.identity(n))
            back = simplicial.l(simplicial.counit_pi_l(n)).after(simplicial.unit_pi_l(n, n))
            self.assertEqual(back, PointedMap(simplicial.identity(n), n, n))

    def test_triangles_l_lam(self):
        for n in range(3):
            back = simplicial.counit_l_lam(n, n).after(simplicial.l(simplicial.unit_l_lam(n)))
            self.assertEqual(back, PointedMap(simplicial.identity(n), n, n))
            for i in range(n + 1):
                eps = simplicial.counit_l_lam(n, i)
                self.assertEqual(simplicial.lam(eps).after(simplicial.unit_l_lam(i)),
                                 simplicial.identity(i))

    def test_cocartesian(self):
        unit = simplicial.unit_pi_l(1, 0)
        self.assertFalse(simplicial.is_cocartesian(unit))
        self.assertFalse(simplicial.has_cocartesian_factorization(unit, N=2))
        counit = simplicial.counit_l_lam(2, 1)
        self.assertTrue(simplicial.is_cocartesian(counit))
        self.assertTrue(simplicial.has_cocartesian_factorization(counit, N=2))


class TestReversal(unittest.TestCase):

    def setUp(self):
        self.maps = [phi for n in range(3) for m in range(3) for phi in simplicial.monotone_maps(n, m)]

    def test_involution(self):
        for phi in self.maps:
            self.assertEqual(simplicial.rev(simplicial.rev(phi)), phi)
            self.assertEqual(phi.is_lv, simplicial.rev(phi).is_iv)

    def test_coface(self):
        self.assertEqual(simplicial.rev(simplicial.coface(1, 0)), simplicial.coface(1, 1))

    def test_rev_is_functorial(self):
        for g in self.maps:
            for f in simplicial.monotone_maps(1, g.n):
                self.assertEqual(simplicial.rev(g.after(f)), simplicial.rev(g).after(simplicial.rev(f)))


class TestEpsilon(unittest.TestCase):

    def test_objects(self):
        self.assertEqual(simplicial.epsilon(0), 1)
        self.assertEqual(simplicial.epsilon(2), 5)
        self.assertEqual(simplicial.epsilon(simplicial.identity(1)), simplicial.identity(3))

    def test_coface(self):
        self.assertEqual(simplicial.epsilon(simplicial.coface(1, 1)).values, (1, 2))

    def test_functorial(self):
        for g in [phi for m in range(3) for phi in simplicial.monotone_maps(1, m)]:
            for f in simplicial.monotone_maps(1, 1):
                self.assertEqual(simplicial.epsilon(g.after(f)),
                                 simplicial.epsilon(g).after(simplicial.epsilon(f)))

    def test_join_factors(self):
        self.assertEqual(simplicial.iota(0).values, (1,))
        self.assertEqual(simplicial.rho(0).values, (0,))
        for n in range(3):
            for m in range(3):
                for phi in simplicial.monotone_maps(n, m):
                    e = simplicial.epsilon(phi)
                    self.assertEqual(e.after(simplicial.iota(n)), simplicial.iota(m).after(phi))
                    self.assertEqual(e.after(simplicial.rho(n)),
                                     simplicial.rho(m).after(simplicial.rev(phi)))

    def test_truncation(self):
        with self.assertRaises(TruncationError):
            simplicial.epsilon(2, bound=3)
        with self.assertRaises(TruncationError):
            simplicial.epsilon(simplicial.coface(2, 0), bound=3)


if __name__ == '__main__':
    unittest.main()
