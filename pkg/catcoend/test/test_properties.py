# -*- coding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import unittest

import hypothesis
import hypothesis.strategies as strat

from catcoend import coends, corpus, fincat, setops, simplicial, weighted

SMALL = [fincat.terminal_category(), fincat.walking_arrow(), fincat.chain(2),
         fincat.cyclic_group(2), fincat.idempotent_monoid(), fincat.walking_isomorphism(),
         fincat.free_category(['s', 't'], [('f', 's', 't'), ('g', 's', 't')], name='kronecker')]

categories = strat.sampled_from(SMALL)
seeds = strat.integers(min_value=0, max_value=2 ** 16)
settings = hypothesis.settings(max_examples=25, deadline=None)


def generator(seed):
    return corpus.rng(seed, 0, 0)


@strat.composite
def monotone_maps(draw, max_dim=3):
    n = draw(strat.integers(0, max_dim))
    m = draw(strat.integers(0, max_dim))
    values = sorted(draw(strat.lists(strat.integers(0, m), min_size=n + 1, max_size=n + 1)))
    return simplicial.MonotoneMap(n, m, tuple(values))


class TestRandomFunctors(unittest.TestCase):

    @settings
    @hypothesis.given(categories, seeds)
    def test_functor_laws(self, c, seed):
        self.assertTrue(corpus.random_set_functor(c, generator(seed), 3).validate())
        self.assertTrue(corpus.random_presheaf(c, generator(seed), 3).validate())

    @settings
    @hypothesis.given(categories, seeds)
    def test_colimit_universal(self, c, seed):
        f = corpus.random_set_functor(c, generator(seed), 2)
        self.assertTrue(setops.colimit_is_universal(setops.colimit(f), (0, 1)))

    @settings
    @hypothesis.given(categories, seeds)
    def test_bousfield_kan(self, c, seed):
        self.assertTrue(coends.check_bk(corpus.random_set_functor(c, generator(seed), 3)))


class TestRoutes(unittest.TestCase):

    @settings
    @hypothesis.given(categories, seeds)
    def test_end_routes(self, c, seed):
        f = corpus.random_bifunctor(c, generator(seed), 2, coends.END)
        for name, comparison in coends.compare_routes(coends.end_routes(f, 1)).items():
            self.assertTrue(comparison, (c.name, name, comparison.witness))

    @settings
    @hypothesis.given(categories, seeds)
    def test_coend_routes(self, c, seed):
        f = corpus.random_bifunctor(c, generator(seed), 2, coends.COEND)
        for name, comparison in coends.compare_routes(coends.coend_routes(f, 1)).items():
            self.assertTrue(comparison, (c.name, name, comparison.witness))

    @settings
    @hypothesis.given(categories, seeds)
    def test_swap_involution(self, c, seed):
        f = corpus.random_bifunctor(c, generator(seed), 2, coends.END)
        self.assertEqual(f.swap().swap().functor, f.functor)

    @settings
    @hypothesis.given(categories, seeds)
    def test_weighted_limit(self, c, seed):
        g = generator(seed)
        w = weighted.Weight(corpus.random_set_functor(c, g, 2))
        self.assertTrue(weighted.compare_wlimit(w, corpus.random_set_functor(c, g, 2)))

    @settings
    @hypothesis.given(categories, seeds)
    def test_weighted_colimit(self, c, seed):
        g = generator(seed)
        w = weighted.Weight(corpus.random_presheaf(c, g, 2), weighted.PRESHEAF)
        self.assertTrue(weighted.compare_wcolimit(w, corpus.random_set_functor(c, g, 2)))


class TestMonotoneMaps(unittest.TestCase):

    @hypothesis.given(monotone_maps())
    def test_rev(self, phi):
        self.assertEqual(simplicial.rev(simplicial.rev(phi)), phi)
        self.assertEqual(simplicial.rev(phi).is_iv, phi.is_lv)

    @hypothesis.given(monotone_maps())
    def test_epsilon(self, phi):
        e = simplicial.epsilon(phi)
        self.assertEqual(e.after(simplicial.iota(phi.n)), simplicial.iota(phi.m).after(phi))
        self.assertEqual(e.after(simplicial.rho(phi.n)),
                         simplicial.rho(phi.m).after(simplicial.rev(phi)))
        if phi.is_lv:
            self.assertTrue(e.is_lv and e.is_iv)


if __name__ == '__main__':
    unittest.main()
