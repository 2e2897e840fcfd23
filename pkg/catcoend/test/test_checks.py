# -*- coding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import unittest

from catcoend import checks, corpus, fincat
from catcoend.config import RunConfig
from catcoend.errors import FunctorError


class _Zeros(object):
    """Stands in for a generator; always draws the first choice."""

    def integers(self, *args):
        return 0

    def permutation(self, n):
        return list(range(n))


def _small_context(config):
    ctx = checks.Context(config)
    ctx.categories = [fincat.walking_arrow(), fincat.cyclic_group(2)]
    ctx.pairs = corpus.small_pairs(ctx.categories)
    return ctx


def _failures(config):
    outcomes = list(checks.run(config, _small_context(config)))
    return outcomes, [(o.invariant, o.subject, o.witness) for o in outcomes if not o.ok]


class TestRegistry(unittest.TestCase):

    def test_names(self):
        names = [inv.name for inv in checks.REGISTRY]
        self.assertEqual(len(names), len(set(names)))
        self.assertEqual(names[0], 'category_laws')
        self.assertEqual({inv.suite for inv in checks.REGISTRY}, {'ends', 'weighted', 'simplicial'})

    def test_runs(self):
        ctx = _small_context(RunConfig(instances=3))
        self.assertEqual(len(ctx.runs(checks.INSTANCE)), 3)
        self.assertEqual(len(ctx.runs(checks.CATEGORY)), 2)
        self.assertEqual(len(ctx.runs(checks.PAIR)), 3)
        self.assertEqual(len(ctx.runs(checks.ONCE)), 1)
        self.assertEqual(ctx.subject(checks.PAIR, 1), '2xZ/2')


class TestSuites(unittest.TestCase):

    def setUp(self):
        self.config = RunConfig(instances=2, set_size_cap=2, truncation=1)

    def test_ends(self):
        outcomes, failures = _failures(self.config.replace(suite='ends'))
        self.assertEqual(failures, [])
        self.assertEqual({o.suite for o in outcomes}, {'ends'})

    def test_weighted(self):
        outcomes, failures = _failures(self.config.replace(suite='weighted'))
        self.assertEqual(failures, [])
        self.assertTrue(outcomes)

    def test_simplicial(self):
        outcomes, failures = _failures(self.config.replace(suite='simplicial'))
        self.assertEqual(failures, [])
        self.assertIn('epsilon_maps', {o.invariant for o in outcomes})

    def test_corpus_laws(self):
        outcomes, _ = _failures(self.config.replace(suite='ends'))
        names = {o.invariant for o in outcomes}
        for name in ('opposite_involution', 'product_laws', 'limit_universal', 'colimit_universal'):
            self.assertIn(name, names)
        outcomes, _ = _failures(self.config.replace(suite='weighted'))
        yoneda = [o for o in outcomes if o.invariant == 'yoneda']
        self.assertEqual(len(yoneda), 2)
        self.assertTrue(all(o.ok for o in yoneda))

    def test_singletons(self):
        _, failures = _failures(self.config.replace(suite='ends', set_size_cap=1))
        self.assertEqual(failures, [])

    def test_deterministic(self):
        config = self.config.replace(suite='ends', instances=1, seed=7)
        self.assertEqual(_failures(config)[0], _failures(config)[0])


class TestMutation(unittest.TestCase):

    def setUp(self):
        self.inv = next(inv for inv in checks.REGISTRY if inv.name == 'coend_routes')

    def _context(self, mutation):
        ctx = checks.Context(RunConfig(mutation=mutation, truncation=1))
        ctx.categories = [fincat.walking_isomorphism()]
        return ctx

    def test_unmutated(self):
        ok, _, _ = self.inv.fn(self._context(None), 0, _Zeros())
        self.assertTrue(ok)

    def test_variance(self):
        with self.assertRaises(FunctorError):
            self.inv.fn(self._context('variance'), 0, _Zeros())


class TestSummarize(unittest.TestCase):

    def test_counts(self):
        outcomes = [checks.Outcome('a', 'ends', 0, 'x', True),
                    checks.Outcome('a', 'ends', 1, 'y', False),
                    checks.Outcome('b', 'weighted', 0, 'x', True)]
        self.assertEqual(checks.summarize(outcomes), [('a', 'ends', 1, 1), ('b', 'weighted', 1, 0)])


if __name__ == '__main__':
    unittest.main()
