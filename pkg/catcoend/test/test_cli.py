# -*- coding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import io
import os
import shutil
import tempfile
import unittest
from unittest import mock

import pkg_resources
import yaml

from catcoend import cli, corpus


def example(name):
    return pkg_resources.resource_filename('catcoend', os.path.join('data', 'examples', name))


class CliTestCase(unittest.TestCase):

    def run_cli(self, *argv):
        stream = io.StringIO()
        code = cli.main(list(argv), stream=stream)
        return code, stream.getvalue().splitlines()


class TestValidate(CliTestCase):

    def test_category(self):
        code, lines = self.run_cli('validate', example('walking_arrow.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines, ['2: valid'])

    def test_broken_category(self):
        code, lines = self.run_cli('validate', example('broken_category.yml'))
        self.assertEqual(code, cli.INVALID)
        self.assertTrue(lines[0].startswith('broken: identity law fails'))

    def test_parse_error(self):
        code, lines = self.run_cli('validate', example('unknown_field.yml'))
        self.assertEqual(code, cli.PARSE)
        self.assertTrue(lines[0].startswith('error (parse)'))

    def test_functor(self):
        arrow = example('walking_arrow.yml')
        code, _ = self.run_cli('validate', example('weight_2.yml'), '--category', arrow)
        self.assertEqual(code, cli.OK)
        code, _ = self.run_cli('validate', example('bad_functor.yml'), '--category', arrow)
        self.assertEqual(code, cli.INVALID)
        code, _ = self.run_cli('validate', example('weight_2.yml'))
        self.assertEqual(code, cli.PARSE)


class TestRoutes(CliTestCase):

    def test_end(self):
        code, lines = self.run_cli('end', example('walking_arrow.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'end 2 via equalizer: 1 element')
        self.assertEqual(len(lines), 5)

    def test_coend(self):
        code, lines = self.run_cli('coend', example('z2.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'coend Z/2 via coequalizer: 2 classes')
        self.assertEqual(len(lines), 7)

    def test_single_route(self):
        code, lines = self.run_cli('end', example('z2.yml'), '--route', 'tw')
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines, ['end Z/2 via tw: 2 elements'])

    def test_bifunctor_file(self):
        arrow = example('walking_arrow.yml')
        code, lines = self.run_cli('end', arrow, example('constant_end.yml'), '--route', 'equalizer')
        self.assertEqual(lines, ['end 2 via equalizer: 1 element'])
        code, lines = self.run_cli('coend', arrow, example('hom_end.yml'), '--route', 'coequalizer')
        self.assertEqual(lines, ['coend 2 via coequalizer: 2 classes'])

    def test_structured(self):
        code, lines = self.run_cli('--output', 'structured', 'end', example('walking_arrow.yml'))
        self.assertEqual(code, cli.OK)
        first = yaml.safe_load(lines[0])
        self.assertEqual(first['kind'], 'result')
        self.assertEqual(first['size'], 1)
        self.assertEqual(first['elements'], ['(id_a,id_b)'])
        last = yaml.safe_load(lines[-1])
        self.assertEqual(last['kind'], 'comparison')
        self.assertTrue(last['agree'])

    def test_budget(self):
        code, lines = self.run_cli('--budget', '2', 'end', example('walking_arrow.yml'))
        self.assertEqual(code, cli.BUDGET)
        self.assertTrue(lines[-1].startswith('error (budget)'))


class TestConstructions(CliTestCase):

    def test_tw(self):
        code, lines = self.run_cli('tw', example('walking_arrow.yml'))
        self.assertEqual(code, cli.OK)
        doc = yaml.safe_load('\n'.join(lines))
        self.assertEqual(doc['objects'], ['id_a', 'id_b', 'u'])
        self.assertEqual(doc['annotations']['terminal'], ['u'])

    def test_simplices(self):
        code, lines = self.run_cli('--trunc', '1', 'simplices', example('walking_arrow.yml'))
        self.assertEqual(code, cli.OK)
        doc = yaml.safe_load('\n'.join(lines))
        self.assertEqual(doc['annotations']['levels'], [2, 3])

    def test_elements(self):
        code, lines = self.run_cli('elements', example('walking_arrow.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'elements 2: el(Hom) and Tw^r agree')
        code, lines = self.run_cli('elements', example('walking_arrow.yml'), example('weight_2.yml'))
        doc = yaml.safe_load('\n'.join(lines))
        self.assertEqual(len(doc['objects']), 3)


class TestWeighted(CliTestCase):

    def setUp(self):
        self.arrow = example('walking_arrow.yml')

    def test_wlim(self):
        code, lines = self.run_cli('wlim', self.arrow, example('weight_2.yml'), example('diagram_2.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'wlim 2 via end: 4 elements')

    def test_wcolim(self):
        code, lines = self.run_cli('wcolim', self.arrow, example('presheaf_b.yml'), example('bk_2.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[:2], ['wcolim 2 via coend: 2 classes', 'wcolim 2 via fibration: 2 classes'])

    def test_wcolim_needs_presheaf(self):
        code, lines = self.run_cli('wcolim', self.arrow, example('weight_2.yml'), example('bk_2.yml'))
        self.assertEqual(code, cli.INVALID)

    def test_nat(self):
        code, lines = self.run_cli('nat', self.arrow, example('presheaf_b.yml'), example('density_2.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'nat 2 via enumerate: 1 element')

    def test_bk(self):
        code, lines = self.run_cli('bk', self.arrow, example('bk_2.yml'))
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'bk 2 via bk: 2 classes')

    def test_fubini(self):
        code, lines = self.run_cli('fubini', self.arrow, self.arrow)
        self.assertEqual(code, cli.OK)
        self.assertEqual(lines[0], 'fubini 2x2 via joint: 1 element')

    def test_non_functorial_input(self):
        code, lines = self.run_cli('bk', self.arrow, example('bad_functor.yml'))
        self.assertEqual(code, cli.INVALID)
        self.assertTrue(lines[-1].startswith('error (invalid)'))
        code, lines = self.run_cli('wlim', self.arrow, example('weight_2.yml'), example('bad_functor.yml'))
        self.assertEqual(code, cli.INVALID)
        self.assertEqual(len(lines), 1)


class TestCheck(CliTestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.config = os.path.join(self.tmp, 'run.yml')
        with open(self.config, 'w') as f:
            yaml.safe_dump({'corpus': {'posets': True, 'monoids': False, 'free': False, 'derived': False},
                            'instances': 1, 'truncation': 1}, f)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_ends(self):
        code, lines = self.run_cli('--config', self.config, 'check', '--suite', 'ends')
        self.assertEqual(code, cli.OK)
        self.assertEqual(len(lines), 11)
        self.assertTrue(all('failed 0' in line for line in lines))

    def test_structured(self):
        code, lines = self.run_cli('--config', self.config, '--output', 'structured',
                                   'check', '--suite', 'ends', '--seed', '3')
        self.assertEqual(code, cli.OK)
        kinds = {yaml.safe_load(line)['kind'] for line in lines}
        self.assertEqual(kinds, {'outcome', 'summary'})

    def test_variance_mutation(self):
        with open(self.config, 'w') as f:
            yaml.safe_dump({'corpus': {'posets': False, 'monoids': True, 'free': False, 'derived': False},
                            'instances': 4, 'truncation': 1}, f)
        with mock.patch.object(corpus, 'BIFUNCTOR_KINDS', ('hom',)):
            code, lines = self.run_cli('--config', self.config, 'check', '--suite', 'ends',
                                       '--mutation', 'variance')
        self.assertEqual(code, cli.DISAGREE)
        failures = [line for line in lines if 'FAIL witness' in line]
        self.assertTrue(failures)
        self.assertTrue(all(line.startswith('coend_routes') for line in failures))
        self.assertIn('FunctorError', failures[0])

    def test_bad_config(self):
        with open(self.config, 'w') as f:
            yaml.safe_dump({'colour': 'blue'}, f)
        code, lines = self.run_cli('--config', self.config, 'check')
        self.assertEqual(code, cli.PARSE)


if __name__ == '__main__':
    unittest.main()
