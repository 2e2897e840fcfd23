# -*- coding: utf-8 -*-
"""Command-line interface.

Exit codes: 0 success, 1 routes disagree, 2 validation failure or malformed
category/functor, 3 parse error, 4 budget or truncation exceeded.
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import checks, coends, constructions, fileformat, fincat, report, setops, weighted
from .config import OUTPUTS, SUITES, load_config, resolve_path
from .errors import (BudgetExceeded, CategoryError, ConventionError, FunctorError, ParseError,
                     ShapeError, TruncationError)

logger = logging.getLogger(__name__)

OK, DISAGREE, INVALID, PARSE, BUDGET = 0, 1, 2, 3, 4


class Emitter(object):
    """Writes records in the configured output format."""

    def __init__(self, output='human', stream=None):
        self.output = output
        self.stream = stream or sys.stdout

    def __call__(self, rec):
        print(report.render(rec, self.output), file=self.stream)

    def text(self, text):
        self.stream.write(text)


def _result(emit, command, subject, route, elements, unit):
    emit(report.record('result', command=command, subject=subject, route=route,
                       size=len(elements), unit=unit, elements=list(elements)))


def _compare(emit, command, subject, left, comparisons):
    """Emit comparisons of `left` with each other route; return the exit code."""
    status = OK
    for right, comparison in comparisons.items():
        emit(report.comparison_record(command, subject, left, right, comparison))
        if not comparison:
            status = DISAGREE
    return status


def cmd_validate(args, config, emit):
    path = resolve_path(args.path)
    doc = fileformat.read_document(path)
    if doc['kind'] == 'category':
        c = fileformat.category_from_document(doc, where=args.path)
        result = fincat.validate_category(c)
        subject = c.name or args.path
    else:
        if args.category is None:
            raise ParseError('Validating a functor needs --category.')
        c = fileformat.load_category(args.category)
        functor, _ = fileformat.setfunctor_from_document(doc, c, where=args.path, validate=False)
        result = functor.validate()
        subject = functor.name or args.path
    emit(report.validation_record(subject, result))
    return OK if result else INVALID


def _route_runner(kind, config):
    n, budget = config.truncation, config.budget
    if kind == 'end':
        return {
            'equalizer': lambda f: coends.end_via_equalizer(f, budget=budget),
            'tw': coends.end_via_tw,
            'simplices': lambda f: coends.end_via_simplices(f, n, budget=budget),
        }
    return {
        'coequalizer': coends.coend_via_coequalizer,
        'tw': coends.coend_via_tw,
        'simplices': lambda f: coends.coend_via_simplices(f, n, budget=budget),
        'simplicial': lambda f: coends.coend_simplicial(f, budget=budget),
    }


def _cmd_routes(kind, args, config, emit):
    c = fileformat.load_category(args.category)
    convention = coends.END if kind == 'end' else coends.COEND
    f = fileformat.load_bifunctor(args.bifunctor, c, convention)
    runners = _route_runner(kind, config)
    names = list(runners) if args.route == 'all' else [args.route]
    results = {name: runners[name](f) for name in names}
    for name, result in results.items():
        if kind == 'end':
            _result(emit, kind, c.name, name, result.families, 'element')
        else:
            _result(emit, kind, c.name, name, result.classes, 'class')
    if len(results) < 2:
        return OK
    return _compare(emit, kind, c.name, names[0], coends.compare_routes(results))


def cmd_end(args, config, emit):
    return _cmd_routes('end', args, config, emit)


def cmd_coend(args, config, emit):
    return _cmd_routes('coend', args, config, emit)


def cmd_tw(args, config, emit):
    c = fileformat.load_category(args.category)
    tw = constructions.twisted(c, constructions.RIGHT if args.right else constructions.LEFT)
    emit.text(fileformat.dump_category(tw.carrier))
    return OK


def cmd_simplices(args, config, emit):
    c = fileformat.load_category(args.category)
    s = constructions.simplices(c, config.truncation, budget=config.budget)
    levels = [len(s.level_objects(n)) for n in range(config.truncation + 1)]
    emit.text(fileformat.dump_category(s.carrier, levels=levels))
    return OK


def cmd_elements(args, config, emit):
    c = fileformat.load_category(args.category)
    if args.weight is None:
        iso = constructions.elements_of_hom(c)
        ok = iso.is_isomorphism()
        size = len(iso.elements.carrier.objects)
        emit(report.comparison_record('elements', c.name, 'el(Hom)', 'Tw^r',
                                      setops.Comparison(ok, size, len(iso.twisted.carrier.objects))))
        emit.text(fileformat.dump_category(iso.elements.carrier))
        return OK if ok else DISAGREE
    functor, shape = fileformat.load_setfunctor(args.weight, c)
    if shape not in ('plain', 'opposite'):
        raise ParseError('A weight has the plain or the opposite shape.')
    variance = constructions.COVARIANT if shape == 'plain' else constructions.CONTRAVARIANT
    el = constructions.elements(functor, variance)
    emit.text(fileformat.dump_category(el.carrier))
    return OK


def _weight(path, c, shape, variance):
    functor, found = fileformat.load_setfunctor(path, c)
    if found != shape:
        raise ConventionError('{}: expected the {} shape, got {}.'.format(path, shape, found))
    return functor if variance is None else weighted.Weight(functor, variance)


def cmd_wlim(args, config, emit):
    c = fileformat.load_category(args.category)
    w = _weight(args.weight, c, 'plain', weighted.COVARIANT)
    psi = _weight(args.diagram, c, 'plain', None)
    via_end = weighted.wlimit_via_end(w, psi, budget=config.budget)
    via_fibration = weighted.wlimit_via_fibration(w, psi)
    _result(emit, 'wlim', c.name, 'end', via_end.families, 'element')
    _result(emit, 'wlim', c.name, 'fibration', via_fibration.families, 'element')
    return _compare(emit, 'wlim', c.name, 'end', {
        'fibration': setops.compare_families(via_end.families, via_fibration.families)})


def cmd_wcolim(args, config, emit):
    c = fileformat.load_category(args.category)
    w = _weight(args.weight, c, 'opposite', weighted.PRESHEAF)
    phi = _weight(args.diagram, c, 'plain', None)
    via_coend = weighted.wcolimit_via_coend(w, phi)
    via_fibration = weighted.wcolimit_via_fibration(w, phi)
    _result(emit, 'wcolim', c.name, 'coend', via_coend.classes, 'class')
    _result(emit, 'wcolim', c.name, 'fibration', via_fibration.classes, 'class')
    return _compare(emit, 'wcolim', c.name, 'coend', {
        'fibration': setops.compare_partitions(via_coend.classes, via_fibration.classes)})


def cmd_nat(args, config, emit):
    c = fileformat.load_category(args.category)
    phi = _weight(args.phi, c, 'opposite', None)
    psi = _weight(args.psi, c, 'opposite', None)
    nats, result, comparison = weighted.nat_space(phi, psi, budget=config.budget)
    _result(emit, 'nat', c.name, 'enumerate', [t.key() for t in nats], 'element')
    _result(emit, 'nat', c.name, 'wlim', result.families, 'element')
    return _compare(emit, 'nat', c.name, 'enumerate', {'wlim': comparison})


def cmd_bk(args, config, emit):
    c = fileformat.load_category(args.category)
    functor = _weight(args.functor, c, 'plain', None)
    bk = coends.colim_bk(functor, budget=config.budget)
    direct = setops.colimit(functor)
    _result(emit, 'bk', c.name, 'bk', bk.classes, 'class')
    _result(emit, 'bk', c.name, 'colimit', direct.classes, 'class')
    return _compare(emit, 'bk', c.name, 'bk', {
        'colimit': setops.compare_partitions(bk.classes, direct.classes)})


def cmd_fubini(args, config, emit):
    c = fileformat.load_category(args.first)
    d = fileformat.load_category(args.second)
    cd = fincat.product(c, d)
    f = fileformat.load_bifunctor(args.bifunctor, cd, coends.END)
    result = coends.check_fubini(f, c, d, budget=config.budget)
    subject = cd.name
    _result(emit, 'fubini', subject, 'joint', result.joint, 'element')
    _result(emit, 'fubini', subject, 'c_outer', result.c_outer, 'element')
    _result(emit, 'fubini', subject, 'd_outer', result.d_outer, 'element')
    return _compare(emit, 'fubini', subject, 'joint', result.comparisons)


def cmd_check(args, config, emit):
    outcomes = []
    for outcome in checks.run(config):
        outcomes.append(outcome)
        if config.output == 'structured' or not outcome.ok:
            emit(report.record('outcome', invariant=outcome.invariant, suite=outcome.suite,
                               instance=outcome.instance, subject=outcome.subject, ok=outcome.ok,
                               detail=list(outcome.detail), witness=list(outcome.witness)))
    for (name, suite, passed, failed) in checks.summarize(outcomes):
        emit(report.record('summary', invariant=name, suite=suite, passed=passed, failed=failed))
    return OK if all(o.ok for o in outcomes) else DISAGREE


def build_parser():
    parser = argparse.ArgumentParser(
        prog='catcoend', description='Ends, coends and weighted (co)limits over finite categories.')
    parser.add_argument('--config', help='YAML run configuration')
    parser.add_argument('--output', choices=OUTPUTS, help='output format')
    parser.add_argument('--budget', type=int, help='enumeration budget')
    parser.add_argument('--trunc', type=int, dest='truncation', help='simplex truncation N')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('validate', help='validate a category or functor file')
    p.add_argument('path')
    p.add_argument('--category', help='category file, when validating a functor')
    p.set_defaults(func=cmd_validate)

    for name, func, routes in (('end', cmd_end, coends.END_ROUTES),
                               ('coend', cmd_coend, coends.COEND_ROUTES)):
        p = sub.add_parser(name, help='compute the {} of a bifunctor'.format(name))
        p.add_argument('category')
        p.add_argument('bifunctor', nargs='?', help='bifunctor file; Hom when omitted')
        p.add_argument('--route', choices=('all',) + routes, default='all')
        p.set_defaults(func=func)

    p = sub.add_parser('tw', help='emit the twisted arrow category')
    p.add_argument('category')
    p.add_argument('--right', action='store_true', help='emit Tw^r instead of Tw^l')
    p.set_defaults(func=cmd_tw)

    p = sub.add_parser('simplices', help='emit the truncated category of simplices')
    p.add_argument('category')
    p.set_defaults(func=cmd_simplices)

    p = sub.add_parser('elements', help='emit the category of elements of a weight')
    p.add_argument('category')
    p.add_argument('weight', nargs='?', help='weight file; the Hom presheaf when omitted')
    p.set_defaults(func=cmd_elements)

    for name, func, help_ in (('wlim', cmd_wlim, 'weighted limit by both routes'),
                              ('wcolim', cmd_wcolim, 'weighted colimit by both routes')):
        p = sub.add_parser(name, help=help_)
        p.add_argument('category')
        p.add_argument('weight')
        p.add_argument('diagram')
        p.set_defaults(func=func)

    p = sub.add_parser('nat', help='natural transformations against the weighted limit')
    p.add_argument('category')
    p.add_argument('phi')
    p.add_argument('psi')
    p.set_defaults(func=cmd_nat)

    p = sub.add_parser('bk', help='Bousfield-Kan colimit against the direct colimit')
    p.add_argument('category')
    p.add_argument('functor')
    p.set_defaults(func=cmd_bk)

    p = sub.add_parser('fubini', help='joint and iterated ends over a product')
    p.add_argument('first')
    p.add_argument('second')
    p.add_argument('bifunctor', nargs='?', help='bifunctor over the product; Hom when omitted')
    p.set_defaults(func=cmd_fubini)

    p = sub.add_parser('check', help='run the property-check suites')
    p.add_argument('--suite', choices=SUITES)
    p.add_argument('--seed', type=int)
    p.add_argument('--instances', type=int)
    p.add_argument('--set-size-cap', type=int, dest='set_size_cap')
    p.add_argument('--mutation', choices=('variance',), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_check)
    return parser


def _configure_logging(verbosity):
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[min(verbosity, 2)]
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')


def main(argv=None, stream=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    emit = Emitter(stream=stream)
    try:
        config = load_config(args.config).replace(
            output=args.output, budget=args.budget, truncation=args.truncation,
            suite=getattr(args, 'suite', None), seed=getattr(args, 'seed', None),
            instances=getattr(args, 'instances', None),
            set_size_cap=getattr(args, 'set_size_cap', None),
            mutation=getattr(args, 'mutation', None))
        emit.output = config.output
        return args.func(args, config, emit)
    except ParseError as e:
        emit(report.record('error', error='parse', message=str(e)))
        return PARSE
    except (CategoryError, FunctorError, ShapeError, ConventionError) as e:
        emit(report.record('error', error='invalid', message=str(e)))
        return INVALID
    except (BudgetExceeded, TruncationError) as e:
        emit(report.record('error', error='budget', message=str(e)))
        return BUDGET


if __name__ == '__main__':
    sys.exit(main())
