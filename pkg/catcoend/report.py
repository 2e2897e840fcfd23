# -*- coding: utf-8 -*-
"""Rendering of identifiers and result records.

Structured output is one YAML flow mapping per line with a fixed key order;
human output is rendered from the same records.
"""
from __future__ import annotations

import yaml

from . import constructions, simplicial

RECORD_KEYS = {
    'result': ('command', 'subject', 'route', 'size', 'unit', 'elements'),
    'comparison': ('command', 'subject', 'left', 'right', 'agree', 'bijection', 'witness'),
    'outcome': ('invariant', 'suite', 'instance', 'subject', 'ok', 'detail', 'witness'),
    'summary': ('invariant', 'suite', 'passed', 'failed'),
    'validation': ('subject', 'ok', 'law', 'witness', 'message'),
    'error': ('error', 'message'),
}


def label(x):
    """Deterministic string for an identifier, element or witness."""
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, int)):
        return str(x)
    if isinstance(x, (simplicial.MonotoneMap, simplicial.PointedMap, constructions.Simplex)):
        return str(x)
    if isinstance(x, constructions.SimplexMap):
        return '{}->{}:{}'.format(x.source, x.target, x.phi)
    if isinstance(x, (tuple, list)):
        return '({})'.format(','.join(label(y) for y in x))
    if isinstance(x, (set, frozenset)):
        return '{{{}}}'.format(','.join(sorted(label(y) for y in x)))
    if x is None:
        return '-'
    return str(x)


def plain(x):
    """Turn a value into str/int/bool/list/dict data that YAML can emit."""
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, dict):
        return {label(k): plain(v) for (k, v) in x.items()}
    if isinstance(x, list):
        return [plain(y) for y in x]
    return label(x)


def record(kind, **fields):
    """Build a record with the key order of its kind."""
    keys = RECORD_KEYS[kind]
    unknown = set(fields) - set(keys)
    if unknown:
        raise KeyError('Unknown {} fields: {}'.format(kind, sorted(unknown)))
    rec = {'kind': kind}
    for key in keys:
        rec[key] = plain(fields.get(key))
    return rec


def comparison_record(command, subject, left, right, comparison):
    return record('comparison', command=command, subject=subject, left=left, right=right,
                  agree=comparison.agree, bijection=[list(p) for p in comparison.bijection],
                  witness=list(comparison.witness))


def validation_record(subject, report):
    return record('validation', subject=subject, ok=report.ok, law=report.law,
                  witness=list(report.witness), message=report.message)


def structured(rec):
    """One line of YAML flow style, keys in record order."""
    return yaml.safe_dump(rec, default_flow_style=True, sort_keys=False,
                          width=float('inf'), allow_unicode=True).strip()


def human(rec):
    kind = rec['kind']
    if kind == 'result':
        unit, size = rec['unit'], rec['size']
        plural = '' if size == 1 else ('es' if unit.endswith('s') else 's')
        return '{} {} via {}: {} {}{}'.format(rec['command'], rec['subject'], rec['route'],
                                              size, unit, plural)
    if kind == 'comparison':
        if rec['agree']:
            return '{} {}: {} and {} agree'.format(rec['command'], rec['subject'], rec['left'], rec['right'])
        return '{} {}: {} and {} DISAGREE, witness {}'.format(
            rec['command'], rec['subject'], rec['left'], rec['right'], rec['witness'])
    if kind == 'outcome':
        status = 'ok' if rec['ok'] else 'FAIL'
        line = '{:<28} #{:<3} {:<14} {}'.format(rec['invariant'], rec['instance'], rec['subject'], status)
        if not rec['ok']:
            line += ' witness {}'.format(rec['witness'])
        return line
    if kind == 'summary':
        return '{:<28} {:<10} passed {} failed {}'.format(
            rec['invariant'], rec['suite'], rec['passed'], rec['failed'])
    if kind == 'validation':
        if rec['ok']:
            return '{}: valid'.format(rec['subject'])
        return '{}: {} law fails: {}'.format(rec['subject'], rec['law'], rec['message'])
    if kind == 'error':
        return 'error ({}): {}'.format(rec['error'], rec['message'])
    return str(rec)


def render(rec, output='human'):
    return structured(rec) if output == 'structured' else human(rec)
