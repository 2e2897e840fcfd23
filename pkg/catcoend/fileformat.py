# -*- coding: utf-8 -*-
"""Reading and writing category and functor description files.

Description files are single YAML documents checked against
`data/schema.yml`. A category file lists objects, morphisms as
[id, source, target] and composites as [g, f, g∘f]; identities default to
'id_<object>' and their composites are filled in. A setfunctor file gives a
shape (plain, opposite, end or coend) relative to a category supplied by the
caller, and either a builtin or explicit sets and function tables.
"""
from __future__ import annotations

import logging
import os.path

import pkg_resources
import regex as re
import yaml

from . import coends, fincat, report
from .config import resolve_path
from .errors import FunctorError, ParseError

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r'^[^\s\p{C}](?:[^\p{C}]*[^\s\p{C}])?$', re.V1)


def _read_schema(filename=os.path.join('data', 'schema.yml')):
    filename = pkg_resources.resource_filename(__name__, filename)
    with open(filename, 'r') as f:
        return yaml.load(f.read(), Loader=yaml.FullLoader)


SCHEMA = _read_schema()


def _is_scalar(x):
    return isinstance(x, (str, int)) and not isinstance(x, bool)


def check_schema(doc, schema, where='$'):
    """Check `doc` against a schema in the type/mapping/sequence dialect.

    Raises:
        ParseError: naming the path of the first offending node
    """
    kind = schema.get('type', 'any')
    if kind == 'map':
        if not isinstance(doc, dict):
            raise ParseError('{}: expected a mapping.'.format(where))
        mapping = schema.get('mapping')
        if mapping is None:
            return
        for key in doc:
            if key not in mapping:
                raise ParseError('{}: unknown field {!r}.'.format(where, key))
        for key, sub in mapping.items():
            if key in doc:
                check_schema(doc[key], sub, '{}.{}'.format(where, key))
            elif sub.get('required'):
                raise ParseError('{}: missing field {!r}.'.format(where, key))
    elif kind == 'seq':
        if not isinstance(doc, list):
            raise ParseError('{}: expected a sequence.'.format(where))
        for i, item in enumerate(doc):
            check_schema(item, schema['sequence'][0], '{}[{}]'.format(where, i))
    elif kind == 'str':
        if not isinstance(doc, str):
            raise ParseError('{}: expected a string.'.format(where))
    elif kind == 'int':
        if not isinstance(doc, int) or isinstance(doc, bool):
            raise ParseError('{}: expected an integer.'.format(where))
    elif kind == 'scalar':
        if not _is_scalar(doc):
            raise ParseError('{}: expected a string or an integer.'.format(where))
    if 'enum' in schema and doc not in schema['enum']:
        raise ParseError('{}: {!r} is not one of {}.'.format(where, doc, schema['enum']))


def read_document(path):
    """Parse and schema-check a description file."""
    try:
        with open(path, 'r') as f:
            doc = yaml.load(f.read(), Loader=yaml.FullLoader)
    except (OSError, yaml.YAMLError) as e:
        raise ParseError('{}: {}'.format(path, e))
    check_schema(doc, SCHEMA, where=os.path.basename(path))
    return doc


def _identifier(x, where):
    if isinstance(x, str) and not IDENTIFIER.match(x):
        raise ParseError('{}: malformed identifier {!r}.'.format(where, x))
    return x


def _triples(entries, field, where):
    result = []
    for i, entry in enumerate(entries):
        if len(entry) != 3:
            raise ParseError('{}.{}[{}]: expected three entries.'.format(where, field, i))
        result.append(tuple(_identifier(x, where) for x in entry))
    return result


def category_from_document(doc, where='category'):
    """Build a FinCat from a parsed category document.

    Raises:
        ParseError: if the document is not a category description
        CategoryError: if the tables are structurally inconsistent
    """
    if doc.get('kind') != 'category':
        raise ParseError('{}: not a category description.'.format(where))
    if 'objects' not in doc:
        raise ParseError('{}: missing field {!r}.'.format(where, 'objects'))
    objects = [_identifier(x, where) for x in doc['objects']]
    morphisms = _triples(doc.get('morphisms') or [], 'morphisms', where)
    identities = doc.get('identities') or {x: 'id_{}'.format(x) for x in objects}
    listed = {m for (m, _, _) in morphisms}
    morphisms = [(identities[x], x, x) for x in objects
                 if x in identities and identities[x] not in listed] + morphisms
    ends = {m: (s, t) for (m, s, t) in morphisms}
    compose = {}
    for (m, (s, t)) in ends.items():
        if t in identities:
            compose[(identities[t], m)] = m
        if s in identities:
            compose[(m, identities[s])] = m
    for (g, f, h) in _triples(doc.get('composition') or [], 'composition', where):
        compose[(g, f)] = h
    return fincat.FinCat(objects, morphisms, identities, compose, name=doc.get('name'))


def load_category(path):
    path = resolve_path(path)
    logger.info('reading category from %s', path)
    return category_from_document(read_document(path), where=os.path.basename(path))


def _base(c, shape):
    if shape == 'plain':
        return c
    if shape == 'opposite':
        return fincat.opposite(c)
    if shape == 'end':
        return coends.end_base(c)
    return coends.coend_base(c)


def _key(x, shape):
    """Objects and morphisms of end/coend shapes are written as pairs."""
    if shape in ('end', 'coend'):
        if not isinstance(x, list) or len(x) != 2:
            raise ParseError('{!r} must be a pair in the {} shape.'.format(x, shape))
        return tuple(x)
    return x


def setfunctor_from_document(doc, c, where='functor', validate=True):
    """Build (SetFunctor, shape) from a parsed setfunctor document over `c`.

    Raises:
        FunctorError: if `validate` is set and the tables are not functorial
    """
    if doc.get('kind') != 'setfunctor':
        raise ParseError('{}: not a setfunctor description.'.format(where))
    shape = doc.get('shape', 'plain')
    base = _base(c, shape)
    builtin = doc.get('builtin')
    if builtin == 'hom':
        if shape not in ('end', 'coend'):
            raise ParseError('{}: the hom builtin needs the end or coend shape.'.format(where))
        functor = coends.hom_bifunctor(c, shape).functor
    elif builtin == 'constant':
        functor = fincat.constant(base, doc.get('elements', [0]))
    elif builtin in ('representable', 'corepresentable'):
        if 'object' not in doc:
            raise ParseError('{}: the {} builtin needs an object.'.format(where, builtin))
        if builtin == 'representable':
            if shape != 'opposite':
                raise ParseError('{}: representables have the opposite shape.'.format(where))
            functor = fincat.representable(c, doc['object'])
        else:
            if shape != 'plain':
                raise ParseError('{}: corepresentables have the plain shape.'.format(where))
            functor = fincat.corepresentable(c, doc['object'])
    else:
        sets = {_key(entry['object'], shape): entry['elements'] for entry in doc.get('sets', [])}
        maps = {_key(entry['morphism'], shape): entry['table'] for entry in doc.get('maps', [])}
        functor = fincat.SetFunctor(base, sets, maps, name=doc.get('name'))
    functor.name = doc.get('name') or functor.name
    if validate:
        result = functor.validate()
        if not result:
            raise FunctorError('{}: {} law fails: {}.'.format(where, result.law, result.message))
    return functor, shape


def load_setfunctor(path, c, validate=True):
    path = resolve_path(path)
    logger.info('reading functor from %s', path)
    return setfunctor_from_document(read_document(path), c, where=os.path.basename(path),
                                    validate=validate)


def load_bifunctor(path, c, convention):
    """Read a bifunctor in the given convention; Hom when `path` is None.

    A file in the other convention's shape is read through the swap adapter.
    """
    if path is None:
        return coends.hom_bifunctor(c, convention)
    functor, shape = load_setfunctor(path, c)
    if shape not in (coends.END, coends.COEND):
        raise ParseError('{}: a bifunctor needs the end or coend shape.'.format(path))
    f = coends.Bifunctor(functor, c, shape)
    return f if shape == convention else f.swap()


def dump_category(c, annotations=True, levels=None):
    """Serialize a FinCat in the description format with identifiers as labels.

    Composites with an identity are left out; they are filled in on reading.
    """
    label = report.label
    doc = {
        'kind': 'category',
        'name': c.name or 'category',
        'objects': [label(x) for x in c.objects],
        'morphisms': [[label(f), label(c.src(f)), label(c.dst(f))] for f in c.morphisms],
        'identities': {label(x): label(c.identity(x)) for x in c.objects},
        'composition': [[label(g), label(f), label(h)] for ((g, f), h) in c.table().items()
                        if not (c.is_identity(g) or c.is_identity(f))],
    }
    if annotations:
        doc['annotations'] = {'terminal': [label(x) for x in c.terminal_objects()],
                              'initial': [label(x) for x in c.initial_objects()]}
        if levels is not None:
            doc['annotations']['levels'] = list(levels)
    return yaml.safe_dump(doc, default_flow_style=None, sort_keys=False, allow_unicode=True)
