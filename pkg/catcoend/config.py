# -*- coding: utf-8 -*-
"""Run configuration: packaged defaults, user config files and overrides."""
from __future__ import annotations

import dataclasses
import logging
import os.path

import pkg_resources
import yaml

from .errors import ParseError

logger = logging.getLogger(__name__)

CONFIG_ENV = 'CATCOEND_CONFIG'
DATA_ENV = 'CATCOEND_DATA'

SUITES = ('all', 'ends', 'weighted', 'simplicial')
OUTPUTS = ('human', 'structured')
MUTATIONS = (None, 'variance')
CORPUS_FAMILIES = ('posets', 'monoids', 'free', 'derived')


def _read_defaults(filename=os.path.join('data', 'defaults.yml')):
    filename = pkg_resources.resource_filename(__name__, filename)
    with open(filename, 'r') as f:
        return yaml.load(f.read(), Loader=yaml.FullLoader)


_DEFAULTS = _read_defaults()

DEFAULT_TRUNCATION = _DEFAULTS['truncation']
DEFAULT_DELTA_TRUNCATION = _DEFAULTS['delta_truncation']
DEFAULT_EPSILON_BOUND = _DEFAULTS['epsilon_bound']
DEFAULT_SET_SIZE_CAP = _DEFAULTS['set_size_cap']
DEFAULT_BUDGET = _DEFAULTS['budget']


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """Everything that determines the output of a run.

    Two equal configurations produce byte-identical structured output.
    """
    seed: int = _DEFAULTS['seed']
    suite: str = _DEFAULTS['suite']
    posets: bool = _DEFAULTS['corpus']['posets']
    monoids: bool = _DEFAULTS['corpus']['monoids']
    free: bool = _DEFAULTS['corpus']['free']
    derived: bool = _DEFAULTS['corpus']['derived']
    truncation: int = DEFAULT_TRUNCATION
    delta_truncation: int = DEFAULT_DELTA_TRUNCATION
    epsilon_bound: int = DEFAULT_EPSILON_BOUND
    set_size_cap: int = DEFAULT_SET_SIZE_CAP
    budget: int = DEFAULT_BUDGET
    instances: int = _DEFAULTS['instances']
    output: str = _DEFAULTS['output']
    mutation: str | None = _DEFAULTS['mutation']

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ParseError('Unknown suite {!r}.'.format(self.suite))
        if self.output not in OUTPUTS:
            raise ParseError('Unknown output format {!r}.'.format(self.output))
        if self.mutation not in MUTATIONS:
            raise ParseError('Unknown mutation {!r}.'.format(self.mutation))
        for name in ('truncation', 'delta_truncation', 'epsilon_bound',
                     'set_size_cap', 'budget', 'instances'):
            if getattr(self, name) < 0:
                raise ParseError('{} must be non-negative.'.format(name))

    def families(self):
        return tuple(f for f in CORPUS_FAMILIES if getattr(self, f))

    def replace(self, **changes):
        """Return a copy with the non-None entries of `changes` applied."""
        changes = {k: v for (k, v) in changes.items() if v is not None}
        return dataclasses.replace(self, **changes)


def _flatten(doc, source):
    if not isinstance(doc, dict):
        raise ParseError('{}: a config file must be a mapping.'.format(source))
    known = {f.name for f in dataclasses.fields(RunConfig)}
    flat = {}
    for key, value in doc.items():
        if key == 'corpus':
            if not isinstance(value, dict):
                raise ParseError('{}: corpus must be a mapping.'.format(source))
            for family, enabled in value.items():
                if family not in CORPUS_FAMILIES:
                    raise ParseError('{}: unknown corpus family {!r}.'.format(source, family))
                flat[family] = bool(enabled)
        elif key in known:
            flat[key] = value
        else:
            raise ParseError('{}: unknown config key {!r}.'.format(source, key))
    return flat


def load_config(path=None):
    """Read a RunConfig from the packaged defaults and an optional file.

    Args:
        path (str): YAML config file; when None, the file named by the
                    CATCOEND_CONFIG environment variable is used if set

    Returns:
        RunConfig: the merged configuration
    """
    path = path or os.environ.get(CONFIG_ENV)
    config = RunConfig()
    if not path:
        return config
    logger.info('reading config from %s', path)
    try:
        with open(path, 'r') as f:
            doc = yaml.load(f.read(), Loader=yaml.FullLoader)
    except (OSError, yaml.YAMLError) as e:
        raise ParseError('{}: {}'.format(path, e))
    try:
        return dataclasses.replace(config, **_flatten(doc or {}, path))
    except TypeError as e:
        raise ParseError('{}: {}'.format(path, e))


def resolve_path(path):
    """Resolve a description path against CATCOEND_DATA when relative."""
    base = os.environ.get(DATA_ENV)
    if base and not os.path.isabs(path) and not os.path.exists(path):
        return os.path.join(base, path)
    return path
