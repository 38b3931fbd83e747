# Copyright (C) 2026 The groupoidal developers.
#
# Semigroup providers: where the semigroup of a job comes from.

import os

import six

from . import core
from . import exceptions
from . import loader


class SemigroupProvider(object):
    """Base abstract class for semigroup provider implementations.

    A provider turns the input section of a job into a validated
    FiniteInverseSemigroup and describes where it came from.
    """

    def __init__(self, config, caps=None):
        self._config = config
        self._caps = caps or {}

    def semigroup(self):
        """Returns the validated FiniteInverseSemigroup."""
        raise NotImplementedError

    def provenance(self):
        """Plain description of the input, recorded in every report."""
        raise NotImplementedError


def _require_int_matrix(key, rows, size):
    if not isinstance(rows, list) or len(rows) != size:
        raise exceptions.InputException(
            'key {} must be a list of {} rows'.format(key, size))
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != size:
            raise exceptions.InputException(
                'row {} of key {} must have {} entries'.format(i, key, size))
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int) or \
                    not 0 <= x < size:
                raise exceptions.InputException(
                    'key {} has entry {!r} out of range 0..{}'.format(
                        key, x, size - 1))


def semigroup_from_data(data, name='S', cap=core.DEFAULT_ELEMENT_CAP):
    """Build a semigroup from parsed input: a table mapping, a generator
    mapping or a bare list of generators."""
    if isinstance(data, list):
        data = {'generators': data}
    if not isinstance(data, dict):
        raise exceptions.InputException(
            'input must be a mapping or a list of generators')
    if 'generators' in data:
        unknown = set(data) - {'generators', 'degree', 'name'}
        if unknown:
            raise exceptions.InputException(
                'unknown key {}'.format(sorted(unknown)[0]))
        gens = data['generators']
        if not isinstance(gens, list) or not gens:
            raise exceptions.InputException(
                'key generators must be a non-empty list')
        try:
            parsed = [core.pp_parse(g) for g in gens]
        except exceptions.ParameterException as e:
            raise exceptions.InputException(
                'key generators: {}'.format(e))
        degree = data.get('degree')
        if degree is not None and any(g.degree != degree for g in parsed):
            raise exceptions.InputException(
                'key degree: generators are not of degree {}'.format(degree))
        try:
            return core.semigroup_from_generators(
                parsed, cap=cap, name=data.get('name', name), verify=True)
        except exceptions.ParameterException as e:
            raise exceptions.InputException('key generators: {}'.format(e))

    unknown = set(data) - {'size', 'mul', 'inv', 'labels', 'name'}
    if unknown:
        raise exceptions.InputException(
            'unknown key {}'.format(sorted(unknown)[0]))
    for key in ('size', 'mul'):
        if key not in data:
            raise exceptions.InputException('missing key {}'.format(key))
    size = data['size']
    if isinstance(size, bool) or not isinstance(size, int) or size < 1:
        raise exceptions.InputException(
            'key size must be a positive integer')
    _require_int_matrix('mul', data['mul'], size)
    inv = data.get('inv')
    if inv is not None and (
            not isinstance(inv, list) or len(inv) != size or
            any(isinstance(x, bool) or not isinstance(x, int) or
                not 0 <= x < size for x in inv)):
        raise exceptions.InputException(
            'key inv must list {} indices in range'.format(size))
    labels = data.get('labels')
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != size or \
                len(set(map(str, labels))) != size:
            raise exceptions.InputException(
                'key labels must list {} distinct labels'.format(size))
        labels = [str(x) for x in labels]
    return core.semigroup_from_table(data['mul'], inv=inv, labels=labels,
                                     name=data.get('name', name))


class FileSemigroupProvider(SemigroupProvider):
    """Semigroup read from a YAML or JSON file (Jinja2 templating
    allowed)."""

    def __init__(self, config, caps=None):
        SemigroupProvider.__init__(self, config, caps)
        self._path = config['file']
        if not isinstance(self._path, six.string_types):
            raise exceptions.JobConfigurationException(
                'input file must be a path')
        self._semigroup = None

    def semigroup(self):
        if self._semigroup is None:
            data, _ = loader.load(self._path)
            name = os.path.splitext(os.path.basename(self._path))[0] \
                if self._path != '-' else 'S'
            self._semigroup = semigroup_from_data(
                data, name=name,
                cap=self._caps.get('max_elements', core.DEFAULT_ELEMENT_CAP))
        return self._semigroup

    def provenance(self):
        return {'file': self._path}


def _int_arg(text, family):
    try:
        return int(text)
    except (TypeError, ValueError):
        raise exceptions.JobConfigurationException(
            'builtin {} takes an integer, got {!r}'.format(family, text))


def _brandt(arg):
    if not arg or ',' not in arg:
        raise exceptions.JobConfigurationException(
            'builtin brandt takes GROUP,N')
    group, n = arg.split(',', 1)
    return core.brandt(core.parse_group(group), _int_arg(n, 'brandt'))


class BuiltinSemigroupProvider(SemigroupProvider):
    """Semigroup from one of the built-in families, selected as NAME:ARG."""

    FAMILIES = {
        'inverse_symmetric': lambda arg: core.inverse_symmetric(
            _int_arg(arg, 'inverse_symmetric'), verify=True),
        'chain': lambda arg: core.chain(_int_arg(arg, 'chain')),
        'brandt': _brandt,
        'group': lambda arg: core.group_semigroup(core.parse_group(arg)),
        'adjoin_identity': lambda arg: core.adjoin_identity(
            core.group_semigroup(core.parse_group(arg))),
    }

    def __init__(self, config, caps=None):
        SemigroupProvider.__init__(self, config, caps)
        descriptor = config['builtin']
        if not isinstance(descriptor, six.string_types):
            raise exceptions.JobConfigurationException(
                'builtin must be a NAME:ARG string')
        family, _, arg = descriptor.partition(':')
        if family not in self.FAMILIES:
            raise exceptions.JobConfigurationException(
                'Unknown builtin family {}; expected one of {}'.format(
                    family, ', '.join(sorted(self.FAMILIES))))
        self._descriptor = descriptor
        self._family = family
        self._arg = arg
        self._semigroup = None

    def semigroup(self):
        if self._semigroup is None:
            try:
                self._semigroup = self.FAMILIES[self._family](self._arg)
            except exceptions.ParameterException as e:
                raise exceptions.JobConfigurationException(str(e))
        return self._semigroup

    def provenance(self):
        return {'builtin': self._descriptor}


class SemigroupProviderFactory(object):
    """Returns the provider implementation matching the input section of a
    job: {file: PATH} or {builtin: NAME:ARG}."""

    PROVIDERS = {
        'file': FileSemigroupProvider,
        'builtin': BuiltinSemigroupProvider,
    }

    @staticmethod
    def from_config(config, caps=None):
        if not isinstance(config, dict):
            raise exceptions.JobConfigurationException(
                'input must be a mapping with file or builtin')
        kinds = [k for k in SemigroupProviderFactory.PROVIDERS
                 if k in config]
        if len(kinds) != 1 or len(config) != 1:
            raise exceptions.JobConfigurationException(
                'input needs exactly one of file or builtin')
        return SemigroupProviderFactory.PROVIDERS[kinds[0]](config, caps)


def ingest(source, caps=None):
    """The semigroup named by a path, a NAME:ARG builtin string or an input
    mapping."""
    if isinstance(source, six.string_types):
        family = source.partition(':')[0]
        source = {'builtin': source} \
            if family in BuiltinSemigroupProvider.FAMILIES \
            else {'file': source}
    return SemigroupProviderFactory.from_config(source, caps).semigroup()
