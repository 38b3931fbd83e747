# Copyright (C) 2026 The groupoidal developers.
#
# Jobs: what to compute, on which semigroup, and where the reports go.

import logging
import os
import sys

import six
import sympy

from . import audit
from . import cache
from . import core
from . import cosets
from . import exceptions
from . import fields
from . import order
from . import plays
from . import providers
from . import reps

COMPUTATIONS = ['analyze', 'cosets', 'groupoid', 'actions', 'reps']
DOT_COMPUTATIONS = ['groupoid', 'actions']
DEFAULT_OUTPUT = 'groupoidal-out'
DEFAULT_VERIFICATION_PRIMES = [5, 7]
DEFAULT_CAPS = {
    'max_elements': core.DEFAULT_ELEMENT_CAP,
    'max_subsemigroups': order.DEFAULT_SUBSEMIGROUP_CAP,
    'max_cosets': cosets.DEFAULT_COSET_CAP,
    'max_table': cosets.DEFAULT_TABLE_CAP,
    'max_dim': reps.DEFAULT_MAX_DIM,
}
JOB_KEYS = set(['input', 'computations', 'field', 'caps',
                'verification_primes', 'output', 'cache', 'audit'])

logger = logging.getLogger(__name__)


class JobSpec(object):
    """A validated description of a job."""

    def __init__(self, source, computations, field='q', caps=None,
                 verification_primes=None, output=DEFAULT_OUTPUT,
                 use_cache=True, audit_config=None, dot_only=False):
        self.source = source
        self.computations = list(computations)
        self.field = field
        self.caps = dict(DEFAULT_CAPS)
        self.caps.update(caps or {})
        self.verification_primes = list(
            verification_primes or DEFAULT_VERIFICATION_PRIMES)
        self.output = output
        self.use_cache = use_cache
        self.audit_config = audit_config or []
        self.dot_only = dot_only
        self.validate()

    def validate(self):
        if not self.computations:
            raise exceptions.JobConfigurationException(
                'No computation requested')
        for c in self.computations:
            if c not in COMPUTATIONS:
                raise exceptions.JobConfigurationException(
                    'Unknown computation {}; expected one of {}'.format(
                        c, ', '.join(COMPUTATIONS)))
        for key, value in self.caps.items():
            if key not in DEFAULT_CAPS:
                raise exceptions.JobConfigurationException(
                    'Unknown cap {}'.format(key))
            if isinstance(value, bool) or not isinstance(value, int) or \
                    value < 1:
                raise exceptions.JobConfigurationException(
                    'Cap {} must be a positive integer'.format(key))
        try:
            self.field = fields.parse_field(self.field).name
        except exceptions.FieldException as e:
            raise exceptions.JobConfigurationException(str(e))
        for p in self.verification_primes:
            if isinstance(p, bool) or not isinstance(p, int) or \
                    not sympy.isprime(p):
                raise exceptions.JobConfigurationException(
                    'Verification prime {} is not prime'.format(p))
        if not isinstance(self.output, six.string_types):
            raise exceptions.JobConfigurationException(
                'output must be a directory path')

    def parameters(self, computation):
        """Everything besides the semigroup that a report depends on."""
        return {
            'computation': computation,
            'input': self.source,
            'field': self.field,
            'caps': self.caps,
            'verification_primes': self.verification_primes,
        }

    @staticmethod
    def from_options(options):
        if options.builtin:
            source = {'builtin': options.builtin}
        elif options.input:
            source = {'file': options.input}
        else:
            raise exceptions.JobConfigurationException(
                'Either --input or --builtin is required')
        caps = {}
        if options.max_cosets is not None:
            caps['max_cosets'] = options.max_cosets
        if options.max_dim is not None:
            caps['max_dim'] = options.max_dim
        primes = None
        if options.verification_primes:
            try:
                primes = [int(p) for p in
                          options.verification_primes.split(',')]
            except ValueError:
                raise exceptions.JobConfigurationException(
                    'Invalid verification primes {}'.format(
                        options.verification_primes))
        if options.command == 'export-dot':
            computations, dot_only = DOT_COMPUTATIONS, True
        else:
            computations, dot_only = [options.command], False
        return JobSpec(source, computations, field=options.field, caps=caps,
                       verification_primes=primes, output=options.out,
                       use_cache=not options.no_cache, dot_only=dot_only)

    @staticmethod
    def from_config(config, base_dir=None, command=None):
        """Build a job from a job file; a command given on the command line
        supplies the computations the file leaves out, and export-dot always
        restricts the output to DOT files."""
        if not isinstance(config, dict):
            raise exceptions.JobConfigurationException(
                'A job file must contain a mapping')
        unknown = set(config) - JOB_KEYS
        if unknown:
            raise exceptions.JobConfigurationException(
                'Unknown job key {}'.format(sorted(unknown)[0]))
        if 'input' not in config:
            raise exceptions.JobConfigurationException(
                'Job is missing its input')
        source = config['input']
        if isinstance(source, dict) and base_dir and \
                isinstance(source.get('file'), six.string_types) and \
                source['file'] != '-':
            source = {'file': os.path.join(base_dir, source['file'])}
        dot_only = command == 'export-dot'
        if dot_only:
            computations = DOT_COMPUTATIONS
        else:
            computations = config.get(
                'computations', [command] if command else COMPUTATIONS)
        if isinstance(computations, six.string_types):
            computations = [computations]
        caps = config.get('caps') or {}
        if not isinstance(caps, dict):
            raise exceptions.JobConfigurationException(
                'caps must be a mapping')
        return JobSpec(source, computations,
                       field=config.get('field', 'q'),
                       caps=caps,
                       verification_primes=config.get('verification_primes'),
                       output=config.get('output', DEFAULT_OUTPUT),
                       use_cache=config.get('cache', True),
                       audit_config=config.get('audit'),
                       dot_only=dot_only)


class Conductor(object):
    """Carries out a job: ingests the semigroup, serves cached reports,
    runs the missing computations as a play and writes every artifact
    atomically."""

    def __init__(self, job, cache_dir=None, out=sys.stdout):
        self._job = job
        self._out = out
        self._provider = providers.SemigroupProviderFactory.from_config(
            job.source, job.caps)
        self._cache = cache.ResultCache(cache_dir, enabled=job.use_cache)
        self.auditor = audit.AuditorFactory.from_config(job.audit_config)

    @property
    def job(self):
        return self._job

    def semigroup(self):
        return self._provider.semigroup()

    def _keep(self, filename):
        return filename.endswith('.dot') if self._job.dot_only else True

    def run(self):
        """Returns the sorted list of written paths."""
        try:
            return self._run()
        finally:
            self.auditor.close()

    def _run(self):
        semigroup = self.semigroup()
        artifacts = {}
        missing = []
        keys = {}
        for computation in self._job.computations:
            keys[computation] = cache.content_key(
                semigroup, self._job.parameters(computation))
            cached = self._cache.get(keys[computation], computation)
            if cached is None:
                missing.append(computation)
            else:
                artifacts.update(cached)

        if missing:
            context = plays.tasks.Context(semigroup, self._job,
                                          self._provider.provenance())
            play = plays.ComputationPlay(missing, context,
                                         auditor=self.auditor, out=self._out)
            play.run()
            for computation in missing:
                produced = play.tasks[computation].artifacts
                self._cache.put(keys[computation], computation, produced)
                artifacts.update(produced)

        written = []
        for filename in sorted(artifacts):
            if not self._keep(filename):
                continue
            path = os.path.join(self._job.output, filename)
            cache.atomic_write(path, artifacts[filename])
            written.append(path)
        logger.debug('wrote %d artifacts to %s', len(written),
                     self._job.output)
        return written
