# Copyright (C) 2026 The groupoidal developers.
#
# Auditors recording the computations of a job as they run.

import getpass
import logging
import sys

import six

from . import entities
from . import exceptions

DEBUG = logging.DEBUG
INFO = logging.INFO

DEFAULT_AUDIT_LEVEL = 'info'
AUDIT_FORMAT = '%(asctime)s %(levelname)s: %(message)s'

_LEVELS = {
    'info': INFO,
    'debug': DEBUG,
}

logger = logging.getLogger(__name__)


def parse_level(level):
    if not isinstance(level, six.string_types):
        return level
    if level not in _LEVELS:
        raise exceptions.InvalidAuditorConfigurationException(
            'Invalid audit level {}; expected one of {}'.format(
                level, ', '.join(sorted(_LEVELS))))
    return _LEVELS[level]


def describe(subject):
    """Plain text for what a computation runs on: an entity, a name or a
    list of them."""
    if isinstance(subject, entities.Entity):
        return subject.name
    if isinstance(subject, six.string_types):
        return subject
    return ', '.join(describe(s) for s in subject)


def _user():
    try:
        return getpass.getuser()
    except Exception:
        return 'unknown'


class BaseAuditor(object):
    """Receives the lifecycle of every computation of a job.

    A computation is reported as started, then either finished (with its
    duration in seconds) or failed. Failures are always recorded; the other
    events only at or above the auditor's level.
    """

    def __init__(self, level=DEBUG):
        self._level = parse_level(level)

    @property
    def level(self):
        return self._level

    def started(self, level, computation, subject, who=None):
        raise NotImplementedError

    def finished(self, level, computation, subject, seconds=None):
        raise NotImplementedError

    def failed(self, computation, subject, message=None):
        raise NotImplementedError

    def close(self):
        pass


class _FailingAuditor(BaseAuditor):
    """Auditor that raises on every event, for tests of ignore_errors."""

    def _fail(self, *args, **kwargs):
        raise exceptions.GroupoidalException('auditor failure')

    started = finished = failed = _fail

    @staticmethod
    def from_config(cfg):
        return _FailingAuditor()


class LoggingAuditor(BaseAuditor):
    """Writes one line per event through a private logger and handler."""

    def __init__(self, handler, level):
        super(LoggingAuditor, self).__init__(level)
        handler.setFormatter(logging.Formatter(fmt=AUDIT_FORMAT))
        self._handler = handler
        self._logger = logging.getLogger(
            '{}.{}'.format(__name__, id(self)))
        self._logger.propagate = False
        self._logger.setLevel(self.level)
        self._logger.addHandler(handler)

    def started(self, level, computation, subject, who=None):
        self._logger.log(level, '{} started {} on {}.'.format(
            who or _user(), computation, describe(subject)))

    def finished(self, level, computation, subject, seconds=None):
        text = '{} on {} finished'.format(computation, describe(subject))
        if seconds is not None:
            text += ' in {:.3f}s'.format(seconds)
        self._logger.log(level, text + '.')

    def failed(self, computation, subject, message=None):
        text = '{} on {} failed'.format(computation, describe(subject))
        if message:
            text += ': {}'.format(message)
        self._logger.error(text)

    def close(self):
        self._logger.removeHandler(self._handler)
        self._handler.close()


class FileAuditor(LoggingAuditor):
    """Appends the events of every job to a log file."""

    def __init__(self, filename, level):
        if not filename:
            raise exceptions.InvalidAuditorConfigurationException(
                'A log auditor needs a file')
        super(FileAuditor, self).__init__(logging.FileHandler(filename),
                                          level)

    @staticmethod
    def from_config(cfg):
        return FileAuditor(cfg.get('file'),
                           cfg.get('level', DEFAULT_AUDIT_LEVEL))


class StreamAuditor(LoggingAuditor):
    """Writes the events to a stream, standard error by default."""

    def __init__(self, level, stream=None):
        super(StreamAuditor, self).__init__(
            logging.StreamHandler(stream or sys.stderr), level)

    @staticmethod
    def from_config(cfg):
        return StreamAuditor(cfg.get('level', DEFAULT_AUDIT_LEVEL))


def _deliver(auditor, event, args, tolerant):
    try:
        getattr(auditor, event)(*args)
    except Exception:
        if not tolerant:
            raise
        logger.debug('%s auditor failed on %s', type(auditor).__name__,
                     event, exc_info=True)


class NonFailingAuditor(BaseAuditor):
    """Wraps an auditor so that its failures never fail the job."""

    def __init__(self, auditor):
        super(NonFailingAuditor, self).__init__(auditor.level)
        self._auditor = auditor

    @property
    def wrapped(self):
        return self._auditor

    def started(self, *args):
        _deliver(self._auditor, 'started', args, tolerant=True)

    def finished(self, *args):
        _deliver(self._auditor, 'finished', args, tolerant=True)

    def failed(self, *args):
        _deliver(self._auditor, 'failed', args, tolerant=True)

    def close(self):
        self._auditor.close()


class MultiplexAuditor(BaseAuditor):
    """Broadcasts every event to several auditors.

    A failing auditor aborts the job when a computation starts; once the
    work is done, the outcome still reaches every other auditor.
    """

    def __init__(self, auditors):
        super(MultiplexAuditor, self).__init__(DEBUG)
        self._auditors = list(auditors)

    def get_auditors(self):
        return self._auditors

    def started(self, *args):
        for auditor in self._auditors:
            _deliver(auditor, 'started', args, tolerant=False)

    def finished(self, *args):
        for auditor in self._auditors:
            _deliver(auditor, 'finished', args, tolerant=True)

    def failed(self, *args):
        for auditor in self._auditors:
            _deliver(auditor, 'failed', args, tolerant=True)

    def close(self):
        for auditor in self._auditors:
            auditor.close()


class AuditorFactory(object):

    AUDITORS = {
        '_fail': _FailingAuditor,

        'log': FileAuditor,
        'stream': StreamAuditor,
    }

    @staticmethod
    def from_config(cfg):
        """Build a MultiplexAuditor from the audit section of a job."""
        if cfg is None:
            cfg = []
        if not isinstance(cfg, list):
            raise exceptions.InvalidAuditorConfigurationException(
                'audit must be a list of auditors')
        auditors = []
        for entry in cfg:
            if not isinstance(entry, dict) or 'type' not in entry:
                raise exceptions.InvalidAuditorConfigurationException(
                    'Auditor configuration must be a mapping with a type')
            kind = entry['type']
            if kind not in AuditorFactory.AUDITORS:
                raise exceptions.InvalidAuditorConfigurationException(
                    'Unknown auditor type {}; expected one of {}'.format(
                        kind, ', '.join(sorted(
                            k for k in AuditorFactory.AUDITORS
                            if not k.startswith('_')))))
            auditor = AuditorFactory.AUDITORS[kind].from_config(entry)
            if entry.get('ignore_errors') is True:
                auditor = NonFailingAuditor(auditor)
            auditors.append(auditor)
        return MultiplexAuditor(auditors)
