# Copyright (C) 2026 The groupoidal developers.
#
# On-disk cache of computed reports, one JSON file per (input, command).

import hashlib
import json
import logging
import os
import tempfile

from . import entities

CACHE_DIR_ENV = 'GROUPOIDAL_CACHE_DIR'

logger = logging.getLogger(__name__)


def default_directory():
    return os.environ.get(CACHE_DIR_ENV) or \
        os.path.join(os.path.expanduser('~'), '.cache', 'groupoidal')


def atomic_write(path, text):
    """Write text to path through a temporary file and a rename."""
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory):
        os.makedirs(directory)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix='.tmp-')
    try:
        with os.fdopen(fd, 'w') as f:
            f.write(text)
        os.replace(tmp, path)
    except Exception:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def content_key(semigroup, parameters):
    """sha256 over the semigroup's canonical JSON and the job parameters."""
    digest = hashlib.sha256()
    digest.update(semigroup.canonical_json().encode('utf-8'))
    digest.update(entities.dumps(parameters).encode('utf-8'))
    return digest.hexdigest()


class ResultCache(object):
    """Artifacts of a computation ({filename: text}) stored under
    <directory>/<key>-<command>.json."""

    def __init__(self, directory=None, enabled=True):
        self._directory = directory or default_directory()
        self._enabled = enabled

    @property
    def directory(self):
        return self._directory

    def _path(self, key, command):
        return os.path.join(self._directory,
                            '{}-{}.json'.format(key, command))

    def get(self, key, command):
        if not self._enabled:
            return None
        path = self._path(key, command)
        if not os.path.exists(path):
            return None
        try:
            with open(path) as f:
                artifacts = json.load(f)
        except (IOError, ValueError):
            logger.warning('ignoring unreadable cache entry %s', path)
            return None
        logger.debug('cache hit for %s (%s)', command, key[:12])
        return artifacts

    def put(self, key, command, artifacts):
        if not self._enabled:
            return
        atomic_write(self._path(key, command), entities.dumps(artifacts))
