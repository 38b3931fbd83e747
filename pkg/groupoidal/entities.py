# Copyright (C) 2026 The groupoidal developers.
#
# Finite inverse semigroup toolkit.

import fractions
import json

import numpy
import six


def to_plain(thing):
    """Recursively convert a structure into JSON-friendly plain values.

    Sets become sorted lists, numpy integers become ints, rationals become
    [numerator, denominator] pairs and entities are replaced by their
    dictionary form.
    """
    if isinstance(thing, Entity):
        return to_plain(thing.to_dict())
    if isinstance(thing, dict):
        return {str(k): to_plain(v) for k, v in thing.items()}
    if isinstance(thing, (set, frozenset)):
        return [to_plain(x) for x in sorted(thing)]
    if isinstance(thing, (list, tuple)):
        return [to_plain(x) for x in thing]
    if isinstance(thing, fractions.Fraction):
        return [thing.numerator, thing.denominator]
    if isinstance(thing, (numpy.integer,)):
        return int(thing)
    if isinstance(thing, numpy.ndarray):
        return to_plain(thing.tolist())
    if thing is None or isinstance(thing, (bool, int, float) +
                                   six.string_types):
        return thing
    return repr(thing)


def dumps(data):
    """Deterministic JSON text: sorted keys, two-space indent, final LF."""
    return json.dumps(to_plain(data), indent=2, sort_keys=True,
                      separators=(',', ': ')) + '\n'


class Entity(object):
    """Base class for the named algebraic objects of the toolkit."""

    def __init__(self, name):
        self._name = name

    @property
    def name(self):
        """Get the name of this entity."""
        return self._name

    def __repr__(self):
        return '<{} {}>'.format(self.__class__.__name__, self._name)

    def to_dict(self):
        return {'name': self._name}

    def to_json(self):
        return dumps(self.to_dict())
