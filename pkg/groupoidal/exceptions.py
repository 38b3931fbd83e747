# Copyright (C) 2026 The groupoidal developers.
#
# Finite inverse semigroup toolkit.

import sys


def raise_with_tb(info=None):
    info = info or sys.exc_info()
    raise info[1].with_traceback(info[2])


class GroupoidalException(Exception):
    """Base class for groupoidal exceptions."""

    kind = 'error'
    exit_code = 1

    def __init__(self, message, *args):
        self.message = message
        super(GroupoidalException, self).__init__(message, *args)

    def __str__(self):
        return str(self.message)

    def to_dict(self):
        """Machine-readable form, as emitted by the command-line tool."""
        return {'error': self.kind, 'message': str(self)}


class ParameterException(GroupoidalException):
    """Invalid parameter passed to an operation."""
    kind = 'parameter'
    exit_code = 4


class InputException(GroupoidalException):
    """Unreadable or malformed semigroup description."""
    kind = 'input'
    exit_code = 4

    def __init__(self, message, line=None, column=None):
        super(InputException, self).__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        if self.line is None:
            return str(self.message)
        if self.column is None:
            return '{} (line {})'.format(self.message, self.line)
        return '{} (line {}, column {})'.format(
            self.message, self.line, self.column)

    def to_dict(self):
        d = super(InputException, self).to_dict()
        if self.line is not None:
            d['line'] = self.line
            d['column'] = self.column
        return d


class JobConfigurationException(InputException):
    """Error in a job description."""
    kind = 'configuration'


class InvalidAuditorConfigurationException(JobConfigurationException):
    """Invalid configuration of one of the specified auditors."""


class ValidationException(GroupoidalException):
    """An algebraic law failed to hold; the witness names where."""
    kind = 'validation'
    exit_code = 2

    def __init__(self, message, witness=None):
        super(ValidationException, self).__init__(message)
        self.witness = witness

    def to_dict(self):
        d = super(ValidationException, self).to_dict()
        if self.witness is not None:
            d['witness'] = list(self.witness) \
                if isinstance(self.witness, (tuple, list)) else self.witness
        return d


class NonAssociativeException(ValidationException):
    """The multiplication table is not associative at (i, j, k)."""


class NonCommutingIdempotentsException(ValidationException):
    """Two idempotents do not commute."""


class InverseException(ValidationException):
    """An element has no inverse, or more than one."""


class ActionAxiomException(ValidationException):
    """A partial action breaks one of the action axioms."""


class RepresentationException(ValidationException):
    """A matrix assignment is not multiplicative."""


class CapExceededException(GroupoidalException):
    """An enumeration or dimension cap was hit."""
    kind = 'cap'
    exit_code = 3

    def __init__(self, what, cap):
        super(CapExceededException, self).__init__(
            '{} exceeds the configured cap of {}'.format(what, cap))
        self.what = what
        self.cap = cap


class FieldException(GroupoidalException):
    """The chosen field cannot be used for the requested computation."""
    kind = 'field'
    exit_code = 5
