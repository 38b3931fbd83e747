# Copyright (C) 2026 The groupoidal developers.
#
# Exact scalar fields: the rationals and the prime fields GF(p).

import fractions

import sympy

from . import exceptions


class Field(object):
    """Base class for exact fields.

    Scalars are plain Python values (Fraction for the rationals, int in
    [0, p) for GF(p)) so that linear algebra can use the arithmetic
    operators directly and call reduce() to bring sums and products back to
    canonical form.
    """

    name = None
    characteristic = None

    zero = None
    one = None

    def coerce(self, x):
        raise NotImplementedError

    def reduce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def neg(self, x):
        return self.reduce(-x)

    def is_zero(self, x):
        return x == 0

    def to_pair(self, x):
        raise NotImplementedError

    def elements(self):
        raise exceptions.FieldException(
            '{} is not a finite field'.format(self.name))

    def roots_of_unity(self, n):
        """All x in the field with x^n = 1, in increasing order."""
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.name == other.name

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


class RationalField(Field):

    name = 'q'
    characteristic = 0

    zero = fractions.Fraction(0)
    one = fractions.Fraction(1)

    def coerce(self, x):
        return fractions.Fraction(x)

    def reduce(self, x):
        return x

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError('inverse of zero')
        return 1 / fractions.Fraction(x)

    def to_pair(self, x):
        x = fractions.Fraction(x)
        return [x.numerator, x.denominator]

    def roots_of_unity(self, n):
        return [fractions.Fraction(-1), self.one] if n % 2 == 0 \
            else [self.one]


class PrimeField(Field):

    def __init__(self, p):
        if not sympy.isprime(p):
            raise exceptions.FieldException('{} is not prime'.format(p))
        self.p = p
        self.name = 'gf:{}'.format(p)
        self.characteristic = p
        self.zero = 0
        self.one = 1

    def coerce(self, x):
        if isinstance(x, fractions.Fraction):
            if x.denominator % self.p == 0:
                raise exceptions.FieldException(
                    'cannot reduce {} modulo {}'.format(x, self.p))
            return (x.numerator * pow(x.denominator, self.p - 2, self.p)) \
                % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError('inverse of zero')
        return pow(x, self.p - 2, self.p)

    def to_pair(self, x):
        return [int(x) % self.p, 1]

    def elements(self):
        return list(range(self.p))

    def roots_of_unity(self, n):
        return [x for x in range(1, self.p) if pow(x, n, self.p) == 1]


RATIONALS = RationalField()


def parse_field(descriptor):
    """Parse a field descriptor: 'q' for the rationals, 'gf:p' for GF(p)."""
    if isinstance(descriptor, Field):
        return descriptor
    text = str(descriptor).strip().lower()
    if text in ('q', 'qq', 'rationals'):
        return RATIONALS
    if text.startswith('gf:'):
        try:
            p = int(text[3:])
        except ValueError:
            raise exceptions.FieldException(
                'Invalid prime in field descriptor {}'.format(descriptor))
        return PrimeField(p)
    raise exceptions.FieldException(
        'Unknown field {}; expected q or gf:p'.format(descriptor))
