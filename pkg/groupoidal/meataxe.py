# Copyright (C) 2026 The groupoidal developers.
#
# Submodule search and composition factors over prime fields.
#
# A module is given by the matrices of a generating set of the acting
# algebra. Irreducibility is certified with the Holt-Rees form of Norton's
# test: for an algebra element a and an irreducible factor f of a
# polynomial annihilating a vector, if ker f(a) has dimension deg f and
# spinning a vector of ker f(a) (resp. of ker f(a)^T under the transposed
# generators) gives the whole space, the module is irreducible.

import logging
import random

import sympy

from . import exceptions
from . import linalg

DEFAULT_ATTEMPTS = 200

logger = logging.getLogger(__name__)


# Polynomials over GF(p) are handed around as coefficient lists, lowest
# degree first; sympy does the arithmetic.

X = sympy.Symbol('x')


def as_poly(coeffs, p):
    return sympy.Poly(list(reversed(coeffs)), X, modulus=p)


def coefficients(poly, p):
    return [int(c) % p for c in reversed(poly.all_coeffs())]


def irreducible_factors(h, p):
    """The distinct monic irreducible factors of h over GF(p)."""
    _, factors = as_poly(h, p).factor_list()
    return sorted((coefficients(f.monic(), p) for f, _ in factors),
                  key=lambda f: (len(f), f))


def _evaluate(f, a, field):
    """f(a) by Horner's rule."""
    n = len(a)
    result = linalg.zeros(n, n, field)
    for c in reversed(f):
        result = linalg.mat_mul(result, a, field)
        for i in range(n):
            result[i][i] = field.reduce(result[i][i] + c)
    return result


def _krylov_polynomial(a, v, field):
    """The monic polynomial of least degree with f(a)v = 0."""
    vectors = [v]
    while True:
        w = linalg.mat_vec(a, vectors[-1], field)
        try:
            coeffs = linalg.coordinates(vectors, [w], field)[0]
        except exceptions.ParameterException:
            vectors.append(w)
            continue
        return [field.neg(c) for c in coeffs] + [field.one]


def _random_vector(n, field, rng):
    while True:
        v = [rng.randrange(field.characteristic) for _ in range(n)]
        if any(v):
            return v


def _random_element(generators, field, n, rng):
    p = field.characteristic
    pool = list(generators)
    for _ in range(2):
        a, b = rng.choice(generators), rng.choice(generators)
        pool.append(linalg.mat_mul(a, b, field))
    result = linalg.zeros(n, n, field)
    for m in pool:
        c = rng.randrange(p)
        if c:
            result = linalg.mat_add(result, linalg.mat_scale(c, m, field),
                                    field)
    return result


def find_proper_submodule(generators, field, n, rng=None,
                          attempts=DEFAULT_ATTEMPTS):
    """A proper non-zero invariant subspace, or None when irreducible.

    Returns:
        A list of independent vectors spanning the submodule, or None.
    """
    if not field.characteristic:
        raise exceptions.FieldException(
            'submodule search needs a prime field, got {}'.format(
                field.name))
    if n <= 1:
        return None
    rng = rng or random.Random(0)
    generators = [g for g in generators if not linalg.is_zero(g)]
    if not generators:
        unit = [field.zero] * n
        unit[0] = field.one
        return [unit]
    transposed = [linalg.transpose(g) for g in generators]
    p = field.characteristic
    for attempt in range(attempts):
        a = _random_element(generators, field, n, rng)
        h = _krylov_polynomial(a, _random_vector(n, field, rng), field)
        for f in irreducible_factors(h, p):
            fa = _evaluate(f, a, field)
            kernel = linalg.nullspace(fa, field, n)
            if not kernel:
                continue
            u = linalg.spin([kernel[0]], generators, field, n)
            if len(u) < n:
                return u
            dual = linalg.nullspace(linalg.transpose(fa), field, n)
            w = linalg.spin([dual[0]], transposed, field, n)
            if len(w) < n:
                return linalg.nullspace(w, field, n)
            if len(kernel) == len(f) - 1:
                logger.debug('irreducible of dimension %d after %d attempts',
                             n, attempt + 1)
                return None
    raise exceptions.CapExceededException('submodule search attempts',
                                          attempts)


def composition_factors(generators, field, n, seed=0,
                        attempts=DEFAULT_ATTEMPTS):
    """Generator matrices of each composition factor, bottom first."""
    rng = random.Random(seed)

    def _walk(gens, dim):
        if dim == 0:
            return []
        u = find_proper_submodule(gens, field, dim, rng, attempts)
        if u is None:
            return [gens]
        sub, quotient = linalg.split(u, gens, field, dim)
        return _walk(sub, len(u)) + _walk(quotient, dim - len(u))

    return _walk([list(map(list, g)) for g in generators], n)
