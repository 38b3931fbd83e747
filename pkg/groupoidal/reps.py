# Copyright (C) 2026 The groupoidal developers.
#
# Matrix representations of finite inverse semigroups: induction from
# maximal subgroups, restriction, simplicity checks and the enumeration of
# all irreducible representations.

import functools
import itertools
import logging
import random

import sympy

from . import core
from . import entities
from . import exceptions
from . import fields
from . import linalg
from . import meataxe

DEFAULT_MAX_DIM = 512
DEFAULT_GROUP_ORDER_CAP = 24
EXHAUSTIVE_SPIN_LIMIT = 10 ** 5
SAMPLE_SPINS = 64
INTERTWINER_DIM_CAP = 3

logger = logging.getLogger(__name__)


def _matrix_to_pairs(m, field):
    return [[field.to_pair(x) for x in row] for row in m]


class _Representation(entities.Entity):
    """Shared behaviour of semigroup and group representations."""

    def __init__(self, field, matrices, dim, name, split):
        super(_Representation, self).__init__(name)
        self._field = field
        self._matrices = [linalg.coerce_matrix(m, field) for m in matrices]
        self._dim = dim
        self._split = split

    @property
    def field(self):
        return self._field

    @property
    def dim(self):
        return self._dim

    @property
    def split(self):
        """False when the module is irreducible but not known to stay so
        over extension fields."""
        return self._split

    @property
    def matrices(self):
        return self._matrices

    def matrix(self, s):
        return self._matrices[s]

    def trace_vector(self):
        return tuple(linalg.trace(m, self._field) for m in self._matrices)

    def _check_multiplicative(self, size, product):
        for s in range(size):
            ms = self._matrices[s]
            for t in range(size):
                if linalg.mat_mul(ms, self._matrices[t], self._field) != \
                        self._matrices[product(s, t)]:
                    raise exceptions.RepresentationException(
                        '{} is not multiplicative'.format(self.name),
                        witness=(s, t))


class MatrixRep(_Representation):
    """A representation s -> M(s) of a finite inverse semigroup."""

    def __init__(self, semigroup, field, matrices, name='M', split=True,
                 verify=True):
        matrices = list(matrices)
        if len(matrices) != semigroup.size:
            raise exceptions.ParameterException(
                'expected {} matrices, got {}'.format(semigroup.size,
                                                      len(matrices)))
        dim = len(matrices[0]) if matrices else 0
        super(MatrixRep, self).__init__(field, matrices, dim, name, split)
        self._semigroup = semigroup
        if verify:
            self.validate()

    def validate(self):
        for m in self._matrices:
            if len(m) != self._dim or any(len(r) != self._dim for r in m):
                raise exceptions.RepresentationException(
                    '{} has matrices of the wrong shape'.format(self.name))
        self._check_multiplicative(self._semigroup.size,
                                   self._semigroup.product)

    @property
    def semigroup(self):
        return self._semigroup

    @property
    def contracted(self):
        """True when S has a zero and it acts as the zero matrix."""
        zero = self._semigroup.zero
        return zero is not None and linalg.is_zero(self._matrices[zero])

    def generator_matrices(self):
        return [self._matrices[g] for g in self._semigroup.generators]

    def reduce(self, p):
        """The same matrices over GF(p)."""
        field = fields.PrimeField(p)
        return MatrixRep(self._semigroup, field, self._matrices,
                         name=self.name, split=self._split, verify=False)

    def idempotent_images(self):
        images = []
        for e in self._semigroup.idempotents:
            if self._matrices[e] not in images:
                images.append(self._matrices[e])
        return images

    def to_dict(self):
        s = self._semigroup
        return {
            'name': self.name,
            'field': self._field.name,
            'dim': self._dim,
            'split': self._split,
            'contracted': self.contracted,
            'matrices': dict((s.label(x), _matrix_to_pairs(m, self._field))
                             for x, m in enumerate(self._matrices)),
        }


class GroupRep(_Representation):
    """A representation of a GroupTable by invertible matrices."""

    def __init__(self, group, field, matrices, name='N', split=True,
                 verify=True):
        matrices = list(matrices)
        if len(matrices) != group.size:
            raise exceptions.ParameterException(
                'expected {} matrices, got {}'.format(group.size,
                                                      len(matrices)))
        dim = len(matrices[0])
        super(GroupRep, self).__init__(field, matrices, dim, name, split)
        self._group = group
        if verify:
            self.validate()

    def validate(self):
        if self._matrices[self._group.identity] != \
                linalg.identity(self._dim, self._field):
            raise exceptions.RepresentationException(
                'identity of {} is not the identity matrix'.format(
                    self._group.name), witness=(self._group.identity,))
        self._check_multiplicative(self._group.size, self._group.product)

    @property
    def group(self):
        return self._group

    def is_trivial(self):
        one = linalg.identity(self._dim, self._field)
        return self._dim == 1 and all(m == one for m in self._matrices)

    def reduce(self, p):
        return GroupRep(self._group, fields.PrimeField(p), self._matrices,
                        name=self.name, split=self._split, verify=False)

    def to_dict(self):
        g = self._group
        return {
            'name': self.name,
            'field': self._field.name,
            'dim': self._dim,
            'split': self._split,
            'matrices': dict((g.labels[x], _matrix_to_pairs(m, self._field))
                             for x, m in enumerate(self._matrices)),
        }


def matrices_from_generators(size, words, images, field):
    """Extend generator matrices to every element through product words.

    Args:
        words: (element, generator, rest) triples as built by
            core.product_words, each meaning element = generator.rest.
        images: generator -> matrix.
    """
    matrices = [None] * size
    for x, g, rest in words:
        matrices[x] = images[g] if rest is None else \
            linalg.mat_mul(images[g], matrices[rest], field)
    if any(m is None for m in matrices):
        raise exceptions.ParameterException(
            'generator words do not reach every element')
    return matrices


def regular_representation(semigroup, field):
    """kS acting on itself by left multiplication."""
    n = semigroup.size
    matrices = []
    for s in range(n):
        m = linalg.zeros(n, n, field)
        for x in range(n):
            m[semigroup.product(s, x)][x] = field.one
        matrices.append(m)
    return MatrixRep(semigroup, field, matrices,
                     name='k{}'.format(semigroup.name), verify=False)


def regular_group_representation(group, field):
    n = group.size
    matrices = []
    for g in range(n):
        m = linalg.zeros(n, n, field)
        for x in range(n):
            m[group.product(g, x)][x] = field.one
        matrices.append(m)
    return GroupRep(group, field, matrices, name='k{}'.format(group.name),
                    verify=False)


# Green's machinery.

def transversal_factorize(semigroup, e):
    """One element per H-class of L_e, and x = t.g for every x in L_e.

    e itself represents its own H-class.

    Returns:
        (T, factor) where T is sorted by r(t) and factor maps every x in
        L_e to (t, g) with t in T and g in the maximal subgroup at e.
    """
    semigroup.require_idempotent(e)
    l_class = [x for x in range(semigroup.size) if semigroup.d(x) == e]
    by_range = {}
    for x in l_class:
        by_range.setdefault(semigroup.r(x), []).append(x)
    transversal = [e if r == e else min(members)
                   for r, members in sorted(by_range.items())]
    chosen = dict((semigroup.r(t), t) for t in transversal)
    factor = {}
    for x in l_class:
        t = chosen[semigroup.r(x)]
        g = semigroup.product(semigroup.inverse(t), x)
        if semigroup.product(t, g) != x or semigroup.d(g) != e or \
                semigroup.r(g) != e:
            raise exceptions.ValidationException(
                '{} does not factor through {}'.format(
                    semigroup.label(x), semigroup.label(t)), witness=(x, t))
        factor[x] = (t, g)
    return transversal, factor


def _check_group_of(semigroup, e, group):
    members = [s for s in range(semigroup.size)
               if semigroup.d(s) == e and semigroup.r(s) == e]
    if group.embedding is None or sorted(group.embedding) != members:
        raise exceptions.ParameterException(
            '{} is not the maximal subgroup at {}'.format(
                group.name, semigroup.label(e)))
    return dict((s, i) for i, s in enumerate(group.embedding))


def induce(semigroup, e, module, max_dim=DEFAULT_MAX_DIM):
    """Ind_e(N) = kL_e ⊗ N on the basis T x basis(N).

    s sends t ⊗ n to t' ⊗ g.n when st lies in L_e and st = t'g, and to
    zero otherwise.
    """
    position = _check_group_of(semigroup, e, module.group)
    transversal, factor = transversal_factorize(semigroup, e)
    k = module.dim
    dim = len(transversal) * k
    if dim > max_dim:
        raise exceptions.CapExceededException(
            'dimension of the induced module', max_dim)
    field = module.field
    slot = dict((t, i) for i, t in enumerate(transversal))
    matrices = []
    for s in range(semigroup.size):
        m = linalg.zeros(dim, dim, field)
        for i, t in enumerate(transversal):
            st = semigroup.product(s, t)
            if semigroup.d(st) != e:
                continue
            target, g = factor[st]
            j = slot[target]
            block = module.matrix(position[g])
            for r in range(k):
                for c in range(k):
                    m[j * k + r][i * k + c] = block[r][c]
        matrices.append(m)
    return MatrixRep(
        semigroup, field, matrices,
        name='Ind_{}({})'.format(semigroup.label(e), module.name),
        split=module.split)


def induce_via_quotient(semigroup, e, module, max_dim=DEFAULT_MAX_DIM):
    """Ind_e(N) built over the Rees quotient S/I_e.

    Returns:
        (quotient semigroup, MatrixRep of the quotient).
    """
    position = _check_group_of(semigroup, e, module.group)
    ideal = ideal_Ie(semigroup, e)
    quotient = rees_quotient(semigroup, ideal)
    projection = rees_projection(semigroup, ideal)
    preimage = dict((q, s) for s, q in enumerate(projection)
                    if s not in ideal)
    qe = projection[e]
    group = core.maximal_subgroup(quotient, qe)
    moved = GroupRep(group, module.field,
                     [module.matrix(position[preimage[x]])
                      for x in group.embedding],
                     name=module.name, split=module.split)
    return quotient, induce(quotient, qe, moved, max_dim=max_dim)


def restrict(rep, e):
    """The maximal subgroup G_e acting on the column space of M(e)."""
    semigroup = rep.semigroup
    semigroup.require_idempotent(e)
    group = core.maximal_subgroup(semigroup, e)
    field = rep.field
    columns = linalg.transpose(rep.matrix(e), rep.dim)
    basis = linalg.echelon_basis(columns, field, rep.dim) if columns else []
    if not basis:
        return GroupRep(group, field, [[] for _ in range(group.size)],
                        name='Res_{}({})'.format(semigroup.label(e),
                                                 rep.name),
                        split=rep.split, verify=False)
    matrices = linalg.restrict(basis, [rep.matrix(g)
                                       for g in group.embedding], field)
    return GroupRep(group, field, matrices,
                    name='Res_{}({})'.format(semigroup.label(e), rep.name),
                    split=rep.split)


def ideal_Ie(semigroup, e):
    """SeS minus the J-class of e."""
    semigroup.require_idempotent(e)
    top = semigroup.ideal(e)
    return frozenset(x for x in top if semigroup.ideal(x) != top)


def _check_ideal(semigroup, ideal):
    for x in ideal:
        for s in range(semigroup.size):
            if semigroup.product(s, x) not in ideal or \
                    semigroup.product(x, s) not in ideal:
                raise exceptions.ParameterException(
                    '{} is not an ideal'.format(
                        '{' + ','.join(semigroup.label(y)
                                       for y in sorted(ideal)) + '}'))


def rees_projection(semigroup, ideal):
    """Index in S/I of every element of S; the ideal goes to 0."""
    ideal = frozenset(ideal)
    if not ideal:
        return list(range(semigroup.size))
    rest = [x for x in range(semigroup.size) if x not in ideal]
    position = dict((x, i + 1) for i, x in enumerate(rest))
    return [position.get(x, 0) for x in range(semigroup.size)]


def rees_quotient(semigroup, ideal):
    """S/I with I collapsed to a new zero at index 0 (S itself when I is
    empty)."""
    ideal = frozenset(ideal)
    if not ideal:
        return semigroup
    _check_ideal(semigroup, ideal)
    projection = rees_projection(semigroup, ideal)
    rest = [x for x in range(semigroup.size) if x not in ideal]
    elements = [min(ideal)] + rest
    mul = [[projection[semigroup.product(a, b)] for b in elements]
           for a in elements]
    inv = [projection[semigroup.inverse(a)] for a in elements]
    inv[0] = 0
    labels = [semigroup.label(a) for a in rest]
    zero = '0' if '0' not in labels else '0_I'
    return core.FiniteInverseSemigroup(
        mul, inv=inv, labels=[zero] + labels,
        name='{}/I'.format(semigroup.name))


def is_primitive(semigroup, e):
    """e is non-zero and only e and 0 lie below it."""
    semigroup.require_idempotent(e)
    zero = semigroup.zero
    if zero is None:
        raise exceptions.ParameterException(
            'primitivity needs a semigroup with zero')
    if e == zero:
        return False
    return all(f in (e, zero) for f in semigroup.below(e)
               if semigroup.is_idempotent(f))


def _all_zero(rep):
    return all(linalg.is_zero(m) for m in rep.matrices)


def _projective_vectors(n, p):
    """One non-zero vector per line of GF(p)^n."""
    for lead in range(n):
        for tail in itertools.product(range(p), repeat=n - lead - 1):
            yield [0] * lead + [1] + list(tail)


def is_simple_module(rep, max_dim=DEFAULT_MAX_DIM, seed=0):
    """Whether a module over GF(p) has no non-zero proper submodule.

    Every line is spun when p^dim is small; larger modules spin a sample
    and then run the submodule search, whose negative answer is a
    certificate.

    Returns:
        (simple, witness) where witness spans a proper submodule or is
        None.
    """
    field = rep.field
    if not field.characteristic:
        raise exceptions.FieldException(
            'simplicity is checked over a prime field; reduce {} first'
            .format(rep.name))
    n = rep.dim
    if n > max_dim:
        raise exceptions.CapExceededException('module dimension', max_dim)
    if n == 0 or _all_zero(rep):
        return False, []
    gens = rep.generator_matrices()
    images = [col for m in gens for col in linalg.transpose(m, n)]
    span = linalg.echelon_basis(images, field, n)
    if len(span) < n:
        return False, span
    p = field.characteristic
    if p ** n <= EXHAUSTIVE_SPIN_LIMIT:
        for v in _projective_vectors(n, p):
            u = linalg.spin([v], gens, field, n)
            if len(u) < n:
                return False, u
        return True, None
    rng = random.Random(seed)
    candidates = [[field.one if i == j else field.zero for i in range(n)]
                  for j in range(n)]
    candidates += [[rng.randrange(p) for _ in range(n)]
                   for _ in range(SAMPLE_SPINS)]
    for v in candidates:
        if any(v):
            u = linalg.spin([v], gens, field, n)
            if len(u) < n:
                return False, u
    u = meataxe.find_proper_submodule(gens, field, n, rng)
    return (u is None), u


def largest_submodule_annihilated_by(rep, e):
    """The largest submodule inside ker M(e)."""
    field = rep.field
    n = rep.dim
    gens = rep.generator_matrices()
    w = linalg.nullspace(rep.matrix(e), field, n)
    while w:
        annihilator = linalg.nullspace(w, field, n)
        rows = list(annihilator)
        for g in gens:
            rows.extend(linalg.mat_mul(annihilator, g, field)
                        if annihilator else [])
        smaller = linalg.nullspace(rows, field, n) if rows else \
            [list(v) for v in w]
        if len(smaller) == len(w):
            return linalg.echelon_basis(smaller, field, n)
        w = smaller
    return []


# Group irreducibles.

def _extend_group(group, gens, images, field, name, split=True):
    words = core.product_words(group.table, gens)
    matrices = matrices_from_generators(group.size, words,
                                        dict(zip(gens, images)), field)
    return GroupRep(group, field, matrices, name=name, split=split)


def _characters(group, field, roots):
    gens = group.generators()
    # the all-ones assignment comes first and names the trivial character
    roots = sorted(roots, key=lambda x: x != field.one)
    found = {}
    for values in itertools.product(roots, repeat=len(gens)):
        try:
            rep = _extend_group(group, gens, [[[v]] for v in values], field,
                                name='chi')
        except exceptions.RepresentationException:
            continue
        found.setdefault(rep.trace_vector(), rep)
    return [GroupRep(group, field, rep.matrices, name='chi{}'.format(i),
                     verify=False)
            for i, rep in enumerate(found.values())]


def _cyclotomic(n):
    """Integer coefficients of the n-th cyclotomic polynomial, lowest degree
    first."""
    poly = sympy.Poly(sympy.cyclotomic_poly(n, meataxe.X), meataxe.X)
    return [int(c) for c in reversed(poly.all_coeffs())]


def _companion(poly, field):
    """Companion matrix of a monic polynomial (lowest coefficient first)."""
    k = len(poly) - 1
    m = linalg.zeros(k, k, field)
    for i in range(1, k):
        m[i][i - 1] = field.one
    for i in range(k):
        m[i][k - 1] = field.coerce(-poly[i])
    return m


def _rational_cyclic(group, field):
    n = group.size
    generator = next(g for g in range(n) if group.element_order(g) == n)
    reps = []
    for d in sorted(d for d in range(1, n + 1) if n % d == 0):
        c = _companion(_cyclotomic(d), field)
        reps.append(_extend_group(group, [generator], [c], field,
                                  name='phi{}'.format(d), split=len(c) == 1))
    return reps


def _symmetric3(group, field):
    a = next(g for g in range(group.size) if group.element_order(g) == 3)
    b = next(g for g in range(group.size) if group.element_order(g) == 2)
    one, zero = field.one, field.zero
    minus = field.neg(one)
    return [
        _extend_group(group, [a, b], [[[one]], [[one]]], field, 'trivial'),
        _extend_group(group, [a, b], [[[one]], [[minus]]], field, 'sign'),
        _extend_group(group, [a, b],
                      [[[zero, minus], [one, minus]], [[zero, one],
                                                       [one, zero]]],
                      field, 'standard'),
    ]


def _regular_decomposition(group, field, seed=0):
    regular = regular_group_representation(group, field)
    gens = group.generators()
    factors = meataxe.composition_factors(
        [regular.matrix(g) for g in gens], field, group.size, seed=seed)
    words = core.product_words(group.table, gens)
    grouped = {}
    for images in factors:
        matrices = matrices_from_generators(group.size, words,
                                            dict(zip(gens, images)), field)
        rep = GroupRep(group, field, matrices, name='N')
        entry = grouped.setdefault(rep.trace_vector(), [rep, 0])
        entry[1] += 1
    result = []
    for i, (rep, multiplicity) in enumerate(grouped.values()):
        result.append(GroupRep(group, field, rep.matrices,
                               name='N{}'.format(i),
                               split=multiplicity == rep.dim, verify=False))
    return result


def _sort_group_reps(reps):
    def key(rep):
        return (not rep.is_trivial(), rep.dim,
                [rep.field.to_pair(t) for t in rep.trace_vector()])
    return sorted(reps, key=key)


def has_rational_form(group):
    """Whether a closed rational construction covers the group: abelian
    groups of exponent at most 2, cyclic groups and the symmetric group of
    order 6."""
    if group.is_abelian():
        return group.exponent() <= 2 or group.exponent() == group.size
    return group.size == 6


def splitting_prime(exponent):
    """The least prime p with p = 1 mod exponent.

    GF(p) then holds every exponent-th root of unity and splits every group
    of that exponent; p divides none of their orders.
    """
    p = sympy.nextprime(1)
    while (p - 1) % exponent:
        p = sympy.nextprime(p)
    return p


def group_irreducibles(group, field, max_order=DEFAULT_GROUP_ORDER_CAP,
                       seed=0):
    """Pairwise non-isomorphic irreducible representations of a group.

    Closed forms cover abelian groups whose exponent splits in the field,
    rational cyclic groups (through cyclotomic companion matrices) and the
    symmetric group of order 6. Anything else is split out of the regular
    module over GF(p); over the rationals p is the least splitting prime of
    the group and the representations come back over GF(p).
    """
    field = fields.parse_field(field)
    n = group.size
    if n > max_order:
        raise exceptions.CapExceededException('group order', max_order)
    p = field.characteristic
    if p and n % p == 0:
        raise exceptions.FieldException(
            'characteristic {} divides the order {} of {}'.format(
                p, n, group.name))
    if not p and not has_rational_form(group):
        q = splitting_prime(group.exponent())
        logger.info('no rational construction for %s of order %d; '
                    'splitting over GF(%d)', group.name, n, q)
        return group_irreducibles(group, fields.PrimeField(q),
                                  max_order=max_order, seed=seed)
    if group.is_abelian():
        roots = field.roots_of_unity(group.exponent())
        if len(roots) == group.exponent():
            reps = _characters(group, field, roots)
        elif not p:
            reps = _rational_cyclic(group, field)
        else:
            reps = _regular_decomposition(group, field, seed)
    elif n == 6:
        reps = _symmetric3(group, field)
    else:
        reps = _regular_decomposition(group, field, seed)
    reps = _sort_group_reps(reps)
    if all(r.split for r in reps) and sum(r.dim ** 2 for r in reps) != n:
        raise exceptions.ValidationException(
            'irreducibles of {} do not account for its order'.format(
                group.name), witness=[r.dim for r in reps])
    return reps


def irreducible_representations(semigroup, field, max_dim=DEFAULT_MAX_DIM,
                                seed=0):
    """Ind_e(N) for one idempotent e per D-class and every irreducible N of
    the maximal subgroup at e.

    Over the rationals, when some maximal subgroup has no closed rational
    construction, every module is built over GF(p) instead, p being the
    least splitting prime of all the maximal subgroups together. The
    field of the returned representations tells which one was used.
    """
    field = fields.parse_field(field)
    groups = [(e, core.maximal_subgroup(semigroup, e))
              for e in semigroup.green_data().representatives()]
    if not field.characteristic and \
            not all(has_rational_form(g) for _, g in groups):
        exponent = functools.reduce(
            sympy.ilcm, [g.exponent() for _, g in groups], 1)
        field = fields.PrimeField(splitting_prime(exponent))
        logger.info('%s has maximal subgroups with no rational '
                    'construction; working over %s', semigroup.name,
                    field.name)
    reps = []
    for e, group in groups:
        for module in group_irreducibles(group, field, seed=seed):
            reps.append(induce(semigroup, e, module, max_dim=max_dim))
    traces = [r.trace_vector() for r in reps]
    if len(set(traces)) != len(traces):
        raise exceptions.ValidationException(
            'two induced modules of {} share a trace vector'.format(
                semigroup.name))
    logger.debug('%s has %d irreducibles of dimensions %s',
                 semigroup.name, len(reps), [r.dim for r in reps])
    return reps


def completeness(semigroup, reps):
    """Sum of squared dimensions against |S|, when every rep splits."""
    total = sum(r.dim ** 2 for r in reps)
    return {
        'split': all(r.split for r in reps),
        'sum_of_squares': total,
        'order': semigroup.size,
        'complete': all(r.split for r in reps) and total == semigroup.size,
    }


def certify_simple(reps, primes, max_dim=DEFAULT_MAX_DIM):
    """Check every module for simplicity over each verification prime.

    Rational modules are reduced modulo each prime; modules over GF(p)
    are only checked over their own field.

    Returns:
        One {prime: bool} dict per representation.
    """
    results = []
    for rep in reps:
        p = rep.field.characteristic
        if p:
            results.append({p: is_simple_module(rep, max_dim=max_dim)[0]})
            continue
        results.append(dict(
            (q, is_simple_module(rep.reduce(q), max_dim=max_dim)[0])
            for q in primes))
    return results


def check_certificates(rep, verdict, annihilated):
    """Raise ValidationException when a certificate of an irreducible
    fails.

    verdict is the {prime: simple} dict of certify_simple and annihilated
    the submodule of rep killed by its apex idempotent, which must be zero.
    A rational module that does not split may legitimately fall apart
    modulo a prime; every other failing verdict is a defect.
    """
    if annihilated:
        raise exceptions.ValidationException(
            '{} has a non-zero submodule annihilated by its apex'.format(
                rep.name), witness=[rep.name, len(annihilated)])
    for p in sorted(verdict):
        if verdict[p]:
            continue
        if rep.split or rep.field.characteristic:
            raise exceptions.ValidationException(
                '{} is not simple over GF({})'.format(rep.name, p),
                witness=[rep.name, p])


def semilattice_bound_check(rep):
    """The images of E(S) are commuting idempotent matrices, at most 2^dim
    of them."""
    field = rep.field
    images = rep.idempotent_images()
    for m in images:
        if linalg.mat_mul(m, m, field) != m:
            raise exceptions.RepresentationException(
                'an idempotent maps to a non-idempotent matrix')
        for k in images:
            if linalg.mat_mul(m, k, field) != linalg.mat_mul(k, m, field):
                raise exceptions.RepresentationException(
                    'idempotent images do not commute')
    return len(images) <= 2 ** rep.dim


def regular_module_factors(semigroup, p, seed=0):
    """Composition factors of kS over GF(p), grouped by trace vector.

    Returns:
        A list of (MatrixRep, multiplicity) pairs.
    """
    regular = regular_representation(semigroup, fields.PrimeField(p))
    grouped = {}
    for rep in composition_factors(regular, seed=seed):
        grouped.setdefault(rep.trace_vector(), [rep, 0])[1] += 1
    return [tuple(v) for _, v in sorted(grouped.items())]


def check_regular_decomposition(semigroup, reps, p, seed=0):
    """Each irreducible reduced mod p matches one composition factor class
    of kS with multiplicity equal to its dimension, and nothing is left
    over."""
    factors = regular_module_factors(semigroup, p, seed=seed)
    by_trace = dict((rep.trace_vector(), (rep, m)) for rep, m in factors)
    seen = set()
    for rep in reps:
        trace = rep.reduce(p).trace_vector()
        if trace not in by_trace:
            raise exceptions.ValidationException(
                '{} is not a composition factor of the regular module'
                .format(rep.name))
        factor, multiplicity = by_trace[trace]
        if factor.dim != rep.dim or multiplicity != rep.dim:
            raise exceptions.ValidationException(
                '{} appears {} times in the regular module'.format(
                    rep.name, multiplicity))
        seen.add(trace)
    if seen != set(by_trace):
        raise exceptions.ValidationException(
            'the regular module has composition factors outside the list')
    return True


def find_intertwiner(first, second, cap=INTERTWINER_DIM_CAP):
    """An invertible P with P.A(g) = B(g).P for all g, or None."""
    field = first.field
    n = first.dim
    if n != second.dim:
        return None
    if n > cap:
        raise exceptions.CapExceededException('intertwiner dimension', cap)
    if n == 0:
        return []
    # unknowns P[i][j] at position i * n + j
    rows = []
    for a, b in zip(first.matrices, second.matrices):
        for i in range(n):
            for j in range(n):
                row = [field.zero] * (n * n)
                for k in range(n):
                    row[i * n + k] = field.reduce(row[i * n + k] + a[k][j])
                    row[k * n + j] = field.reduce(row[k * n + j] - b[i][k])
                rows.append(row)
    solutions = linalg.nullspace(rows, field, n * n)
    if not solutions:
        return None
    for coeffs in itertools.product(range(-2, 3), repeat=len(solutions)):
        if not any(coeffs):
            continue
        flat = [field.zero] * (n * n)
        for c, v in zip(coeffs, solutions):
            if c:
                flat = [field.reduce(x + field.coerce(c) * y)
                        for x, y in zip(flat, v)]
        p = [flat[i * n:(i + 1) * n] for i in range(n)]
        if linalg.determinant(p, field) != 0:
            return p
    return None


def restriction_of_induced(semigroup, e, module):
    """Compare Res_e(Ind_e(N)) with N by dimension, character and, for
    small dimensions, an explicit intertwiner."""
    back = restrict(induce(semigroup, e, module), e)
    result = {
        'dimension': back.dim == module.dim,
        'character': back.trace_vector() == module.trace_vector(),
    }
    if module.dim <= INTERTWINER_DIM_CAP:
        result['intertwiner'] = find_intertwiner(back, module) is not None
    return result


def extend_to_cosets(rep, ls):
    """The action of L(S) on a module, sending A to M(min A).

    Every directed coset of a finite semigroup is s↑ for its minimum s;
    the extension is checked to agree with ι and to be multiplicative.

    Returns:
        A list of matrices indexed by the elements of L(S).
    """
    semigroup = rep.semigroup
    field = rep.field
    matrices = []
    for coset in ls.elements:
        carrier = coset.carrier
        minimum = [s for s in carrier
                   if all(semigroup.natural_leq(s, t) for t in carrier)]
        if len(minimum) != 1:
            raise exceptions.ValidationException(
                '{} has no minimum'.format(coset.name))
        matrices.append(rep.matrix(minimum[0]))
    for s in range(semigroup.size):
        if matrices[ls.iota(s)] != rep.matrix(s):
            raise exceptions.RepresentationException(
                'extension disagrees with ι at {}'.format(
                    semigroup.label(s)), witness=(s,))
    for i in range(len(ls)):
        for j in range(len(ls)):
            if linalg.mat_mul(matrices[i], matrices[j], field) != \
                    matrices[ls.product(i, j)]:
                raise exceptions.RepresentationException(
                    'extension to {} is not multiplicative'.format(ls.name),
                    witness=(i, j))
    return matrices


def composition_factors(rep, seed=0):
    """Composition factors of a module over GF(p), bottom first."""
    if not rep.field.characteristic:
        raise exceptions.FieldException(
            'composition factors are computed over a prime field')
    semigroup = rep.semigroup
    words = semigroup.generator_words()
    gens = semigroup.generators
    factors = meataxe.composition_factors(rep.generator_matrices(),
                                          rep.field, rep.dim, seed=seed)
    return [MatrixRep(semigroup, rep.field,
                      matrices_from_generators(semigroup.size, words,
                                               dict(zip(gens, images)),
                                               rep.field),
                      name='{}[{}]'.format(rep.name, i))
            for i, images in enumerate(factors)]
