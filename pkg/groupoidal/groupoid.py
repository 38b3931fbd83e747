# Copyright (C) 2026 The groupoidal developers.
#
# Finite groupoids: restricted products, the Paterson groupoid over L(S),
# local groups and the topology basis.

import itertools
import logging

from . import core
from . import cosets
from . import entities
from . import exceptions
from . import order

DEFAULT_BASIS_CAP = 100000

logger = logging.getLogger(__name__)


class FiniteGroupoid(entities.Entity):
    """A finite groupoid with objects 0..k-1 and arrows 0..m-1.

    Args:
        objects: labels of the objects.
        arrows: list of (label, source, target) triples.
        compose: callable (a, b) -> arrow for a defined product a.b, which
            exists exactly when source(a) == target(b).
        inverse: the inverse arrow of every arrow.
        identities: the identity arrow of every object.
    """

    def __init__(self, objects, arrows, compose, inverse, identities,
                 name='G', verify=True):
        super(FiniteGroupoid, self).__init__(name)
        self._objects = [str(o) for o in objects]
        self._labels = [str(a[0]) for a in arrows]
        self._source = [a[1] for a in arrows]
        self._target = [a[2] for a in arrows]
        self._inverse = list(inverse)
        self._identities = list(identities)
        self._products = {}
        for a in range(len(arrows)):
            for b in range(len(arrows)):
                if self._source[a] == self._target[b]:
                    self._products[(a, b)] = compose(a, b)
        if verify:
            self.validate()

    def validate(self):
        n = len(self._labels)
        for (a, b), ab in self._products.items():
            if not 0 <= ab < n or self._source[ab] != self._source[b] or \
                    self._target[ab] != self._target[a]:
                raise exceptions.ValidationException(
                    '{}.{} has the wrong ends'.format(self._labels[a],
                                                      self._labels[b]),
                    witness=(a, b))
        for (a, b), ab in self._products.items():
            for c in range(n):
                if self._target[c] != self._source[b]:
                    continue
                if self._products[(ab, c)] != \
                        self._products[(a, self._products[(b, c)])]:
                    raise exceptions.NonAssociativeException(
                        'groupoid composition is not associative',
                        witness=(a, b, c))
        for a in range(n):
            left = self._identities[self._target[a]]
            right = self._identities[self._source[a]]
            if self._products[(left, a)] != a or \
                    self._products[(a, right)] != a:
                raise exceptions.ValidationException(
                    'identity laws fail at {}'.format(self._labels[a]),
                    witness=a)
            inv = self._inverse[a]
            if self._products.get((a, inv)) != left or \
                    self._products.get((inv, a)) != right:
                raise exceptions.InverseException(
                    'inverse laws fail at {}'.format(self._labels[a]),
                    witness=a)

    @property
    def objects(self):
        return list(self._objects)

    @property
    def arrows(self):
        return list(range(len(self._labels)))

    @property
    def labels(self):
        return list(self._labels)

    def source(self, a):
        return self._source[a]

    def target(self, a):
        return self._target[a]

    def inverse(self, a):
        return self._inverse[a]

    def identity(self, obj):
        return self._identities[obj]

    def compose(self, a, b):
        """a.b, or None when source(a) != target(b)."""
        return self._products.get((a, b))

    def hom(self, x, y):
        """Arrows x -> y."""
        return [a for a in self.arrows
                if self._source[a] == x and self._target[a] == y]

    def to_dict(self):
        return {
            'name': self.name,
            'identities': self._objects,
            'arrows': [{'src': self._source[a], 'dst': self._target[a],
                        'label': self._labels[a]} for a in self.arrows],
        }


def restricted_product_groupoid(semigroup, name=None):
    """Objects are the idempotents, s is an arrow d(s) -> r(s), and s.t is
    defined when d(s) = r(t)."""
    idempotents = semigroup.idempotents
    position = dict((e, i) for i, e in enumerate(idempotents))
    arrows = [(semigroup.label(s), position[semigroup.d(s)],
               position[semigroup.r(s)]) for s in range(semigroup.size)]
    return FiniteGroupoid(
        [semigroup.label(e) for e in idempotents], arrows,
        semigroup.product,
        [semigroup.inverse(s) for s in range(semigroup.size)],
        idempotents, name=name or 'G({})'.format(semigroup.name))


def connected_components(groupoid):
    """Objects joined by some arrow, as a sorted partition."""
    components = dict((x, {x}) for x in range(len(groupoid.objects)))
    for a in groupoid.arrows:
        x, y = groupoid.source(a), groupoid.target(a)
        if components[x] is not components[y]:
            merged = components[x] | components[y]
            for z in merged:
                components[z] = merged
    return sorted(set(tuple(sorted(c)) for c in components.values()))


def local_group(groupoid, obj):
    """The group of arrows obj -> obj."""
    loops = groupoid.hom(obj, obj)
    index = dict((a, i) for i, a in enumerate(loops))
    mul = [[index[groupoid.compose(a, b)] for b in loops] for a in loops]
    return core.GroupTable(
        mul, identity=index[groupoid.identity(obj)],
        inv=[index[groupoid.inverse(a)] for a in loops],
        labels=[groupoid.labels[a] for a in loops], embedding=loops,
        name='G_{}'.format(groupoid.objects[obj]))


class PatersonGroupoid(FiniteGroupoid):
    """The restricted-product groupoid of L(S), keeping L(S) at hand."""

    def __init__(self, ls, name=None):
        table = ls.as_semigroup()
        base = restricted_product_groupoid(table)
        idempotents = table.idempotents
        arrows = [(base.labels[a], base.source(a), base.target(a))
                  for a in base.arrows]
        super(PatersonGroupoid, self).__init__(
            base.objects, arrows, table.product,
            [table.inverse(a) for a in base.arrows], idempotents,
            name=name or 'Paterson({})'.format(ls.semigroup.name),
            verify=False)
        self.ls = ls
        self.semigroup = ls.semigroup
        self._object_cosets = [ls[e] for e in idempotents]

    def object_coset(self, obj):
        """The closed directed inverse subsemigroup behind an object."""
        return self._object_cosets[obj]

    def object_subsemigroup(self, obj):
        return order.ClosedInverseSubsemigroup(
            self.semigroup, self._object_cosets[obj].carrier)

    def check_components(self):
        """Objects share a component iff their subsemigroups are
        conjugate."""
        components = connected_components(self)
        which = {}
        for i, c in enumerate(components):
            for x in c:
                which[x] = i
        n = len(self.objects)
        subsemigroups = [self.object_subsemigroup(x) for x in range(n)]
        for x in range(n):
            for y in range(n):
                conjugate = order.is_conjugate(subsemigroups[x],
                                               subsemigroups[y]) is not None
                if conjugate != (which[x] == which[y]):
                    raise exceptions.ValidationException(
                        'components disagree with conjugacy',
                        witness=(x, y))
        return True


def paterson_groupoid(semigroup, ls=None):
    """Paterson's groupoid of S, verified isomorphic to the restricted
    product groupoid of S through s -> s↑."""
    if ls is None:
        ls, _ = cosets.build_LS(semigroup)
    groupoid = PatersonGroupoid(ls)
    groupoid.validate()
    reference = restricted_product_groupoid(semigroup)
    if not check_groupoid_isomorphism(
            reference, groupoid,
            [ls.iota(s) for s in range(semigroup.size)]):
        raise exceptions.ValidationException(
            '{} is not isomorphic to {}'.format(groupoid.name,
                                                reference.name))
    return groupoid


def check_groupoid_isomorphism(first, second, arrow_map):
    """Whether arrow_map is an isomorphism of groupoids first -> second."""
    arrow_map = list(arrow_map)
    if len(arrow_map) != len(first.arrows) or \
            sorted(arrow_map) != second.arrows:
        return False
    objects = {}
    for a in first.arrows:
        for x, y in ((first.source(a), second.source(arrow_map[a])),
                     (first.target(a), second.target(arrow_map[a]))):
            if objects.setdefault(x, y) != y:
                return False
    if sorted(objects.values()) != list(range(len(second.objects))):
        return False
    for a in first.arrows:
        for b in first.arrows:
            ab = first.compose(a, b)
            image = second.compose(arrow_map[a], arrow_map[b])
            if (ab is None) != (image is None):
                return False
            if ab is not None and arrow_map[ab] != image:
                return False
    return True


def local_group_certificate(groupoid, obj):
    """Compare the local group at an object H with the σ-quotient of the
    bar closure of E(H).

    θ sends a loop A to the σ-class of any a in A.

    Returns:
        (local GroupTable, σ-quotient GroupTable, θ as a list, certificate
        dict with well_defined, injective, surjective and multiplicative).
    """
    semigroup = groupoid.semigroup
    local = local_group(groupoid, obj)
    h = groupoid.object_subsemigroup(obj)
    upper = order.bar_closure(h.filter)
    quotient, projection = core.sigma_quotient(semigroup, upper.carrier)

    well_defined = True
    theta = []
    for arrow in local.embedding:
        classes = set(projection.get(a) for a in groupoid.ls[arrow].carrier)
        if len(classes) != 1 or None in classes:
            well_defined = False
        theta.append(min(c for c in classes if c is not None)
                     if classes - {None} else None)
    certificate = {'well_defined': well_defined}
    certificate['injective'] = well_defined and \
        len(set(theta)) == len(theta)
    certificate['surjective'] = well_defined and \
        set(theta) == set(range(quotient.size))
    certificate['multiplicative'] = well_defined and all(
        theta[local.product(g, k)] == quotient.product(theta[g], theta[k])
        for g in range(local.size) for k in range(local.size))
    return local, quotient, theta, certificate


class PatersonCoordinate(object):
    """The pair [P, a] of a directed coset: P = (AA⁻¹)↑ and a in A."""

    def __init__(self, subsemigroup, representative):
        semigroup = subsemigroup.semigroup
        if semigroup.r(representative) not in subsemigroup:
            raise exceptions.ParameterException(
                'r({}) is not in {}'.format(semigroup.label(representative),
                                            subsemigroup.name))
        self.subsemigroup = subsemigroup
        self.representative = representative

    def carrier(self):
        """The coset (P.a)↑ the coordinate stands for."""
        semigroup = self.subsemigroup.semigroup
        return order.up_closure(semigroup, semigroup.set_product(
            self.subsemigroup.carrier, [self.representative]))

    def identified(self, other):
        """[P, a] = [P, b] iff pa = pb for some p in P."""
        if self.subsemigroup != other.subsemigroup:
            return False
        semigroup = self.subsemigroup.semigroup
        return any(semigroup.product(p, self.representative) ==
                   semigroup.product(p, other.representative)
                   for p in self.subsemigroup.carrier)

    def to_dict(self):
        return {'subsemigroup': sorted(self.subsemigroup.carrier),
                'representative': self.representative}


def paterson_coordinates(coset, representative=None):
    semigroup = coset.semigroup
    if not cosets.is_directed(semigroup, coset.carrier):
        raise exceptions.ParameterException(
            '{} is not directed'.format(coset.name))
    a = coset.carrier
    p = order.ClosedInverseSubsemigroup(
        semigroup, order.up_closure(
            semigroup, semigroup.set_product(a, semigroup.set_inverse(a))))
    rep = coset.representative if representative is None else representative
    if rep not in a:
        raise exceptions.ParameterException(
            '{} is not in {}'.format(semigroup.label(rep), coset.name))
    return PatersonCoordinate(p, rep)


class BasisSet(object):
    """U_s with the sets U_si removed, as a set of L(S) indices."""

    def __init__(self, element, excluded, members):
        self.element = element
        self.excluded = tuple(excluded)
        self.members = frozenset(members)

    def to_dict(self):
        return {'element': self.element, 'excluded': list(self.excluded),
                'members': sorted(self.members)}


def _antichains(semigroup, elements):
    elements = sorted(elements)
    for k in range(len(elements) + 1):
        for chain in itertools.combinations(elements, k):
            if all(not semigroup.natural_leq(a, b) and
                   not semigroup.natural_leq(b, a)
                   for a, b in itertools.combinations(chain, 2)):
                yield chain


def topology_basis(ls, cap=DEFAULT_BASIS_CAP):
    """The sets U_{s; s1..sn} over L(S), with s1..sn an antichain strictly
    below s, deduplicated by their members."""
    semigroup = ls.semigroup
    containing = [frozenset(i for i in range(len(ls)) if s in ls[i])
                  for s in range(semigroup.size)]
    basis = {}
    examined = 0
    for s in range(semigroup.size):
        strictly_below = semigroup.below(s) - {s}
        for chain in _antichains(semigroup, strictly_below):
            examined += 1
            if examined > cap:
                raise exceptions.CapExceededException(
                    'topology basis candidates', cap)
            members = containing[s]
            for t in chain:
                members = members - containing[t]
            if members and members not in basis:
                basis[members] = BasisSet(s, chain, members)
    logger.debug('topology basis of %s: %d sets from %d candidates',
                 ls.name, len(basis), examined)
    return sorted(basis.values(),
                  key=lambda b: (len(b.members), sorted(b.members)))


def is_basis(basis, points):
    """Covers every point, and every point in two sets lies in a third
    set inside both."""
    sets = [b.members for b in basis]
    if set().union(*sets) != set(points):
        return False
    for first in sets:
        for second in sets:
            both = first & second
            for x in both:
                if not any(x in third and third <= both for third in sets):
                    return False
    return True


def is_discrete(basis, points):
    singletons = set(b.members for b in basis if len(b.members) == 1)
    return all(frozenset([x]) in singletons for x in points)
