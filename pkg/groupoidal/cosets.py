# Copyright (C) 2026 The groupoidal developers.
#
# Atlases and cosets, the coset semigroup K(S) and its directed part L(S).

import logging

from . import actions
from . import core
from . import entities
from . import exceptions
from . import order

DEFAULT_COSET_CAP = 20000
DEFAULT_TABLE_CAP = 2000

logger = logging.getLogger(__name__)


def is_atlas(semigroup, elements):
    """Whether A = AA⁻¹A."""
    a = frozenset(elements)
    return semigroup.set_product(
        semigroup.set_product(a, semigroup.set_inverse(a)), a) == a


class Coset(entities.Entity):
    """A closed atlas (sH)↑ with d(s) in H.

    The carrier determines H as (A⁻¹A)↑, and every element of the carrier
    has its domain idempotent in H, so the canonical representative is the
    smallest element index of the carrier.
    """

    def __init__(self, semigroup, carrier, subsemigroup=None, verify=True):
        self._semigroup = semigroup
        self._carrier = frozenset(carrier)
        if not self._carrier:
            raise exceptions.ParameterException('cosets are non-empty')
        if subsemigroup is None:
            subsemigroup = order.ClosedInverseSubsemigroup(
                semigroup, order.up_closure(semigroup, semigroup.set_product(
                    semigroup.set_inverse(self._carrier), self._carrier)),
                verify=verify)
        self._subsemigroup = subsemigroup
        self._representative = min(self._carrier)
        if verify:
            self.validate()
        super(Coset, self).__init__(
            order._format_set(semigroup, self._carrier))

    def validate(self):
        s = self._semigroup
        if not is_atlas(s, self._carrier):
            raise exceptions.ValidationException(
                '{} is not an atlas'.format(self.name),
                witness=sorted(self._carrier))
        if not order.is_upward_closed(s, self._carrier):
            raise exceptions.ValidationException(
                '{} is not upward closed'.format(self.name),
                witness=sorted(self._carrier))
        rep = self._representative
        if s.d(rep) not in self._subsemigroup:
            raise exceptions.ValidationException(
                'representative {} of {} is outside the domain'.format(
                    s.label(rep), self.name))
        rebuilt = order.up_closure(
            s, s.set_product([rep], self._subsemigroup.carrier))
        if rebuilt != self._carrier:
            raise exceptions.ValidationException(
                'canonical pair does not reproduce {}'.format(self.name),
                witness=sorted(rebuilt ^ self._carrier))

    @property
    def semigroup(self):
        return self._semigroup

    @property
    def carrier(self):
        return self._carrier

    @property
    def subsemigroup(self):
        return self._subsemigroup

    @property
    def representative(self):
        return self._representative

    def __iter__(self):
        return iter(sorted(self._carrier))

    def __len__(self):
        return len(self._carrier)

    def __contains__(self, s):
        return s in self._carrier

    def __eq__(self, other):
        return isinstance(other, Coset) and self._carrier == other._carrier

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._carrier)

    def sort_key(self):
        return (len(self._carrier), sorted(self._carrier))

    def to_dict(self):
        return {
            'elements': sorted(self._carrier),
            'labels': [self._semigroup.label(x)
                       for x in sorted(self._carrier)],
            'subsemigroup': sorted(self._subsemigroup.carrier),
            'representative': self._representative,
        }


def left_coset(s, h, verify=False):
    """The coset (sH)↑; needs d(s) in H."""
    semigroup = h.semigroup
    if semigroup.d(s) not in h:
        raise exceptions.ParameterException(
            'd({}) is not in {}'.format(semigroup.label(s), h.name))
    carrier = order.up_closure(semigroup, semigroup.set_product([s],
                                                                h.carrier))
    return Coset(semigroup, carrier, subsemigroup=h, verify=verify)


def cosets_of(h):
    """All distinct cosets of H, with H itself first."""
    semigroup = h.semigroup
    found = {}
    for s in range(semigroup.size):
        if semigroup.d(s) in h:
            c = left_coset(s, h)
            found.setdefault(c.carrier, c)
    rest = sorted((c for c in found.values() if c.carrier != h.carrier),
                  key=Coset.sort_key)
    return [found[h.carrier]] + rest


def cosets_equal(x, y):
    """Equality of two cosets of the same H, by the s⁻¹t in H test."""
    if x.subsemigroup != y.subsemigroup:
        raise exceptions.ParameterException(
            '{} and {} are cosets of different subsemigroups'.format(
                x.name, y.name))
    s = x.semigroup
    result = s.product(s.inverse(x.representative),
                       y.representative) in x.subsemigroup
    if result != (x.carrier == y.carrier):
        raise exceptions.ValidationException(
            'coset equality test disagrees with carriers for {} and {}'
            .format(x.name, y.name))
    return result


def coset_space_action(h):
    """The action of S on S/H: a.(sH)↑ = (asH)↑ whenever d(as) is in H.

    The base point is the coset H itself, at index 0.
    """
    semigroup = h.semigroup
    points = cosets_of(h)
    index = dict((c.carrier, i) for i, c in enumerate(points))

    def act(a, i):
        x = semigroup.product(a, points[i].representative)
        if semigroup.d(x) not in h:
            return None
        return index[left_coset(x, h).carrier]

    return actions.TransitiveAction(
        semigroup, [c.name for c in points], act,
        name='S/{}'.format(h.name), base=0, keys=points)


def coset_closure(semigroup, elements):
    """The smallest coset containing the given elements."""
    a = frozenset(elements)
    if not a:
        raise exceptions.ParameterException(
            'cannot close an empty set to a coset')
    while True:
        b = order.up_closure(semigroup, semigroup.set_product(
            semigroup.set_product(a, semigroup.set_inverse(a)), a))
        if b == a:
            return Coset(semigroup, a)
        a = b


def principal_coset(semigroup, s):
    """s↑, the coset of d(s)↑ through s."""
    h = order.filter_up_in_S(order.principal_filter(semigroup,
                                                    semigroup.d(s)))
    return left_coset(s, h)


class CosetSemigroup(entities.Entity):
    """A set of cosets of S closed under ⊗, with the embedding ι.

    Products are computed lazily and memoized; the full table is only
    materialized when the semigroup has at most max_table elements.
    """

    def __init__(self, semigroup, cosets, name='K(S)',
                 max_table=DEFAULT_TABLE_CAP):
        super(CosetSemigroup, self).__init__(name)
        self._semigroup = semigroup
        self._elements = sorted(cosets, key=Coset.sort_key)
        self._index = dict((c.carrier, i) for i, c in
                           enumerate(self._elements))
        self._max_table = max_table
        self._products = {}
        self._closures = {}
        self._iota = [self.find(principal_coset(semigroup, s).carrier)
                      for s in range(semigroup.size)]

    @property
    def semigroup(self):
        return self._semigroup

    @property
    def elements(self):
        return list(self._elements)

    def __len__(self):
        return len(self._elements)

    def __getitem__(self, i):
        return self._elements[i]

    def find(self, carrier):
        """Index of the coset with the given carrier."""
        try:
            return self._index[frozenset(carrier)]
        except KeyError:
            raise exceptions.ValidationException(
                '{} is not an element of {}'.format(
                    order._format_set(self._semigroup, carrier), self.name),
                witness=sorted(carrier))

    def index_of(self, coset):
        return self.find(coset.carrier)

    def iota(self, s):
        """Index of s↑."""
        return self._iota[s]

    @property
    def zero(self):
        """Index of the full carrier S when it is the zero, else None."""
        full = frozenset(range(self._semigroup.size))
        i = self._index.get(full)
        if i is None:
            return None
        if all(self.product(i, j) == i and self.product(j, i) == i
               for j in range(len(self))):
            return i
        return None

    def _generated(self, b, h, k):
        key = (b, h.carrier, k.carrier)
        if key not in self._closures:
            s = self._semigroup
            conj = s.conjugate(s.inverse(b), h.carrier)
            self._closures[key] = order.ClosedInverseSubsemigroup(
                s, order.closure(s, conj | k.carrier), verify=False)
        return self._closures[key]

    def _compute_product(self, x, y):
        s = self._semigroup
        a, b = x.representative, y.representative
        gen = self._generated(b, x.subsemigroup, y.subsemigroup)
        return self.find(left_coset(s.product(a, b), gen).carrier)

    def product(self, i, j):
        key = (i, j)
        if key not in self._products:
            self._products[key] = self._compute_product(
                self._elements[i], self._elements[j])
        return self._products[key]

    def inverse(self, i):
        s = self._semigroup
        return self.find(s.set_inverse(self._elements[i].carrier))

    def d(self, i):
        return self.product(self.inverse(i), i)

    def r(self, i):
        return self.product(i, self.inverse(i))

    def is_idempotent(self, i):
        return self.product(i, i) == i

    def idempotents(self):
        return [i for i in range(len(self)) if self.is_idempotent(i)]

    def leq(self, i, j):
        """Natural order: reverse inclusion of carriers."""
        return self._elements[j].carrier <= self._elements[i].carrier

    def table(self):
        n = len(self)
        if n > self._max_table:
            raise exceptions.CapExceededException(
                'size of {}'.format(self.name), self._max_table)
        return [[self.product(i, j) for j in range(n)] for i in range(n)]

    def as_semigroup(self):
        """The product table as a validated FiniteInverseSemigroup."""
        table = self.table()
        return core.FiniteInverseSemigroup(
            table, inv=[self.inverse(i) for i in range(len(self))],
            labels=[c.name for c in self._elements], name=self.name)

    def check_order(self):
        """Natural order by idempotents agrees with reverse inclusion."""
        n = len(self)
        for i in range(n):
            d = self.d(i)
            for j in range(n):
                by_product = self.product(j, d) == i
                if by_product != self.leq(i, j):
                    raise exceptions.ValidationException(
                        'order of {} disagrees with inclusion'.format(
                            self.name), witness=(i, j))
        return True

    def check_iota(self):
        """ι is an injective homomorphism."""
        s = self._semigroup
        if len(set(self._iota)) != s.size:
            raise exceptions.ValidationException(
                'ι is not injective on {}'.format(s.name))
        for a in range(s.size):
            for b in range(s.size):
                if self.product(self._iota[a], self._iota[b]) != \
                        self._iota[s.product(a, b)]:
                    raise exceptions.ValidationException(
                        'ι is not multiplicative', witness=(a, b))
        return True

    def verify_product_law(self, pairs=None):
        """Compare every product with the intersection oracle."""
        n = len(self)
        if pairs is None:
            pairs = ((i, j) for i in range(n) for j in range(n))
        count = 0
        for i, j in pairs:
            if self.product(i, j) != product_oracle(self, i, j):
                raise exceptions.ValidationException(
                    'product formula disagrees with the intersection '
                    'of containing cosets', witness=(i, j))
            count += 1
        logger.debug('checked %d products of %s', count, self.name)
        return True

    def to_dict(self):
        data = {
            'name': self.name,
            'size': len(self),
            'elements': [c.to_dict() for c in self._elements],
            'iota': self._iota,
            'zero': self.zero,
        }
        if len(self) <= self._max_table:
            data['mul'] = self.table()
            data['inv'] = [self.inverse(i) for i in range(len(self))]
        return data


def product_oracle(ks, i, j):
    """Intersection of all cosets of ks that contain AB."""
    s = ks.semigroup
    ab = s.set_product(ks[i].carrier, ks[j].carrier)
    result = frozenset(range(s.size))
    for c in ks.elements:
        if ab <= c.carrier:
            result &= c.carrier
    return ks.find(result)


def build_KS(semigroup, max_cosets=DEFAULT_COSET_CAP,
             max_table=DEFAULT_TABLE_CAP,
             max_subsemigroups=order.DEFAULT_SUBSEMIGROUP_CAP):
    """The coset semigroup K(S) on all cosets of all closed inverse
    subsemigroups."""
    cosets = []
    for h in order.enumerate_closed_inverse_subsemigroups(
            semigroup, cap=max_subsemigroups):
        cosets.extend(cosets_of(h))
        if len(cosets) > max_cosets:
            raise exceptions.CapExceededException('number of cosets',
                                                  max_cosets)
    logger.debug('K(%s) has %d cosets', semigroup.name, len(cosets))
    return CosetSemigroup(semigroup, cosets,
                          name='K({})'.format(semigroup.name),
                          max_table=max_table)


def kos_meet(cosets):
    """Meet in K(S): the smallest coset containing every given coset."""
    cosets = list(cosets)
    if not cosets:
        raise exceptions.ParameterException('meet of no cosets')
    union = frozenset()
    for c in cosets:
        union |= c.carrier
    return coset_closure(cosets[0].semigroup, union)


def is_directed(semigroup, elements):
    """Every pair of elements has a common lower bound inside the set."""
    a = frozenset(elements)
    if not a:
        raise exceptions.ParameterException(
            'directedness is undefined for the empty set')
    below = dict((x, semigroup.below(x) & a) for x in a)
    return all(below[x] & below[y] for x in a for y in a)


class DirectedCosetSemigroup(CosetSemigroup):
    """L(S): directed cosets, multiplied by A.B = (AB)↑."""

    def _compute_product(self, x, y):
        s = self._semigroup
        return self.find(order.up_closure(
            s, s.set_product(x.carrier, y.carrier)))


def build_LS(semigroup, max_table=DEFAULT_TABLE_CAP):
    """L(S) with a certificate that s -> s↑ is an isomorphism S -> L(S).

    Closed directed inverse subsemigroups are exactly the F↑ for filters F,
    so the directed cosets are found among the cosets of those.

    Returns:
        (DirectedCosetSemigroup, certificate dict of booleans).
    """
    cosets = []
    for f in order.enumerate_filters(semigroup):
        h = order.filter_up_in_S(f)
        cosets.extend(c for c in cosets_of(h)
                      if is_directed(semigroup, c.carrier))
    ls = DirectedCosetSemigroup(semigroup, cosets,
                                name='L({})'.format(semigroup.name),
                                max_table=max_table)
    iota = [ls.iota(s) for s in range(semigroup.size)]
    certificate = {
        'injective': len(set(iota)) == semigroup.size,
        'surjective': set(iota) == set(range(len(ls))),
        'multiplicative': all(
            ls.product(iota[a], iota[b]) == iota[semigroup.product(a, b)]
            for a in range(semigroup.size) for b in range(semigroup.size)),
    }
    if not all(certificate.values()):
        raise exceptions.ValidationException(
            's -> s↑ is not an isomorphism onto {}'.format(ls.name),
            witness=sorted(k for k, v in certificate.items() if not v))
    return ls, certificate


def meet_decomposition(coset):
    """Split a coset into directed closed blocks.

    Blocks are the classes of a ~ b iff some c in A lies below both; they
    share their d- and r-idempotents in L(S) and their meet is A.
    """
    s = coset.semigroup
    a = coset.carrier
    below = dict((x, s.below(x) & a) for x in a)
    parent = dict((x, x) for x in a)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in a:
        for y in a:
            if below[x] & below[y]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    blocks = {}
    for x in a:
        blocks.setdefault(find(x), set()).add(x)

    k = order.up_closure(s, coset.subsemigroup.idempotents)
    rep = coset.representative
    l = order.up_closure(s, s.conjugate(rep, k))
    result = []
    for members in blocks.values():
        if not is_directed(s, members):
            raise exceptions.ValidationException(
                'block is not directed', witness=sorted(members))
        block = Coset(s, members)
        d = order.up_closure(s, s.set_product(s.set_inverse(members),
                                              members))
        r = order.up_closure(s, s.set_product(members,
                                              s.set_inverse(members)))
        if d != k or r != l:
            raise exceptions.ValidationException(
                'blocks of {} are not H-related'.format(coset.name),
                witness=sorted(members))
        result.append(block)
    result.sort(key=Coset.sort_key)
    if kos_meet(result) != coset:
        raise exceptions.ValidationException(
            'blocks of {} do not meet to it'.format(coset.name))
    return result


def is_coinitial(semigroup, a, b):
    """Every element of A lies above some element of B."""
    return all(semigroup.below(x) & frozenset(b) for x in a)


def normalize_directed_subset(semigroup, elements):
    """The directed coset A↑ of a directed subset A."""
    if not is_directed(semigroup, elements):
        raise exceptions.ParameterException(
            '{} is not directed'.format(order._format_set(semigroup,
                                                          elements)))
    return Coset(semigroup, order.up_closure(semigroup, elements))


def schutzenberger_restriction(ks, h):
    """The S-action on the L-class of the idempotent H of K(S), pulled
    back along ι.

    Points are ordered like coset_space_action(H), so the two action
    tables can be compared directly.
    """
    semigroup = ks.semigroup
    e = ks.find(h.carrier)
    if not ks.is_idempotent(e):
        raise exceptions.ParameterException(
            '{} is not an idempotent of {}'.format(h.name, ks.name))
    members = [i for i in range(len(ks)) if ks.d(i) == e]
    points = [ks[i] for i in [e] + sorted(
        (i for i in members if i != e), key=lambda i: ks[i].sort_key())]
    index = dict((ks.index_of(c), n) for n, c in enumerate(points))
    index_key = [ks.index_of(c) for c in points]

    def act(a, n):
        x = ks.product(ks.iota(a), index_key[n])
        return index.get(x) if ks.d(x) == e else None
    return actions.TransitiveAction(
        semigroup, [c.name for c in points], act,
        name='L_{}'.format(h.name), base=0, keys=points)
