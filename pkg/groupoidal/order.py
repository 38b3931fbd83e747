# Copyright (C) 2026 The groupoidal developers.
#
# Upward closures, filters of idempotents and closed inverse subsemigroups.

import logging

from . import core
from . import entities
from . import exceptions

DEFAULT_SUBSEMIGROUP_CAP = 5000

logger = logging.getLogger(__name__)


def _format_set(semigroup, carrier):
    return '{' + ','.join(semigroup.label(x) for x in sorted(carrier)) + '}'


def up_closure(semigroup, elements):
    """The set of all s with a <= s for some a in the given elements."""
    result = set()
    for a in elements:
        result |= semigroup.above(a)
    return frozenset(result)


def is_upward_closed(semigroup, elements):
    return up_closure(semigroup, elements) == frozenset(elements)


def is_filter(semigroup, elements):
    """Whether the elements form a filter in the semilattice E(S)."""
    carrier = frozenset(elements)
    if not carrier:
        return False
    if not all(semigroup.is_idempotent(e) for e in carrier):
        return False
    for e in carrier:
        if any(semigroup.is_idempotent(f) and f not in carrier
               for f in semigroup.above(e)):
            return False
        if any(semigroup.product(e, f) not in carrier for f in carrier):
            return False
    return True


class Filter(entities.Entity):
    """A filter in E(S), stored by its carrier and its minimum idempotent.

    Finite filters are principal; the minimum is computed as the product of
    all members and checked to lie in the filter.
    """

    def __init__(self, semigroup, carrier, verify=True):
        self._semigroup = semigroup
        self._carrier = frozenset(carrier)
        if verify and not is_filter(semigroup, self._carrier):
            raise exceptions.ParameterException(
                '{} is not a filter'.format(
                    _format_set(semigroup, self._carrier)))
        minimum = None
        for e in sorted(self._carrier):
            minimum = e if minimum is None else semigroup.product(minimum, e)
        if minimum not in self._carrier:
            raise exceptions.ValidationException(
                'filter has no minimum', witness=sorted(self._carrier))
        self._minimum = minimum
        super(Filter, self).__init__(
            'filter{}'.format(_format_set(semigroup, self._carrier)))

    @property
    def semigroup(self):
        return self._semigroup

    @property
    def carrier(self):
        return self._carrier

    @property
    def minimum(self):
        return self._minimum

    def __iter__(self):
        return iter(sorted(self._carrier))

    def __len__(self):
        return len(self._carrier)

    def __contains__(self, e):
        return e in self._carrier

    def __eq__(self, other):
        return isinstance(other, Filter) and self._carrier == other._carrier

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._carrier)

    def to_dict(self):
        return {'elements': sorted(self._carrier), 'minimum': self._minimum}


def principal_filter(semigroup, e):
    """The filter e↑ ∩ E(S)."""
    semigroup.require_idempotent(e)
    return Filter(semigroup, [f for f in semigroup.above(e)
                              if semigroup.is_idempotent(f)])


def as_filter(semigroup, elements):
    if isinstance(elements, Filter):
        return elements
    return Filter(semigroup, elements)


def enumerate_filters(semigroup):
    """All filters of E(S), one per idempotent, ordered by minimum."""
    return [principal_filter(semigroup, e) for e in semigroup.idempotents]


def filter_leq(f, g):
    """F <= G iff G ⊆ F."""
    return g.carrier <= f.carrier


class ClosedInverseSubsemigroup(entities.Entity):
    """A non-empty, upward closed inverse subsemigroup of S."""

    def __init__(self, semigroup, carrier, verify=True):
        self._semigroup = semigroup
        self._carrier = frozenset(carrier)
        if verify:
            self.validate()
        self._idempotents = frozenset(
            x for x in self._carrier if semigroup.is_idempotent(x))
        super(ClosedInverseSubsemigroup, self).__init__(
            _format_set(semigroup, self._carrier))

    def validate(self):
        s, carrier = self._semigroup, self._carrier
        if not carrier:
            raise exceptions.ParameterException(
                'closed inverse subsemigroups are non-empty')
        for a in carrier:
            if s.inverse(a) not in carrier:
                raise exceptions.ParameterException(
                    '{} is not closed under inverses'.format(self._label()))
            for b in carrier:
                if s.product(a, b) not in carrier:
                    raise exceptions.ParameterException(
                        '{} is not closed under products'.format(
                            self._label()))
        if not is_upward_closed(s, carrier):
            raise exceptions.ParameterException(
                '{} is not upward closed'.format(self._label()))

    def _label(self):
        return _format_set(self._semigroup, self._carrier)

    @property
    def semigroup(self):
        return self._semigroup

    @property
    def carrier(self):
        return self._carrier

    @property
    def idempotents(self):
        return self._idempotents

    @property
    def filter(self):
        return Filter(self._semigroup, self._idempotents, verify=False)

    @property
    def is_proper(self):
        """True when the subsemigroup does not contain a zero of S."""
        zero = self._semigroup.zero
        return zero is None or zero not in self._carrier

    @property
    def is_wide(self):
        return len(self._idempotents) == len(self._semigroup.idempotents)

    def __iter__(self):
        return iter(sorted(self._carrier))

    def __len__(self):
        return len(self._carrier)

    def __contains__(self, s):
        return s in self._carrier

    def __eq__(self, other):
        return isinstance(other, ClosedInverseSubsemigroup) and \
            self._carrier == other._carrier

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._carrier)

    def __le__(self, other):
        return self._carrier <= other._carrier

    def to_dict(self):
        return {
            'elements': sorted(self._carrier),
            'labels': [self._semigroup.label(x)
                       for x in sorted(self._carrier)],
            'idempotents': sorted(self._idempotents),
            'proper': self.is_proper,
            'wide': self.is_wide,
        }


def generated_inverse_subsemigroup(semigroup, elements, cap=None):
    """The inverse subsemigroup generated by the given elements."""
    gens = set(elements) | semigroup.set_inverse(elements)
    if not gens:
        return frozenset()
    gens = sorted(gens)
    result = set(gens)
    frontier = list(gens)
    rows = semigroup.table
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = rows[x][g]
            if y not in result:
                result.add(y)
                if cap is not None and len(result) > cap:
                    raise exceptions.CapExceededException(
                        'generated subsemigroup', cap)
                frontier.append(y)
    return frozenset(result)


def closure(semigroup, elements):
    """Smallest closed inverse subsemigroup containing the given elements.

    The up-closure of an inverse subsemigroup is again one, so a single
    pass of each operator suffices.
    """
    return up_closure(semigroup,
                      generated_inverse_subsemigroup(semigroup, elements))


def bar_closure(f):
    """The largest closed inverse subsemigroup with idempotents exactly F:
    all s with s⁻¹Fs ⊆ F and sFs⁻¹ ⊆ F."""
    if not isinstance(f, Filter):
        raise exceptions.ParameterException(
            'bar closure needs a Filter, got {!r}'.format(f))
    s = f.semigroup
    carrier = f.carrier
    result = [x for x in range(s.size)
              if s.conjugate(s.inverse(x), carrier) <= carrier and
              s.conjugate(x, carrier) <= carrier]
    h = ClosedInverseSubsemigroup(s, result)
    if h.idempotents != carrier:
        raise exceptions.ValidationException(
            'bar closure changed the idempotents of {}'.format(f.name),
            witness=sorted(h.idempotents ^ carrier))
    return h


def filter_up_in_S(f):
    """The smallest closed inverse subsemigroup with idempotents exactly F."""
    if not isinstance(f, Filter):
        raise exceptions.ParameterException(
            'F↑ needs a Filter, got {!r}'.format(f))
    h = ClosedInverseSubsemigroup(f.semigroup,
                                  up_closure(f.semigroup, f.carrier))
    if h.idempotents != f.carrier:
        raise exceptions.ValidationException(
            'F↑ changed the idempotents of {}'.format(f.name),
            witness=sorted(h.idempotents ^ f.carrier))
    return h


def sandwich(h):
    """The pair (E(H)↑, closure bar of E(H)) bounding H, checked."""
    f = h.filter
    lower, upper = filter_up_in_S(f), bar_closure(f)
    if not lower.carrier <= h.carrier <= upper.carrier:
        raise exceptions.ValidationException(
            '{} is not between {} and {}'.format(h.name, lower.name,
                                                 upper.name))
    return lower, upper


def enumerate_closed_inverse_subsemigroups(semigroup,
                                           cap=DEFAULT_SUBSEMIGROUP_CAP):
    """All closed inverse subsemigroups of S, sorted by size then elements.

    Every closed inverse subsemigroup is the closure of a union of
    single-element closures, so a breadth-first walk that adds one element
    at a time reaches all of them.
    """
    found = set()
    frontier = []
    for s in range(semigroup.size):
        h = closure(semigroup, [s])
        if h not in found:
            found.add(h)
            if len(found) > cap:
                raise exceptions.CapExceededException(
                    'number of closed inverse subsemigroups', cap)
            frontier.append(h)
    while frontier:
        h = frontier.pop()
        for s in range(semigroup.size):
            if s in h:
                continue
            k = closure(semigroup, h | frozenset([s]))
            if k not in found:
                found.add(k)
                if len(found) > cap:
                    raise exceptions.CapExceededException(
                        'number of closed inverse subsemigroups', cap)
                frontier.append(k)
    logger.debug('%s has %d closed inverse subsemigroups',
                 semigroup.name, len(found))
    return [ClosedInverseSubsemigroup(semigroup, h, verify=False)
            for h in sorted(found, key=lambda h: (len(h), sorted(h)))]


def is_conjugate(h, k):
    """A witness s with (sHs⁻¹)↑ = K and (s⁻¹Ks)↑ = H, or None."""
    s = h.semigroup
    for x in range(s.size):
        if up_closure(s, s.conjugate(x, h.carrier)) == k.carrier and \
                up_closure(s, s.conjugate(s.inverse(x), k.carrier)) == \
                h.carrier:
            return x
    return None


def conjugacy_classes(subsemigroups):
    """Partition a list of closed inverse subsemigroups up to conjugacy."""
    classes = []
    for h in subsemigroups:
        for cls in classes:
            if is_conjugate(cls[0], h) is not None:
                cls.append(h)
                break
        else:
            classes.append([h])
    return classes


def wide_subsemigroups_vs_subgroups(semigroup):
    """Pair every subgroup of S/σ with its preimage in S.

    Returns:
        A list of (ClosedInverseSubsemigroup, frozenset of σ-classes)
        sorted by subgroup, with the preimages verified wide.
    """
    group, projection = core.sigma_quotient(semigroup)
    pairs = []
    for k in group.subgroups():
        carrier = [s for s in range(semigroup.size) if projection[s] in k]
        t = ClosedInverseSubsemigroup(semigroup, carrier)
        if not t.is_wide:
            raise exceptions.ValidationException(
                'preimage {} is not wide'.format(t.name))
        pairs.append((t, k))
    return pairs


def intersection_closure_check(subsemigroups):
    """Check that members sharing an idempotent set are closed under
    intersection within the list."""
    by_filter = {}
    for h in subsemigroups:
        by_filter.setdefault(h.idempotents, set()).add(h.carrier)
    for f, members in by_filter.items():
        for a in members:
            for b in members:
                if a & b not in members:
                    raise exceptions.ValidationException(
                        'intersection over filter {} is missing'.format(
                            sorted(f)), witness=sorted(a & b))
    return True
