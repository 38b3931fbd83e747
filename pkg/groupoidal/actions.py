# Copyright (C) 2026 The groupoidal developers.
#
# Transitive actions of inverse semigroups, their morphisms, universal and
# fundamental actions, strong congruences and action graphs.

import itertools
import logging

from . import core
from . import cosets
from . import entities
from . import exceptions
from . import order

SEARCH_POINT_CAP = 6

logger = logging.getLogger(__name__)


def _moves_from(semigroup, npoints, act):
    if callable(act):
        return [[act(s, i) for i in range(npoints)]
                for s in range(semigroup.size)]
    moves = [list(row) for row in act]
    if len(moves) != semigroup.size or \
            any(len(row) != npoints for row in moves):
        raise exceptions.ParameterException(
            'action table must have one row per element and one column '
            'per point')
    return moves


def check_action_axioms(semigroup, moves):
    """Check that idempotents fix the points they act on, and that
    (st).x is defined exactly when s.(t.x) is, with equal results."""
    npoints = len(moves[0]) if moves else 0
    for e in semigroup.idempotents:
        for x in range(npoints):
            y = moves[e][x]
            if y is not None and y != x:
                raise exceptions.ActionAxiomException(
                    'idempotent {} moves point {}'.format(
                        semigroup.label(e), x), witness=(e, e, x))
    for s in range(semigroup.size):
        row = moves[s]
        for t in range(semigroup.size):
            st = moves[semigroup.product(s, t)]
            for x in range(npoints):
                tx = moves[t][x]
                nested = row[tx] if tx is not None else None
                if st[x] != nested:
                    raise exceptions.ActionAxiomException(
                        '({}{}).{} differs from {}.({}.{})'.format(
                            semigroup.label(s), semigroup.label(t), x,
                            semigroup.label(s), semigroup.label(t), x),
                        witness=(s, t, x))
    return True


def orbit(moves, x):
    """Points reachable from x."""
    seen = {x}
    frontier = [x]
    while frontier:
        y = frontier.pop()
        for row in moves:
            z = row[y]
            if z is not None and z not in seen:
                seen.add(z)
                frontier.append(z)
    return seen


class TransitiveAction(entities.Entity):
    """An effective, transitive partial action of S on a finite point set.

    Args:
        semigroup: the acting FiniteInverseSemigroup.
        points: labels of the points.
        act: either a callable (s, i) -> j or None, or a table
            moves[s][i] of the same values.
        base: the chosen base point.
        keys: optional objects the points stand for (cosets, elements).
    """

    def __init__(self, semigroup, points, act, name='X', base=0, keys=None,
                 verify=True):
        super(TransitiveAction, self).__init__(name)
        self._semigroup = semigroup
        self._points = [str(p) for p in points]
        if not self._points:
            raise exceptions.ParameterException(
                'actions need at least one point')
        self._moves = _moves_from(semigroup, len(self._points), act)
        self._base = base
        self._keys = list(keys) if keys is not None else None
        if verify:
            self.validate()

    def validate(self):
        n = len(self._points)
        for row in self._moves:
            for y in row:
                if y is not None and not 0 <= y < n:
                    raise exceptions.ActionAxiomException(
                        '{} maps outside its points'.format(self.name))
        check_action_axioms(self._semigroup, self._moves)
        for x in range(n):
            if all(row[x] is None for row in self._moves):
                raise exceptions.ActionAxiomException(
                    '{} is not effective at point {}'.format(self.name, x),
                    witness=(None, None, x))
        reached = orbit(self._moves, self._base)
        if len(reached) != n:
            missing = min(set(range(n)) - reached)
            raise exceptions.ActionAxiomException(
                '{} is not transitive'.format(self.name),
                witness=(None, None, missing))

    @property
    def semigroup(self):
        return self._semigroup

    @property
    def points(self):
        return list(self._points)

    @property
    def moves(self):
        return self._moves

    @property
    def base(self):
        return self._base

    @property
    def keys(self):
        return self._keys

    def __len__(self):
        return len(self._points)

    def act(self, s, x):
        """s.x, or None when undefined."""
        return self._moves[s][x]

    def defined_at(self, x):
        """All s for which s.x exists."""
        return frozenset(s for s in range(self._semigroup.size)
                         if self._moves[s][x] is not None)

    def with_base(self, x):
        return TransitiveAction(self._semigroup, self._points, self._moves,
                                name=self.name, base=x, keys=self._keys,
                                verify=False)

    def to_dict(self):
        s = self._semigroup
        return {
            'name': self.name,
            'points': self._points,
            'base': self._base,
            'moves': [{'s': s.label(a), 'from': x, 'to': y}
                      for a, row in enumerate(self._moves)
                      for x, y in enumerate(row) if y is not None],
        }


def orbits(semigroup, points, act):
    """Split a partial action into its transitive pieces.

    Points where nothing acts are dropped.
    """
    points = list(points)
    moves = _moves_from(semigroup, len(points), act)
    check_action_axioms(semigroup, moves)
    remaining = set(x for x in range(len(points))
                    if any(row[x] is not None for row in moves))
    result = []
    while remaining:
        x = min(remaining)
        members = sorted(orbit(moves, x))
        remaining -= set(members)
        index = dict((y, i) for i, y in enumerate(members))
        sub = [[index[row[y]] if row[y] is not None else None
                for y in members] for row in moves]
        result.append(TransitiveAction(
            semigroup, [points[y] for y in members], sub,
            name='orbit{}'.format(len(result)), base=0, keys=members))
    return result


def stabilizer(action, x):
    """S_x, the elements fixing x."""
    return order.ClosedInverseSubsemigroup(
        action.semigroup,
        [s for s in range(action.semigroup.size) if action.act(s, x) == x])


class Morphism(object):
    """A map between the points of two actions on the same semigroup.

    Construction checks the morphism law: s.x defined implies s.f(x)
    defined and f(s.x) = s.f(x).
    """

    def __init__(self, source, target, mapping, verify=True):
        if source.semigroup is not target.semigroup:
            raise exceptions.ParameterException(
                'morphisms need actions of the same semigroup')
        self.source = source
        self.target = target
        self.mapping = list(mapping)
        if verify:
            self.validate()

    def validate(self):
        semigroup = self.source.semigroup
        for s in range(semigroup.size):
            for x in range(len(self.source)):
                sx = self.source.act(s, x)
                if sx is None:
                    continue
                if self.target.act(s, self.mapping[x]) != self.mapping[sx]:
                    raise exceptions.ActionAxiomException(
                        'map is not a morphism at {}.{}'.format(
                            semigroup.label(s), x), witness=(s, None, x))

    def __call__(self, x):
        return self.mapping[x]

    @property
    def is_strong(self):
        """s.x exists iff s.f(x) exists, for every s and x."""
        return all(
            self.source.defined_at(x) ==
            self.target.defined_at(self.mapping[x])
            for x in range(len(self.source)))

    @property
    def is_injective(self):
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def is_surjective(self):
        return set(self.mapping) == set(range(len(self.target)))

    @property
    def is_bijective(self):
        return self.is_injective and self.is_surjective

    @property
    def is_equivalence(self):
        return self.is_bijective and self.is_strong

    @staticmethod
    def find_by_search(source, target, x=None, y=None, strong=False):
        """Exhaustive search for a (strong) morphism, optionally with
        x -> y; the first one in lexicographic order of the point map."""
        if len(source) > SEARCH_POINT_CAP or len(target) > SEARCH_POINT_CAP:
            raise exceptions.CapExceededException(
                'points in a morphism search', SEARCH_POINT_CAP)
        for mapping in itertools.product(range(len(target)),
                                         repeat=len(source)):
            if x is not None and mapping[x] != y:
                continue
            try:
                m = Morphism(source, target, mapping)
            except exceptions.ActionAxiomException:
                continue
            if not strong or m.is_strong:
                return m
        return None

    def to_dict(self):
        return {
            'source': self.source.name,
            'target': self.target.name,
            'mapping': self.mapping,
            'strong': self.is_strong,
        }


def compose(alpha, beta):
    """beta after alpha."""
    if alpha.target is not beta.source:
        raise exceptions.ParameterException(
            'cannot compose {} -> {} with {} -> {}'.format(
                alpha.source.name, alpha.target.name, beta.source.name,
                beta.target.name))
    return Morphism(alpha.source, beta.target,
                    [beta(alpha(x)) for x in range(len(alpha.source))])


def _extend_from_base(source, x, target, y):
    """The map a.x -> a.y, or None when it is not well defined."""
    mapping = [None] * len(source)
    for a in range(source.semigroup.size):
        ax = source.act(a, x)
        if ax is None:
            continue
        ay = target.act(a, y)
        if ay is None or (mapping[ax] is not None and mapping[ax] != ay):
            return None
        mapping[ax] = ay
    return mapping


def build_morphism(source, x, target, y):
    """The morphism with x -> y, which exists iff S_x ⊆ S_y."""
    sx, sy = stabilizer(source, x), stabilizer(target, y)
    if not sx.carrier <= sy.carrier:
        return None
    mapping = _extend_from_base(source, x, target, y)
    if mapping is None:
        raise exceptions.ValidationException(
            'stabilizers are nested but a.x -> a.y is not a map',
            witness=(x, y))
    return Morphism(source, target, mapping)


def build_strong_morphism(source, x, target, y):
    """The strong morphism with x -> y, which exists iff S_x ⊆ S_y and
    E(S_x) = E(S_y)."""
    sx, sy = stabilizer(source, x), stabilizer(target, y)
    if not sx.carrier <= sy.carrier or sx.idempotents != sy.idempotents:
        return None
    m = build_morphism(source, x, target, y)
    if not m.is_strong or not m.is_surjective:
        raise exceptions.ValidationException(
            'morphism {} -> {} is not strong and onto'.format(
                source.name, target.name), witness=(x, y))
    return m


def equivalent_to_coset_action(action, x):
    """The equivalence X -> S/S_x sending x to the coset S_x."""
    h = stabilizer(action, x)
    target = cosets.coset_space_action(h)
    m = build_strong_morphism(action, x, target, target.base)
    if m is None or not m.is_bijective:
        raise exceptions.ValidationException(
            '{} is not equivalent to {}'.format(action.name, target.name),
            witness=(x,))
    inverse = build_strong_morphism(target, target.base, action, x)
    if inverse is None or compose(m, inverse).mapping != \
            list(range(len(action))):
        raise exceptions.ValidationException(
            'no inverse equivalence {} -> {}'.format(target.name,
                                                     action.name))
    return m


def actions_equivalent(source, target):
    """A conjugating witness s for the stabilizers, or None."""
    return order.is_conjugate(stabilizer(source, source.base),
                              stabilizer(target, target.base))


def find_equivalence_by_search(source, target):
    if len(source) != len(target):
        return None
    for y in range(len(target)):
        m = Morphism.find_by_search(source, target, x=source.base, y=y,
                                    strong=True)
        if m is not None and m.is_bijective:
            return m
    return None


def _classify(action, bound):
    results = set()
    for x in range(len(action)):
        h = stabilizer(action, x)
        results.add(h == bound(h.filter))
    if len(results) != 1:
        raise exceptions.ValidationException(
            'classification of {} depends on the point'.format(action.name))
    return results.pop()


def is_universal(action):
    """Every stabilizer is the up-closure of its idempotents."""
    return _classify(action, order.filter_up_in_S)


def is_fundamental(action):
    """Every stabilizer is the bar closure of its idempotents."""
    return _classify(action, order.bar_closure)


def universal_cover(target, y):
    """(X, strong morphism X -> Y) with X = S/E(S_y)↑."""
    f = stabilizer(target, y).filter
    cover = cosets.coset_space_action(order.filter_up_in_S(f))
    m = build_strong_morphism(cover, cover.base, target, y)
    if m is None:
        raise exceptions.ValidationException(
            'no strong morphism from {} to {}'.format(cover.name,
                                                      target.name))
    return cover, m


def fundamental_quotient(source, x):
    """(strong morphism Y -> Z, Z) with Z = S over the bar closure of
    E(S_x)."""
    f = stabilizer(source, x).filter
    quotient = cosets.coset_space_action(order.bar_closure(f))
    m = build_strong_morphism(source, x, quotient, quotient.base)
    if m is None:
        raise exceptions.ValidationException(
            'no strong morphism from {} to {}'.format(source.name,
                                                      quotient.name))
    return m, quotient


def _canonical(partition):
    return sorted(sorted(block) for block in partition)


def kernel(morphism):
    """The partition of the source points by their image."""
    blocks = {}
    for x, y in enumerate(morphism.mapping):
        blocks.setdefault(y, []).append(x)
    return _canonical(blocks.values())


def is_congruence(action, partition):
    block_of = _block_index(action, partition)
    for s in range(action.semigroup.size):
        images = {}
        for x in range(len(action)):
            sx = action.act(s, x)
            if sx is None:
                continue
            b = block_of[x]
            if b in images and block_of[images[b]] != block_of[sx]:
                return False
            images.setdefault(b, sx)
    return True


def is_strong_congruence(action, partition):
    """A congruence whose related points have the same defined elements."""
    _block_index(action, partition)
    for block in partition:
        defined = set(action.defined_at(x) for x in block)
        if len(defined) > 1:
            return False
    return is_congruence(action, partition)


def _block_index(action, partition):
    block_of = {}
    for i, block in enumerate(partition):
        for x in block:
            block_of[x] = i
    if sorted(block_of) != list(range(len(action))):
        raise exceptions.ParameterException(
            'not a partition of the points of {}'.format(action.name))
    return block_of


def quotient_action(action, partition):
    """The action on the classes of a strong congruence.

    Returns:
        (quotient TransitiveAction, natural strong Morphism onto it).
    """
    partition = _canonical(partition)
    if not is_strong_congruence(action, partition):
        raise exceptions.ParameterException(
            'not a strong congruence on {}'.format(action.name))
    block_of = _block_index(action, partition)
    moves = [[None] * len(partition) for _ in range(action.semigroup.size)]
    for s in range(action.semigroup.size):
        for x in range(len(action)):
            sx = action.act(s, x)
            if sx is not None:
                moves[s][block_of[x]] = block_of[sx]
    labels = ['{' + ','.join(action.points[x] for x in block) + '}'
              for block in partition]
    quotient = TransitiveAction(
        action.semigroup, labels, moves,
        name='{}/~'.format(action.name), base=block_of[action.base],
        keys=partition)
    return quotient, Morphism(action, quotient,
                              [block_of[x] for x in range(len(action))])


def factor_through_quotient(morphism):
    """Split a strong morphism into the natural map onto X/ker followed by
    an injective strong morphism.

    Returns:
        (nu, beta) with beta after nu equal to the morphism.
    """
    if not morphism.is_strong:
        raise exceptions.ParameterException(
            'only strong morphisms factor through their kernel')
    quotient, nu = quotient_action(morphism.source, kernel(morphism))
    beta = Morphism(quotient, morphism.target,
                    [morphism(block[0]) for block in quotient.keys])
    if not beta.is_injective or not beta.is_strong or \
            compose(nu, beta).mapping != morphism.mapping:
        raise exceptions.ValidationException(
            'kernel factorization failed for {} -> {}'.format(
                morphism.source.name, morphism.target.name))
    return nu, beta


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + \
                partition[i + 1:]
        yield [[first]] + partition


def strong_congruence_oracle(action):
    """All strong congruences on a small action, by brute force."""
    if len(action) > SEARCH_POINT_CAP:
        raise exceptions.CapExceededException(
            'points in a congruence search', SEARCH_POINT_CAP)
    return sorted(_canonical(p)
                  for p in _set_partitions(list(range(len(action))))
                  if is_strong_congruence(action, p))


class StrongCongruence(object):
    """A strong congruence with the subsemigroup and subgroup it matches."""

    def __init__(self, partition, subsemigroup, subgroup):
        self.partition = partition
        self.subsemigroup = subsemigroup
        self.subgroup = subgroup

    def to_dict(self):
        return {
            'partition': self.partition,
            'subsemigroup': sorted(self.subsemigroup.carrier),
            'subgroup': sorted(self.subgroup),
        }


def _layer(lower, upper):
    """Closed inverse subsemigroups H with lower ⊆ H ⊆ upper."""
    semigroup = lower.semigroup
    found = {lower.carrier}
    frontier = [lower.carrier]
    while frontier:
        h = frontier.pop()
        for s in upper.carrier - h:
            k = order.closure(semigroup, h | frozenset([s]))
            if k not in found:
                found.add(k)
                frontier.append(k)
    return [order.ClosedInverseSubsemigroup(semigroup, h)
            for h in sorted(found, key=lambda h: (len(h), sorted(h)))]


def strong_congruences(action, x):
    """Strong congruences on a universal action, each paired with a
    subgroup of the local group at its filter.

    Returns:
        A list of StrongCongruence ordered by subsemigroup size, finest
        first; the pairing is checked to be an order-preserving bijection
        onto the subgroups.
    """
    semigroup = action.semigroup
    f = stabilizer(action, x).filter
    lower = order.filter_up_in_S(f)
    if stabilizer(action, x) != lower:
        raise exceptions.ParameterException(
            '{} is not universal at point {}'.format(action.name, x))
    upper = order.bar_closure(f)
    group, projection = core.sigma_quotient(semigroup, upper.carrier)
    result = []
    for h in _layer(lower, upper):
        target = cosets.coset_space_action(h)
        m = build_strong_morphism(action, x, target, target.base)
        subgroup = frozenset(projection[s] for s in h.carrier)
        result.append(StrongCongruence(kernel(m), h, subgroup))

    subgroups = group.subgroups()
    if set(c.subgroup for c in result) != set(subgroups) or \
            len(result) != len(subgroups):
        raise exceptions.ValidationException(
            'strong congruences of {} do not match the subgroups of {}'
            .format(action.name, group.name))
    for a in result:
        for b in result:
            refines = all(any(set(p) <= set(q) for q in b.partition)
                          for p in a.partition)
            if refines != (a.subgroup <= b.subgroup):
                raise exceptions.ValidationException(
                    'congruence pairing is not order preserving')
    return result


class ActionGraph(object):
    """The labelled graph of an action: edges x -(s)-> s.x."""

    def __init__(self, action):
        self.action = action
        self.vertices = list(range(len(action)))
        self.edges = [(x, s, y)
                      for s, row in enumerate(action.moves)
                      for x, y in enumerate(row) if y is not None]
        self.edges.sort()
        self._edge_set = set(self.edges)

    def has_edge(self, x, s, y):
        return (x, s, y) in self._edge_set

    def involution(self, edge):
        x, s, y = edge
        return (y, self.action.semigroup.inverse(s), x)

    def star(self, x):
        return [e for e in self.edges if e[0] == x]

    def check_involution(self):
        return all(self.has_edge(*self.involution(e)) for e in self.edges)


def action_graph(action):
    graph = ActionGraph(action)
    if not graph.check_involution():
        raise exceptions.ValidationException(
            'edges of {} are not closed under the involution'.format(
                action.name))
    return graph


def _star_maps(morphism):
    source = action_graph(morphism.source)
    target = action_graph(morphism.target)
    maps = []
    for x in source.vertices:
        fx = morphism(x)
        images = []
        for (_, s, y) in source.star(x):
            edge = (fx, s, morphism(y))
            if not target.has_edge(*edge):
                raise exceptions.ParameterException(
                    'vertex map is not label preserving at {}'.format(
                        (x, s, y)))
            images.append(edge)
        maps.append((images, target.star(fx)))
    return maps


def check_immersion(morphism):
    """Every star maps injectively."""
    return all(len(set(images)) == len(images)
               for images, _ in _star_maps(morphism))


def check_cover(morphism):
    """Every star maps bijectively."""
    return all(len(set(images)) == len(images) and
               set(images) == set(star)
               for images, star in _star_maps(morphism))
