#!/usr/bin/env python

# Copyright (C) 2026 The groupoidal developers.
#
# Unit tests for groupoidal, the finite inverse semigroup toolkit.

import contextlib
import fractions
import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

import six

from groupoidal import __main__ as cli
from groupoidal import actions, audit, cache, conductor, core, cosets, dot, \
    entities, exceptions, fields, groupoid, linalg, loader, meataxe, order, \
    providers, reps, termoutput

# Element indices of I_2 (images of 1 and 2, 0 for undefined).
ZERO, A21, E2, E1, E12, A12, T = range(7)

Q = fields.RATIONALS


def _i2():
    return core.inverse_symmetric(2)


def _fixture(name):
    return os.path.join(os.path.dirname(__file__),
                        'yaml/{}.yaml'.format(name))


class PartialPermTest(unittest.TestCase):

    def test_compose_is_left_action(self):
        f = core.PartialPerm([2, 0])
        g = core.PartialPerm([0, 1])
        self.assertEqual(core.pp_format(f * g), '[0,2]')
        self.assertEqual(core.pp_format(g * f), '[1,0]')

    def test_inverse(self):
        f = core.PartialPerm([2, 0])
        self.assertEqual(core.pp_inverse(f), core.PartialPerm([0, 1]))
        self.assertTrue((f * f.inverse()).is_idempotent())

    def test_rank_and_domain(self):
        f = core.PartialPerm([0, 3, 1])
        self.assertEqual(core.pp_rank(f), 2)
        self.assertEqual(f.domain, frozenset([2, 3]))
        self.assertEqual(f(2), 3)
        self.assertEqual(f(1), None)

    def test_not_injective(self):
        self.assertRaises(exceptions.ParameterException,
                          lambda: core.PartialPerm([1, 1]))

    def test_image_out_of_range(self):
        self.assertRaises(exceptions.ParameterException,
                          lambda: core.PartialPerm([3, 0]))

    def test_parse(self):
        self.assertEqual(core.pp_parse('[2,0]'), core.PartialPerm([2, 0]))
        self.assertEqual(core.pp_parse([2, 0]), core.PartialPerm([2, 0]))
        six.assertRaisesRegex(self, exceptions.ParameterException,
                              'Invalid partial permutation',
                              lambda: core.pp_parse('2,0'))

    def test_degree_mismatch(self):
        self.assertRaises(
            exceptions.ParameterException,
            lambda: core.PartialPerm([1]) * core.PartialPerm([1, 2]))


class SemigroupTest(unittest.TestCase):

    def test_inverse_symmetric_sizes(self):
        for n, size, idempotents in ((1, 2, 2), (2, 7, 4), (3, 34, 8),
                                     (4, 209, 16)):
            s = core.inverse_symmetric(n)
            self.assertEqual(s.size, size)
            self.assertEqual(len(s.idempotents), idempotents)

    def test_inverse_symmetric_range(self):
        self.assertRaises(exceptions.ParameterException,
                          lambda: core.inverse_symmetric(5))

    def test_element_order(self):
        self.assertEqual(_i2().labels, ['[0,0]', '[0,1]', '[0,2]', '[1,0]',
                                        '[1,2]', '[2,0]', '[2,1]'])

    def test_zero_and_idempotents(self):
        s = _i2()
        self.assertEqual(s.zero, ZERO)
        self.assertEqual(s.idempotents, [ZERO, E2, E1, E12])
        self.assertFalse(s.is_group())

    def test_inverse_domain_range(self):
        s = _i2()
        self.assertEqual(s.inverse(A21), A12)
        self.assertEqual(s.d(A21), E2)
        self.assertEqual(s.r(A21), E1)
        self.assertEqual(s.product(T, T), E12)

    def test_natural_order(self):
        s = _i2()
        self.assertEqual(s.below(T), frozenset([ZERO, A21, A12, T]))
        self.assertEqual(s.below(E12), frozenset([ZERO, E2, E1, E12]))
        self.assertTrue(s.natural_leq(E1, E12))
        self.assertFalse(s.natural_leq(E12, T))

    def test_index_of_label(self):
        s = _i2()
        self.assertEqual(s.index('[2,1]'), T)
        self.assertEqual(s.index(core.PartialPerm([1, 0])), E1)
        self.assertRaises(exceptions.ParameterException,
                          lambda: s.index('[3,3]'))

    def test_non_associative_table(self):
        with self.assertRaises(exceptions.NonAssociativeException) as cm:
            core.semigroup_from_table([[1, 0], [0, 0]])
        self.assertEqual(cm.exception.witness, (0, 0, 1))
        self.assertEqual(cm.exception.exit_code, 2)

    def test_non_commuting_idempotents(self):
        with self.assertRaises(
                exceptions.NonCommutingIdempotentsException) as cm:
            core.semigroup_from_table([[0, 0], [1, 1]])
        self.assertEqual(cm.exception.witness, (0, 1))

    def test_missing_inverse(self):
        with self.assertRaises(exceptions.InverseException) as cm:
            core.semigroup_from_table([[0, 0], [0, 0]])
        self.assertEqual(cm.exception.witness, 1)

    def test_table_out_of_range(self):
        self.assertRaises(exceptions.ValidationException,
                          lambda: core.semigroup_from_table([[0, 2], [1, 1]]))

    def test_generators_generate(self):
        s = core.inverse_symmetric(3)
        self.assertEqual(len(s.generator_words()), s.size)

    def test_canonical_json_is_stable(self):
        self.assertEqual(_i2().canonical_json(), _i2().canonical_json())
        self.assertNotEqual(_i2().canonical_json(),
                            core.chain(7).canonical_json())

    def test_ideal(self):
        s = _i2()
        self.assertEqual(s.ideal(E2), frozenset([ZERO, A21, E2, E1, A12]))
        self.assertTrue(s.j_leq(ZERO, E12))
        self.assertFalse(s.j_leq(E12, ZERO))


class GreenTest(unittest.TestCase):

    def setUp(self):
        self.s = _i2()
        self.green = self.s.green_data()

    def test_relations(self):
        self.assertEqual(self.green.L, [[0], [1, 2], [3, 5], [4, 6]])
        self.assertEqual(self.green.R, [[0], [1, 3], [2, 5], [4, 6]])
        self.assertEqual(self.green.H, [[0], [1], [2], [3], [4, 6], [5]])
        self.assertEqual(self.green.D, [[0], [1, 2, 3, 5], [4, 6]])
        self.assertEqual(self.green.J, self.green.D)

    def test_check(self):
        self.assertTrue(self.green.check())
        self.assertTrue(core.inverse_symmetric(3).green_data().check())

    def test_representatives(self):
        self.assertEqual(self.green.representatives(), [ZERO, E2, E12])

    def test_d_class_sizes(self):
        self.assertEqual(self.green.d_class_sizes(),
                         [(ZERO, 1, 1), (E2, 2, 1), (E12, 1, 2)])

    def test_related(self):
        self.assertTrue(self.green.related('D', E1, E2))
        self.assertFalse(self.green.related('L', E1, E2))
        self.assertEqual(self.green.d_class_idempotents(A21), [E2, E1])

    def test_maximal_subgroup(self):
        g = core.maximal_subgroup(self.s, E12)
        self.assertEqual(g.size, 2)
        self.assertEqual(g.embedding, [E12, T])
        self.assertEqual(core.maximal_subgroup(self.s, E2).size, 1)
        self.assertRaises(exceptions.ParameterException,
                          lambda: core.maximal_subgroup(self.s, T))

    def test_sigma(self):
        group, projection = core.sigma_quotient(self.s)
        self.assertEqual(group.size, 1)
        self.assertEqual(set(projection.values()), set([0]))
        cyclic = core.group_semigroup(core.cyclic_group(3))
        self.assertEqual(core.sigma_quotient(cyclic)[0].size, 3)

    def test_sigma_of_subsemigroup(self):
        group, _ = core.sigma_quotient(self.s, [E12, T])
        self.assertEqual(group.size, 2)

    def test_schutzenberger_action(self):
        action = core.schutzenberger_action(self.s, E2)
        self.assertEqual(action.points, ['[0,1]', '[0,2]'])
        self.assertEqual(action.base, 1)
        self.assertEqual(action.act(A12, 0), 1)
        self.assertEqual(action.act(E2, 0), None)

    def test_fully_closed(self):
        self.assertTrue(core.is_fully_closed(self.s, [E12, T]))
        self.assertFalse(core.is_fully_closed(self.s, [E12]))


class BuiltinFamiliesTest(unittest.TestCase):

    def test_chain(self):
        s = core.chain(3)
        self.assertEqual(s.zero, 0)
        self.assertEqual(s.idempotents, [0, 1, 2])

    def test_brandt(self):
        self.assertEqual(core.brandt(core.parse_group('C1'), 2).size, 5)
        b = core.brandt(core.parse_group('C2'), 2)
        self.assertEqual(b.size, 9)
        self.assertEqual(b.zero, 0)

    def test_adjoin_identity(self):
        s = core.adjoin_identity(core.group_semigroup(core.cyclic_group(2)))
        self.assertEqual(s.size, 3)
        self.assertEqual([s.product(0, x) for x in range(3)], [0, 1, 2])

    def test_groups(self):
        s3 = core.parse_group('S3')
        self.assertEqual(s3.size, 6)
        self.assertFalse(s3.is_abelian())
        self.assertEqual(core.parse_group('c4').exponent(), 4)
        self.assertRaises(exceptions.ParameterException,
                          lambda: core.parse_group('D4'))

    def test_subgroups(self):
        self.assertEqual(len(core.parse_group('S3').subgroups()), 6)
        self.assertEqual(len(core.cyclic_group(4).subgroups()), 3)

    def test_groups_isomorphic(self):
        self.assertIsNotNone(core.groups_isomorphic(
            core.maximal_subgroup(_i2(), E12), core.cyclic_group(2)))
        self.assertIsNone(core.groups_isomorphic(core.cyclic_group(4),
                                                 core.cyclic_group(3)))


class OrderTest(unittest.TestCase):

    def setUp(self):
        self.s = _i2()

    def test_filters(self):
        self.assertEqual([f.carrier for f in order.enumerate_filters(self.s)],
                         [frozenset([ZERO, E2, E1, E12]),
                          frozenset([E2, E12]), frozenset([E1, E12]),
                          frozenset([E12])])
        self.assertEqual(order.principal_filter(self.s, E1).minimum, E1)

    def test_not_a_filter(self):
        self.assertRaises(exceptions.ParameterException,
                          lambda: order.Filter(self.s, [E2, E1]))
        self.assertFalse(order.is_filter(self.s, []))
        self.assertFalse(order.is_filter(self.s, [E12, T]))

    def test_filter_leq(self):
        top = order.principal_filter(self.s, E12)
        low = order.principal_filter(self.s, E2)
        self.assertTrue(order.filter_leq(low, top))
        self.assertFalse(order.filter_leq(top, low))

    def test_closed_inverse_subsemigroups(self):
        found = order.enumerate_closed_inverse_subsemigroups(self.s)
        self.assertEqual([h.carrier for h in found],
                         [frozenset([E12]), frozenset([E2, E12]),
                          frozenset([E1, E12]), frozenset([E12, T]),
                          frozenset(range(7))])
        self.assertEqual([h.is_proper for h in found],
                         [True, True, True, True, False])
        self.assertTrue(order.intersection_closure_check(found))

    def test_subsemigroup_cap(self):
        self.assertRaises(
            exceptions.CapExceededException,
            lambda: order.enumerate_closed_inverse_subsemigroups(self.s,
                                                                 cap=2))

    def test_not_closed(self):
        six.assertRaisesRegex(self, exceptions.ParameterException,
                              'not upward closed',
                              lambda: order.ClosedInverseSubsemigroup(
                                  self.s, [E2]))

    def test_closure(self):
        self.assertEqual(order.closure(self.s, [A21]), frozenset(range(7)))
        self.assertEqual(order.closure(self.s, [T]), frozenset([E12, T]))

    def test_sandwich(self):
        f = order.principal_filter(self.s, E12)
        self.assertEqual(order.filter_up_in_S(f).carrier, frozenset([E12]))
        self.assertEqual(order.bar_closure(f).carrier, frozenset([E12, T]))
        h = order.ClosedInverseSubsemigroup(self.s, [E12, T])
        lower, upper = order.sandwich(h)
        self.assertTrue(lower <= h <= upper)

    def test_conjugacy(self):
        found = order.enumerate_closed_inverse_subsemigroups(self.s)
        self.assertIsNotNone(order.is_conjugate(found[1], found[2]))
        self.assertIsNone(order.is_conjugate(found[0], found[3]))
        classes = order.conjugacy_classes(found)
        self.assertEqual([len(c) for c in classes], [1, 2, 1, 1])

    def test_wide_subsemigroups(self):
        pairs = order.wide_subsemigroups_vs_subgroups(self.s)
        self.assertEqual(len(pairs), 1)
        self.assertEqual(pairs[0][0].carrier, frozenset(range(7)))

        cyclic = core.group_semigroup(core.cyclic_group(4))
        self.assertEqual(
            len(order.wide_subsemigroups_vs_subgroups(cyclic)), 3)


class CosetsTest(unittest.TestCase):

    def setUp(self):
        self.s = _i2()

    def _h(self, *carrier):
        return order.ClosedInverseSubsemigroup(self.s, carrier)

    def test_cosets_of(self):
        self.assertEqual([c.carrier for c in cosets.cosets_of(
            self._h(E2, E12))], [frozenset([E2, E12]), frozenset([A21, T])])

    def test_left_coset_needs_domain(self):
        self.assertRaises(exceptions.ParameterException,
                          lambda: cosets.left_coset(A21, self._h(E12)))

    def test_cosets_equal(self):
        h = self._h(E2, E12)
        self.assertTrue(cosets.cosets_equal(cosets.left_coset(E2, h),
                                            cosets.left_coset(E12, h)))
        self.assertFalse(cosets.cosets_equal(cosets.left_coset(E2, h),
                                             cosets.left_coset(T, h)))

    def test_atlas(self):
        self.assertTrue(cosets.is_atlas(self.s, [E12, T]))
        self.assertFalse(cosets.is_atlas(self.s, [E2, E1]))

    def test_coset_semigroup(self):
        ks = cosets.build_KS(self.s)
        self.assertEqual(len(ks), 8)
        self.assertTrue(ks.check_iota())
        self.assertTrue(ks.check_order())
        self.assertTrue(ks.verify_product_law())
        self.assertEqual(ks.zero, ks.find(range(7)))
        self.assertEqual(ks.as_semigroup().size, 8)

    def test_coset_cap(self):
        self.assertRaises(exceptions.CapExceededException,
                          lambda: cosets.build_KS(self.s, max_cosets=1))

    def test_directed_cosets(self):
        ls, certificate = cosets.build_LS(self.s)
        self.assertEqual(len(ls), 7)
        self.assertEqual(certificate, {'injective': True,
                                       'surjective': True,
                                       'multiplicative': True})

    def test_is_directed(self):
        self.assertTrue(cosets.is_directed(self.s, [A21, T]))
        self.assertFalse(cosets.is_directed(self.s, [E12, T]))
        self.assertRaises(exceptions.ParameterException,
                          lambda: cosets.is_directed(self.s, []))

    def test_meet_decomposition(self):
        coset = cosets.left_coset(E12, self._h(E12, T))
        blocks = cosets.meet_decomposition(coset)
        self.assertEqual([b.carrier for b in blocks],
                         [frozenset([E12]), frozenset([T])])
        self.assertEqual(cosets.kos_meet(blocks), coset)

    def test_coset_closure(self):
        self.assertEqual(cosets.coset_closure(self.s, [E12, T]).carrier,
                         frozenset([E12, T]))
        self.assertEqual(cosets.principal_coset(self.s, A21).carrier,
                         frozenset([A21, T]))

    def test_normalize_directed_subset(self):
        self.assertEqual(
            cosets.normalize_directed_subset(self.s, [A21]).carrier,
            frozenset([A21, T]))
        self.assertRaises(
            exceptions.ParameterException,
            lambda: cosets.normalize_directed_subset(self.s, [E2, E1]))
        self.assertTrue(cosets.is_coinitial(self.s, [T], [A21]))

    def test_schutzenberger_restriction(self):
        ks = cosets.build_KS(self.s)
        h = self._h(E2, E12)
        self.assertEqual(cosets.schutzenberger_restriction(ks, h).moves,
                         cosets.coset_space_action(h).moves)


class GroupoidTest(unittest.TestCase):

    def setUp(self):
        self.s = _i2()
        self.g = groupoid.paterson_groupoid(self.s)

    def test_one_arrow_per_element(self):
        self.assertEqual(len(self.g.arrows), self.s.size)
        self.assertEqual(len(self.g.objects), len(self.s.idempotents))

    def test_components(self):
        self.assertEqual(groupoid.connected_components(self.g),
                         [(0,), (1, 2), (3,)])
        self.assertTrue(self.g.check_components())

    def test_restricted_product(self):
        r = groupoid.restricted_product_groupoid(self.s)
        self.assertEqual(r.hom(1, 2), [A21])
        self.assertEqual(r.compose(A21, A12), E1)
        self.assertEqual(r.compose(A21, A21), None)

    def test_local_group_certificate(self):
        local, quotient, theta, certificate = \
            groupoid.local_group_certificate(self.g, 0)
        self.assertEqual(local.size, 2)
        self.assertEqual(quotient.size, 2)
        self.assertEqual(sorted(theta), [0, 1])
        self.assertTrue(all(certificate.values()))

    def test_topology(self):
        ls = self.g.ls
        basis = groupoid.topology_basis(ls)
        points = range(len(ls))
        self.assertTrue(groupoid.is_basis(basis, points))
        self.assertTrue(groupoid.is_discrete(basis, points))

    def test_paterson_coordinates(self):
        ls = self.g.ls
        coset = ls[ls.iota(A21)]
        coordinate = groupoid.paterson_coordinates(coset)
        self.assertEqual(coordinate.subsemigroup.carrier,
                         frozenset([E1, E12]))
        self.assertEqual(coordinate.carrier(), frozenset([A21, T]))
        other = groupoid.PatersonCoordinate(coordinate.subsemigroup, T)
        self.assertTrue(coordinate.identified(other))

    def test_dot(self):
        text = dot.groupoid_dot(self.g)
        self.assertTrue(text.startswith('digraph "Paterson(I_2)" {'))
        self.assertEqual(text.count('->'), 7)
        self.assertEqual(dot.export_dot(self.g), text)


class ActionsTest(unittest.TestCase):

    def setUp(self):
        self.s = _i2()

    def _schutzenberger(self, e):
        return core.schutzenberger_action(self.s, e)

    def _universal(self, e):
        f = order.principal_filter(self.s, e)
        return cosets.coset_space_action(order.filter_up_in_S(f))

    def test_universal_and_fundamental(self):
        top = self._schutzenberger(E12)
        self.assertTrue(actions.is_universal(top))
        self.assertFalse(actions.is_fundamental(top))
        bottom = self._schutzenberger(ZERO)
        self.assertTrue(actions.is_universal(bottom))
        self.assertTrue(actions.is_fundamental(bottom))

    def test_coset_model(self):
        action = self._schutzenberger(E2)
        self.assertTrue(actions.equivalent_to_coset_action(
            action, action.base).is_equivalence)

    def _coset_spaces(self):
        return [cosets.coset_space_action(h) for h in
                order.enumerate_closed_inverse_subsemigroups(self.s)]

    def test_every_action_is_a_coset_action(self):
        found = [self._schutzenberger(e) for e in self.s.idempotents]
        found.extend(self._coset_spaces())
        for action in found:
            for x in range(len(action)):
                m = actions.equivalent_to_coset_action(action, x)
                self.assertTrue(m.is_equivalence, (action.name, x))
                self.assertEqual(m(x), 0)

    def test_morphism_existence_matches_search(self):
        spaces = self._coset_spaces()
        for source in spaces:
            for target in spaces:
                for x in range(len(source)):
                    for y in range(len(target)):
                        where = (source.name, x, target.name, y)
                        self.assertEqual(
                            actions.build_morphism(
                                source, x, target, y) is not None,
                            actions.Morphism.find_by_search(
                                source, target, x, y) is not None, where)
                        self.assertEqual(
                            actions.build_strong_morphism(
                                source, x, target, y) is not None,
                            actions.Morphism.find_by_search(
                                source, target, x, y,
                                strong=True) is not None, where)

    def test_universal_cover(self):
        action = self._schutzenberger(E12)
        cover, m = actions.universal_cover(action, action.base)
        self.assertEqual(len(cover), 2)
        self.assertTrue(m.is_strong)
        self.assertTrue(actions.check_cover(m))
        self.assertTrue(actions.check_immersion(m))

    def test_fundamental_quotient(self):
        action = self._schutzenberger(E12)
        m, quotient = actions.fundamental_quotient(action, action.base)
        self.assertEqual(len(quotient), 1)
        self.assertFalse(m.is_bijective)
        self.assertTrue(m.is_surjective)

    def test_strong_congruences(self):
        action = self._universal(E12)
        congruences = actions.strong_congruences(action, action.base)
        self.assertEqual(len(congruences), 2)
        self.assertEqual(sorted(c.partition for c in congruences),
                         actions.strong_congruence_oracle(action))

    def test_strong_congruences_need_universal(self):
        action = self._schutzenberger(E12)
        m, quotient = actions.fundamental_quotient(action, action.base)
        self.assertRaises(exceptions.ParameterException,
                          lambda: actions.strong_congruences(quotient, 0))

    def test_quotient_action(self):
        action = self._universal(E12)
        quotient, nu = actions.quotient_action(action, [[0, 1]])
        self.assertEqual(len(quotient), 1)
        self.assertEqual(nu.mapping, [0, 0])

    def test_congruence_that_is_not_strong(self):
        action = self._schutzenberger(E2)
        self.assertTrue(actions.is_congruence(action, [[0, 1]]))
        self.assertFalse(actions.is_strong_congruence(action, [[0, 1]]))
        self.assertRaises(exceptions.ParameterException,
                          lambda: actions.quotient_action(action, [[0, 1]]))

    def test_kernel_factorization(self):
        action = self._schutzenberger(E12)
        _, m = actions.universal_cover(action, action.base)
        nu, beta = actions.factor_through_quotient(m)
        self.assertTrue(beta.is_injective)
        self.assertEqual(actions.compose(nu, beta).mapping, m.mapping)

    def test_equivalence_by_search(self):
        self.assertIsNotNone(actions.find_equivalence_by_search(
            self._universal(E12), self._schutzenberger(E12)))
        self.assertIsNotNone(actions.actions_equivalent(
            self._universal(E12), self._schutzenberger(E12)))

    def test_action_axioms(self):
        moves = [[None]] + [[0] for _ in range(6)]
        with self.assertRaises(exceptions.ActionAxiomException) as cm:
            actions.TransitiveAction(self.s, ['x'], moves)
        self.assertEqual(cm.exception.witness, (A21, A21, 0))

    def test_orbits_of_natural_action(self):
        def act(s, i):
            image = self.s.models[s](i + 1)
            return image - 1 if image else None
        found = actions.orbits(self.s, ['1', '2'], act)
        self.assertEqual(len(found), 1)
        self.assertEqual(len(found[0]), 2)

    def test_action_graph(self):
        graph = actions.action_graph(self._schutzenberger(E2))
        self.assertTrue(graph.check_involution())
        for edge in graph.edges:
            self.assertTrue(graph.has_edge(*graph.involution(edge)))
        text = dot.action_graph_dot(graph)
        self.assertTrue('peripheries=2' in text)
        self.assertEqual(dot.export_dot(graph), text)


class FieldsTest(unittest.TestCase):

    def test_parse_field(self):
        self.assertEqual(fields.parse_field('gf:7').name, 'gf:7')
        self.assertEqual(fields.parse_field('Q'), Q)
        self.assertRaises(exceptions.FieldException,
                          lambda: fields.parse_field('gf:8'))
        self.assertRaises(exceptions.FieldException,
                          lambda: fields.parse_field('r'))

    def test_prime_field_arithmetic(self):
        f = fields.PrimeField(5)
        self.assertEqual(f.inv(2), 3)
        self.assertEqual(f.coerce(fractions.Fraction(1, 2)), 3)
        self.assertEqual(f.roots_of_unity(4), [1, 2, 3, 4])
        self.assertRaises(exceptions.FieldException,
                          lambda: f.coerce(fractions.Fraction(1, 5)))

    def test_rational_roots_of_unity(self):
        self.assertEqual(Q.roots_of_unity(4), [-1, 1])
        self.assertEqual(Q.roots_of_unity(3), [1])


class LinalgTest(unittest.TestCase):

    def test_nullspace(self):
        self.assertEqual(linalg.nullspace([[1, 1]], Q, 2), [[-1, 1]])

    def test_determinant(self):
        self.assertEqual(linalg.determinant([[1, 2], [3, 4]], Q), -2)
        f = fields.PrimeField(5)
        self.assertEqual(linalg.determinant([[1, 2], [3, 4]], f), 3)

    def test_spin(self):
        jordan = [[1, 1], [0, 1]]
        self.assertEqual(len(linalg.spin([[1, 0]], [jordan], Q, 2)), 1)
        self.assertEqual(len(linalg.spin([[0, 1]], [jordan], Q, 2)), 2)

    def test_coordinates_outside_span(self):
        self.assertRaises(exceptions.ParameterException,
                          lambda: linalg.coordinates([[1, 0]], [[0, 1]], Q))


class MeatAxeTest(unittest.TestCase):

    def test_irreducible_factors(self):
        self.assertEqual(meataxe.irreducible_factors([1, 0, 1], 5),
                         [[2, 1], [3, 1]])
        self.assertEqual(meataxe.irreducible_factors([1, 0, 1], 3),
                         [[1, 0, 1]])

    def test_repeated_factors_are_listed_once(self):
        # (x + 1)^2 (x^2 + 2) over GF(5)
        h = [2, 4, 3, 2, 1]
        self.assertEqual(meataxe.irreducible_factors(h, 5),
                         [[1, 1], [2, 0, 1]])

    def test_reducible_module(self):
        u = meataxe.find_proper_submodule([[[1, 1], [0, 1]]],
                                          fields.PrimeField(5), 2)
        self.assertEqual(len(u), 1)

    def test_irreducible_module(self):
        companion = [[0, 4], [1, 4]]
        self.assertIsNone(meataxe.find_proper_submodule(
            [companion], fields.PrimeField(5), 2))

    def test_composition_factors(self):
        factors = meataxe.composition_factors(
            [[[1, 1], [0, 1]]], fields.PrimeField(5), 2)
        self.assertEqual([len(f[0]) for f in factors], [1, 1])


class RepresentationTest(unittest.TestCase):

    def setUp(self):
        self.s = _i2()

    def _trivial(self, e):
        group = core.maximal_subgroup(self.s, e)
        return reps.GroupRep(group, Q, [[[1]]] * group.size)

    def _sign(self):
        group = core.maximal_subgroup(self.s, E12)
        return reps.group_irreducibles(group, Q)[1]

    def test_irreducibles_of_I2(self):
        found = reps.irreducible_representations(self.s, Q)
        self.assertEqual(sorted(r.dim for r in found), [1, 1, 1, 2])
        self.assertTrue(reps.completeness(self.s, found)['complete'])
        self.assertEqual([r.contracted for r in found],
                         [False, True, True, True])

    def test_irreducibles_of_I3(self):
        s = core.inverse_symmetric(3)
        found = reps.irreducible_representations(s, Q)
        self.assertEqual(sorted(r.dim for r in found),
                         [1, 1, 1, 2, 3, 3, 3])
        self.assertEqual(reps.completeness(s, found)['sum_of_squares'], 34)

    def test_irreducibles_of_I4_over_splitting_prime(self):
        s = core.inverse_symmetric(4)
        found = reps.irreducible_representations(s, Q)
        self.assertEqual(set(r.field for r in found),
                         set([fields.PrimeField(13)]))
        self.assertEqual(sorted(r.dim for r in found),
                         [1, 1, 1, 2, 3, 3, 4, 4, 4, 6, 6, 8])
        self.assertTrue(reps.completeness(s, found)['complete'])

    def test_certificates(self):
        found = reps.irreducible_representations(self.s, Q)
        reps.check_certificates(found[3], {5: True, 7: True}, [])
        with self.assertRaises(exceptions.ValidationException) as cm:
            reps.check_certificates(found[3], {5: True, 7: False}, [])
        self.assertEqual(cm.exception.witness, [found[3].name, 7])
        self.assertRaises(
            exceptions.ValidationException,
            lambda: reps.check_certificates(found[0], {5: True}, [[1]]))

    def test_non_split_module_may_fall_apart(self):
        s = core.group_semigroup(core.cyclic_group(3))
        found = reps.irreducible_representations(s, Q)
        reps.check_certificates(found[1], {5: True, 7: False}, [])

    def test_irreducibles_over_prime_field(self):
        s = core.inverse_symmetric(3)
        found = reps.irreducible_representations(s, fields.PrimeField(5))
        self.assertEqual(sorted(r.dim for r in found),
                         [1, 1, 1, 2, 3, 3, 3])

    def test_irreducibles_of_chain(self):
        found = reps.irreducible_representations(core.chain(3), Q)
        self.assertEqual([r.dim for r in found], [1, 1, 1])

    def test_certify_simple(self):
        found = reps.irreducible_representations(self.s, Q)
        verdicts = reps.certify_simple(found, [5, 7])
        self.assertEqual(verdicts, [{5: True, 7: True}] * 4)

    def test_non_split_rational_module(self):
        s = core.group_semigroup(core.cyclic_group(3))
        found = reps.irreducible_representations(s, Q)
        self.assertEqual([r.dim for r in found], [1, 2])
        self.assertEqual([r.split for r in found], [True, False])
        self.assertEqual(reps.certify_simple(found, [5, 7]),
                         [{5: True, 7: True}, {5: True, 7: False}])
        self.assertFalse(reps.completeness(s, found)['complete'])

    def test_simplicity_needs_prime_field(self):
        found = reps.irreducible_representations(self.s, Q)
        self.assertRaises(exceptions.FieldException,
                          lambda: reps.is_simple_module(found[0]))

    def test_regular_module_is_not_simple(self):
        regular = reps.regular_representation(self.s, fields.PrimeField(5))
        simple, witness = reps.is_simple_module(regular)
        self.assertFalse(simple)
        self.assertTrue(0 < len(witness) < 7)

    def test_regular_module_factors(self):
        factors = reps.regular_module_factors(self.s, 5)
        self.assertEqual(sorted((r.dim, m) for r, m in factors),
                         [(1, 1), (1, 1), (1, 1), (2, 2)])
        found = reps.irreducible_representations(self.s, Q)
        self.assertTrue(reps.check_regular_decomposition(self.s, found, 5))

    def test_transversal(self):
        transversal, factor = reps.transversal_factorize(self.s, E2)
        self.assertEqual(transversal, [E2, A21])
        self.assertEqual(factor[A21], (A21, E2))

    def test_induced_semilattice_images(self):
        rep = reps.induce(self.s, E1, self._trivial(E1))
        self.assertEqual(rep.dim, 2)
        self.assertEqual(len(rep.idempotent_images()), 4)
        self.assertTrue(reps.semilattice_bound_check(rep))
        self.assertEqual(reps.largest_submodule_annihilated_by(rep, E1), [])

    def test_induced_dimension_cap(self):
        self.assertRaises(
            exceptions.CapExceededException,
            lambda: reps.induce(self.s, E1, self._trivial(E1), max_dim=1))

    def test_restriction_of_induced(self):
        self.assertEqual(
            reps.restriction_of_induced(self.s, E12, self._sign()),
            {'dimension': True, 'character': True, 'intertwiner': True})
        self.assertEqual(
            reps.restriction_of_induced(self.s, E2, self._trivial(E2)),
            {'dimension': True, 'character': True, 'intertwiner': True})

    def test_induce_via_quotient(self):
        quotient, rep = reps.induce_via_quotient(self.s, E12, self._sign())
        self.assertEqual(quotient.size, 3)
        self.assertEqual(quotient.labels, ['0', '[1,2]', '[2,1]'])
        self.assertEqual(rep.dim, 1)
        self.assertTrue(rep.contracted)
        quotient, rep = reps.induce_via_quotient(self.s, E2,
                                                 self._trivial(E2))
        self.assertEqual(quotient.size, 7)
        self.assertEqual(rep.dim, 2)

    def test_rees_quotient(self):
        ideal = reps.ideal_Ie(self.s, E12)
        self.assertEqual(ideal, frozenset([ZERO, A21, E2, E1, A12]))
        self.assertEqual(reps.ideal_Ie(self.s, ZERO), frozenset())
        self.assertIs(reps.rees_quotient(self.s, []), self.s)
        self.assertRaises(exceptions.ParameterException,
                          lambda: reps.rees_quotient(self.s, [E2]))

    def test_primitive(self):
        self.assertTrue(reps.is_primitive(self.s, E2))
        self.assertFalse(reps.is_primitive(self.s, E12))
        self.assertFalse(reps.is_primitive(self.s, ZERO))
        group = core.group_semigroup(core.cyclic_group(2))
        self.assertRaises(exceptions.ParameterException,
                          lambda: reps.is_primitive(group, 0))

    def test_not_multiplicative(self):
        matrices = [[[0]]] + [[[1]] for _ in range(6)]
        with self.assertRaises(exceptions.RepresentationException) as cm:
            reps.MatrixRep(self.s, Q, matrices)
        self.assertEqual(cm.exception.witness, (A21, A21))

    def test_extend_to_cosets(self):
        ls, _ = cosets.build_LS(self.s)
        for rep in reps.irreducible_representations(self.s, Q):
            self.assertEqual(len(reps.extend_to_cosets(rep, ls)), len(ls))

    def test_intertwiner(self):
        sign = self._sign()
        trivial = self._trivial(E12)
        self.assertIsNotNone(reps.find_intertwiner(sign, sign))
        self.assertIsNone(reps.find_intertwiner(sign, trivial))

    def test_to_dict(self):
        rep = reps.induce(self.s, E12, self._sign())
        data = rep.to_dict()
        self.assertEqual(data['field'], 'q')
        self.assertEqual(data['matrices']['[2,1]'], [[[-1, 1]]])


class GroupIrreduciblesTest(unittest.TestCase):

    def test_cyclic_over_rationals(self):
        found = reps.group_irreducibles(core.cyclic_group(3), Q)
        self.assertEqual([r.dim for r in found], [1, 2])
        self.assertTrue(found[0].is_trivial())

    def test_cyclic_with_roots_of_unity(self):
        found = reps.group_irreducibles(core.cyclic_group(3),
                                        fields.PrimeField(7))
        self.assertEqual([r.dim for r in found], [1, 1, 1])

    def test_klein_four(self):
        klein = core.GroupTable([[i ^ j for j in range(4)]
                                 for i in range(4)], name='V4')
        found = reps.group_irreducibles(klein, Q)
        self.assertEqual([r.dim for r in found], [1, 1, 1, 1])

    def test_rational_fallback_to_splitting_prime(self):
        mul = [[(i // 4 + j // 4) % 2 * 4 + (i + j) % 4 for j in range(8)]
               for i in range(8)]
        group = core.GroupTable(mul, name='C2xC4')
        self.assertFalse(reps.has_rational_form(group))
        found = reps.group_irreducibles(group, Q)
        self.assertEqual([r.field.name for r in found], ['gf:5'] * 8)
        self.assertEqual([r.dim for r in found], [1] * 8)
        self.assertTrue(all(r.split for r in found))
        self.assertTrue(found[0].is_trivial())

    def test_splitting_prime(self):
        self.assertEqual([reps.splitting_prime(k) for k in (1, 2, 4, 6, 12)],
                         [2, 3, 5, 7, 13])

    def test_symmetric_group(self):
        found = reps.group_irreducibles(core.parse_group('S3'), Q)
        self.assertEqual([r.name for r in found],
                         ['trivial', 'sign', 'standard'])

    def test_split_out_of_regular_module(self):
        found = reps.group_irreducibles(core.cyclic_group(4),
                                        fields.PrimeField(3))
        self.assertEqual([r.dim for r in found], [1, 1, 2])
        self.assertEqual([r.split for r in found], [True, True, False])

    def test_characteristic_divides_order(self):
        self.assertRaises(
            exceptions.FieldException,
            lambda: reps.group_irreducibles(core.cyclic_group(2),
                                            fields.PrimeField(2)))

    def test_order_cap(self):
        self.assertRaises(
            exceptions.CapExceededException,
            lambda: reps.group_irreducibles(core.parse_group('S4'), Q,
                                            max_order=6))


class BaseConfigFileUsingTest(unittest.TestCase):

    def _get_config(self, name):
        return loader.load(_fixture(name))


class ProvidersTest(BaseConfigFileUsingTest):

    def test_table_input(self):
        data, _ = self._get_config('brandt2')
        s = providers.semigroup_from_data(data)
        self.assertEqual(s.name, 'B2')
        self.assertEqual(s.size, 5)
        self.assertEqual(s.idempotents, [0, 1, 4])

    def test_templated_generators(self):
        s = providers.ingest(_fixture('test_generators'))
        self.assertEqual(s.name, 'I_2')
        self.assertEqual(s.size, 7)

    def test_generator_list(self):
        s = providers.ingest(_fixture('partial_list'))
        self.assertEqual(s.name, 'partial_list')
        self.assertEqual(s.size, 5)

    def test_duplicate_key(self):
        with self.assertRaises(exceptions.InputException) as cm:
            self._get_config('duplicate_key')
        self.assertEqual(cm.exception.line, 3)

    def test_unknown_key(self):
        six.assertRaisesRegex(self, exceptions.InputException,
                              'unknown key identity',
                              lambda: providers.ingest(
                                  _fixture('unknown_key')))

    def test_non_associative_file(self):
        self.assertRaises(exceptions.NonAssociativeException,
                          lambda: providers.ingest(
                              _fixture('nonassociative')))

    def test_missing_file(self):
        self.assertRaises(exceptions.InputException,
                          lambda: loader.load(_fixture('no_such_file')))

    def test_syntax_error(self):
        with self.assertRaises(exceptions.InputException) as cm:
            loader.parse('size: [1, 2\nmul: 3\n')
        self.assertIsNotNone(cm.exception.line)

    def test_bad_table(self):
        six.assertRaisesRegex(
            self, exceptions.InputException, 'key mul',
            lambda: providers.semigroup_from_data({'size': 2,
                                                   'mul': [[0, 0]]}))
        six.assertRaisesRegex(
            self, exceptions.InputException, 'missing key mul',
            lambda: providers.semigroup_from_data({'size': 2}))
        six.assertRaisesRegex(
            self, exceptions.InputException, 'key generators',
            lambda: providers.semigroup_from_data(['[1,1]']))

    def test_builtins(self):
        self.assertEqual(providers.ingest('brandt:C2,2').size, 9)
        self.assertEqual(providers.ingest('chain:4').size, 4)
        self.assertEqual(providers.ingest('adjoin_identity:C3').size, 4)
        for text in ('chain:x', 'nope:1', 'inverse_symmetric:9', 'brandt:C2'):
            self.assertRaises(exceptions.JobConfigurationException,
                              lambda: providers.ingest({'builtin': text}))

    def test_exactly_one_source(self):
        self.assertRaises(
            exceptions.JobConfigurationException,
            lambda: providers.SemigroupProviderFactory.from_config(
                {'file': 'a.yaml', 'builtin': 'chain:2'}))


class AuditorConfigTest(BaseConfigFileUsingTest):

    def _job(self, name):
        config, base_dir = self._get_config(name)
        return conductor.JobSpec.from_config(config, base_dir=base_dir)

    def test_ignore_errors_wraps_with_non_failing_auditor(self):
        c = conductor.Conductor(self._job('auditor_ignore_errors'))
        self.assertEqual(len(c.auditor.get_auditors()), 2)
        self.assertTrue(isinstance(c.auditor.get_auditors()[0],
                                   audit._FailingAuditor))
        self.assertTrue(isinstance(c.auditor.get_auditors()[1],
                                   audit.NonFailingAuditor))
        self.assertTrue(isinstance(c.auditor.get_auditors()[1].wrapped,
                                   audit._FailingAuditor))

    def test_non_failing_auditor(self):
        c = conductor.Conductor(self._job('auditor_ignore_errors'))
        quiet = c.auditor.get_auditors()[1]
        # Should not fail
        quiet.started(audit.INFO, 'analyze', 'chain_2')
        quiet.failed('analyze', 'chain_2', 'boom')

    def test_failing_auditor_aborts_on_start_only(self):
        c = conductor.Conductor(self._job('auditor_ignore_errors'))
        self.assertRaises(exceptions.GroupoidalException,
                          lambda: c.auditor.started(audit.INFO, 'analyze',
                                                    'chain_2'))
        c.auditor.finished(audit.INFO, 'analyze', 'chain_2', 0.5)
        c.auditor.failed('analyze', 'chain_2', 'boom')

    def test_stream_auditor(self):
        stream = io.StringIO()
        auditor = audit.StreamAuditor(level='debug', stream=stream)
        auditor.started(audit.INFO, 'analyze', _i2(), who='tester')
        auditor.finished(audit.DEBUG, 'analyze', _i2(), 1.25)
        auditor.failed('reps', ['a', 'b'], 'boom')
        auditor.close()
        text = stream.getvalue()
        self.assertTrue('tester started analyze on I_2.' in text)
        self.assertTrue('analyze on I_2 finished in 1.250s.' in text)
        self.assertTrue('reps on a, b failed: boom' in text)

    def test_info_level_skips_debug_events(self):
        stream = io.StringIO()
        auditor = audit.StreamAuditor(level='info', stream=stream)
        auditor.finished(audit.DEBUG, 'analyze', 'S')
        auditor.failed('analyze', 'S')
        auditor.close()
        self.assertFalse('finished' in stream.getvalue())
        self.assertTrue('analyze on S failed' in stream.getvalue())

    def test_invalid_auditors(self):
        self.assertRaises(exceptions.InvalidAuditorConfigurationException,
                          lambda: audit.AuditorFactory.from_config(
                              [{'type': 'hipchat'}]))
        self.assertRaises(exceptions.InvalidAuditorConfigurationException,
                          lambda: audit.AuditorFactory.from_config(['log']))
        self.assertRaises(exceptions.InvalidAuditorConfigurationException,
                          lambda: audit.StreamAuditor(level='loud'))


class JobSpecTest(BaseConfigFileUsingTest):

    def test_unknown_job_key(self):
        config, _ = self._get_config('bad_job_key')
        six.assertRaisesRegex(self, exceptions.JobConfigurationException,
                              'Unknown job key services',
                              lambda: conductor.JobSpec.from_config(config))

    def test_relative_input_follows_job_file(self):
        config, base_dir = self._get_config('test_job')
        job = conductor.JobSpec.from_config(config, base_dir=base_dir)
        self.assertEqual(job.source,
                         {'file': os.path.join(base_dir, 'brandt2.yaml')})
        self.assertEqual(job.computations, ['analyze', 'reps'])
        self.assertFalse(job.use_cache)

    def test_export_dot_restricts_computations(self):
        job = conductor.JobSpec.from_config({'input': {'builtin': 'chain:2'}},
                                            command='export-dot')
        self.assertEqual(job.computations, conductor.DOT_COMPUTATIONS)
        self.assertTrue(job.dot_only)

    def test_defaults(self):
        job = conductor.JobSpec({'builtin': 'chain:2'}, ['analyze'])
        self.assertEqual(job.field, 'q')
        self.assertEqual(job.verification_primes, [5, 7])
        self.assertEqual(job.caps, conductor.DEFAULT_CAPS)

    def test_invalid_jobs(self):
        source = {'builtin': 'chain:2'}
        for kwargs in ({'computations': []},
                       {'computations': ['sing']},
                       {'computations': ['reps'], 'caps': {'max_dim': 0}},
                       {'computations': ['reps'], 'caps': {'max_pies': 3}},
                       {'computations': ['reps'], 'field': 'gf:9'},
                       {'computations': ['reps'],
                        'verification_primes': [4]}):
            self.assertRaises(exceptions.JobConfigurationException,
                              lambda: conductor.JobSpec(source, **kwargs))

    def test_parameters_name_the_input(self):
        a = conductor.JobSpec({'builtin': 'chain:2'}, ['reps'])
        b = conductor.JobSpec({'builtin': 'chain:2'}, ['reps'], field='gf:5')
        self.assertNotEqual(a.parameters('reps'), b.parameters('reps'))
        self.assertEqual(a.parameters('reps')['input'],
                         {'builtin': 'chain:2'})


class CacheTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_content_key(self):
        s = _i2()
        self.assertEqual(cache.content_key(s, {'field': 'q'}),
                         cache.content_key(_i2(), {'field': 'q'}))
        self.assertNotEqual(cache.content_key(s, {'field': 'q'}),
                            cache.content_key(s, {'field': 'gf:5'}))

    def test_put_and_get(self):
        c = cache.ResultCache(self.tmp)
        self.assertEqual(c.get('abc', 'analyze'), None)
        c.put('abc', 'analyze', {'analyze.json': '{}\n'})
        self.assertEqual(c.get('abc', 'analyze'), {'analyze.json': '{}\n'})
        self.assertTrue(os.path.exists(
            os.path.join(self.tmp, 'abc-analyze.json')))

    def test_disabled(self):
        c = cache.ResultCache(self.tmp, enabled=False)
        c.put('abc', 'analyze', {'analyze.json': '{}\n'})
        self.assertEqual(c.get('abc', 'analyze'), None)
        self.assertEqual(os.listdir(self.tmp), [])

    def test_unreadable_entry(self):
        with open(os.path.join(self.tmp, 'abc-reps.json'), 'w') as f:
            f.write('{not json')
        self.assertEqual(cache.ResultCache(self.tmp).get('abc', 'reps'),
                         None)

    def test_atomic_write_creates_directories(self):
        path = os.path.join(self.tmp, 'a', 'b', 'out.json')
        cache.atomic_write(path, 'x\n')
        with open(path) as f:
            self.assertEqual(f.read(), 'x\n')
        self.assertEqual(os.listdir(os.path.dirname(path)), ['out.json'])


class EntitiesTest(unittest.TestCase):

    def test_dumps_is_deterministic(self):
        data = {'b': set([3, 1]), 'a': fractions.Fraction(1, 2)}
        self.assertEqual(entities.dumps(data),
                         '{\n  "a": [\n    1,\n    2\n  ],\n'
                         '  "b": [\n    1,\n    3\n  ]\n}\n')

    def test_error_to_dict(self):
        e = exceptions.ValidationException('broken', witness=(1, 2))
        self.assertEqual(e.to_dict(), {'error': 'validation',
                                       'message': 'broken',
                                       'witness': [1, 2]})
        e = exceptions.InputException('bad', line=3, column=4)
        self.assertEqual(str(e), 'bad (line 3, column 4)')


class TermOutputTest(unittest.TestCase):

    def test_plain_stream_gets_committed_lines_only(self):
        out = io.StringIO()
        om = termoutput.OutputManager(2, out=out)
        o = om.get_formatter(1, prefix='  2. reps')
        om.start()
        o.pending('computing...')
        o.commit(termoutput.green('done'), '12ms')
        om.end()
        self.assertEqual(out.getvalue(), '  2. reps done 12ms\n')

    def test_elapsed(self):
        self.assertEqual(termoutput.elapsed(0.25), '250ms')
        self.assertEqual(termoutput.elapsed(2.5), '2.5s')
        self.assertEqual(termoutput.elapsed(125), '2m5s')


class CommandLineTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self._saved = dict((k, os.environ.get(k)) for k in
                           (cache.CACHE_DIR_ENV, 'GROUPOIDAL_TEST_OUT'))
        os.environ[cache.CACHE_DIR_ENV] = os.path.join(self.tmp, 'cache')
        os.environ['GROUPOIDAL_TEST_OUT'] = self.tmp

    def tearDown(self):
        for k, v in self._saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v
        shutil.rmtree(self.tmp)

    def _run(self, *args):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stderr(err):
            code = cli.main(list(args), out=out)
        return code, out.getvalue(), err.getvalue()

    def _report(self, directory, name):
        with open(os.path.join(directory, name)) as f:
            return json.load(f)

    def _bytes(self, directory, name):
        with open(os.path.join(directory, name), 'rb') as f:
            return f.read()

    def test_analyze(self):
        out = os.path.join(self.tmp, 'out')
        code, text, _ = self._run('analyze', '-b', 'inverse_symmetric:2',
                                  '-o', out)
        self.assertEqual(code, 0)
        self.assertTrue(os.path.join(out, 'analyze.json') in text)
        report = self._report(out, 'analyze.json')
        self.assertEqual(report['size'], 7)
        self.assertEqual(report['idempotents'],
                         ['[0,0]', '[0,2]', '[1,0]', '[1,2]'])
        self.assertEqual(report['zero'], '[0,0]')
        self.assertEqual(len(report['green']['d_classes']), 3)
        self.assertEqual(report['sigma']['order'], 1)
        self.assertEqual(report['input'], {'builtin': 'inverse_symmetric:2'})

    def test_cosets(self):
        out = os.path.join(self.tmp, 'out')
        self.assertEqual(self._run('cosets', '-b', 'inverse_symmetric:2',
                                   '-o', out)[0], 0)
        report = self._report(out, 'cosets.json')
        self.assertEqual(len(report['closed_inverse_subsemigroups']), 5)
        self.assertEqual(report['K']['size'], 8)
        self.assertEqual(report['L']['size'], 7)
        self.assertTrue(report['product_law_verified'])

    def test_groupoid(self):
        out = os.path.join(self.tmp, 'out')
        self.assertEqual(self._run('groupoid', '-b', 'inverse_symmetric:2',
                                   '-o', out)[0], 0)
        report = self._report(out, 'groupoid.json')
        self.assertEqual(len(report['groupoid']['arrows']), 7)
        self.assertEqual(len(report['local_groups']), 3)
        self.assertTrue(report['topology']['discrete'])
        self.assertTrue(os.path.exists(os.path.join(out, 'groupoid.dot')))

    def test_actions(self):
        out = os.path.join(self.tmp, 'out')
        self.assertEqual(self._run('actions', '-b', 'inverse_symmetric:2',
                                   '-o', out)[0], 0)
        report = self._report(out, 'actions.json')
        self.assertEqual(len(report['schutzenberger']), 3)
        top = [u for u in report['universal'] if u['filter'] == ['[1,2]']]
        self.assertEqual(len(top[0]['strong_congruences']), 2)

    def test_reps(self):
        out = os.path.join(self.tmp, 'out')
        self.assertEqual(self._run('reps', '-b', 'inverse_symmetric:2',
                                   '-o', out)[0], 0)
        report = self._report(out, 'reps.json')
        self.assertEqual(report['field'], 'q')
        self.assertEqual(report['requested_field'], 'q')
        self.assertEqual(report['dimensions'], [1, 1, 1, 2])
        self.assertTrue(report['completeness']['complete'])
        self.assertTrue(report['regular_decomposition'])
        for entry in report['irreducibles']:
            self.assertEqual(entry['simple'], {'5': True, '7': True})
            self.assertTrue(entry['semilattice_bound'])
            self.assertEqual(entry['annihilated_submodule'], 0)

    def test_failed_simplicity_certificate(self):
        out = os.path.join(self.tmp, 'out')
        with mock.patch.object(reps, 'certify_simple',
                               return_value=[{5: False}] * 4):
            code, _, err = self._run('reps', '-b', 'inverse_symmetric:2',
                                     '--no-cache', '-o', out)
        self.assertEqual(code, 2)
        self.assertEqual(json.loads(err)['error'], 'validation')
        self.assertFalse(os.path.exists(os.path.join(out, 'reps.json')))

    def test_rerun_is_byte_identical(self):
        first = os.path.join(self.tmp, 'first')
        second = os.path.join(self.tmp, 'second')
        for directory in (first, second):
            self.assertEqual(self._run('reps', '-b', 'chain:3', '--no-cache',
                                       '-o', directory)[0], 0)
        self.assertEqual(self._bytes(first, 'reps.json'),
                         self._bytes(second, 'reps.json'))
        self.assertFalse(os.path.exists(os.path.join(self.tmp, 'cache')))

    def test_cached_rerun(self):
        first = os.path.join(self.tmp, 'first')
        second = os.path.join(self.tmp, 'second')
        self.assertEqual(self._run('analyze', '-b', 'chain:3',
                                   '-o', first)[0], 0)
        entries = os.listdir(os.path.join(self.tmp, 'cache'))
        self.assertEqual(len(entries), 1)
        self.assertTrue(entries[0].endswith('-analyze.json'))
        self.assertEqual(self._run('analyze', '-b', 'chain:3',
                                   '-o', second)[0], 0)
        self.assertEqual(self._bytes(first, 'analyze.json'),
                         self._bytes(second, 'analyze.json'))

    def test_export_dot(self):
        out = os.path.join(self.tmp, 'out')
        self.assertEqual(self._run('export-dot', '-b', 'inverse_symmetric:2',
                                   '-o', out)[0], 0)
        self.assertEqual(sorted(os.listdir(out)),
                         ['action-0.dot', 'action-1.dot', 'action-2.dot',
                          'groupoid.dot'])

    def test_file_input(self):
        out = os.path.join(self.tmp, 'out')
        self.assertEqual(self._run('reps', '-i', _fixture('brandt2'),
                                   '--field', 'gf:5', '-o', out)[0], 0)
        report = self._report(out, 'reps.json')
        self.assertEqual(report['field'], 'gf:5')
        self.assertEqual(report['dimensions'], [1, 2])

    def test_job_file(self):
        self.assertEqual(self._run('analyze', '-j', _fixture('test_job'))[0],
                         0)
        reports = os.path.join(self.tmp, 'reports')
        self.assertEqual(sorted(os.listdir(reports)),
                         ['analyze.json', 'reps.json'])
        self.assertEqual(self._report(reports, 'reps.json')['dimensions'],
                         [1, 2])
        with open(os.path.join(self.tmp, 'audit.log')) as f:
            self.assertTrue('reps on B2 finished in ' in f.read())

    def test_validation_error(self):
        code, _, err = self._run('analyze', '-i', _fixture('nonassociative'),
                                 '-o', os.path.join(self.tmp, 'out'))
        self.assertEqual(code, 2)
        error = json.loads(err)
        self.assertEqual(error['error'], 'validation')
        self.assertEqual(error['witness'], [0, 0, 1])
        self.assertFalse(os.path.exists(os.path.join(self.tmp, 'out')))

    def test_cap_exceeded(self):
        code, _, err = self._run('cosets', '-b', 'inverse_symmetric:2',
                                 '--max-cosets', '1',
                                 '-o', os.path.join(self.tmp, 'out'))
        self.assertEqual(code, 3)
        self.assertEqual(json.loads(err)['error'], 'cap')

    def test_input_error(self):
        code, _, err = self._run('analyze', '-i', _fixture('unknown_key'),
                                 '-o', os.path.join(self.tmp, 'out'))
        self.assertEqual(code, 4)
        self.assertEqual(json.loads(err)['error'], 'input')

    def test_missing_source(self):
        self.assertEqual(self._run('analyze')[0], 4)

    def test_field_error(self):
        code, _, err = self._run('reps', '-b', 'group:C3', '--field', 'gf:3',
                                 '-o', os.path.join(self.tmp, 'out'))
        self.assertEqual(code, 5)
        self.assertEqual(json.loads(err)['error'], 'field')


if __name__ == '__main__':
    unittest.main()
