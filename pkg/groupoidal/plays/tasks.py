# Copyright (C) 2026 The groupoidal developers.
#
# The computations of a job, one task per report.

import time

from .. import actions
from .. import audit
from .. import core
from .. import cosets
from .. import dot
from .. import entities
from .. import exceptions
from .. import fields
from .. import groupoid
from .. import order
from .. import reps
from ..termoutput import green, elapsed

TASK_RESULT_FMT = '{:<10s}'

# K(S) products are compared with the intersection oracle up to this size.
PRODUCT_LAW_LIMIT = 64
# The regular module is decomposed for the semigroup itself up to this size.
REGULAR_ORACLE_LIMIT = 64


class Context(object):
    """What the tasks of one job share: the semigroup, the job parameters
    and intermediate results published by earlier tasks."""

    def __init__(self, semigroup, job, provenance):
        self.semigroup = semigroup
        self.job = job
        self.provenance = provenance
        self.results = {}

    def header(self):
        return {
            'input': self.provenance,
            'semigroup': {'name': self.semigroup.name,
                          'size': self.semigroup.size},
        }


class Task(object):
    """Base class for the computations of a job.

    A task reads the shared Context, may publish intermediate results in it,
    and leaves its output files in self.artifacts ({filename: text}).
    """

    name = None
    requires = []
    internal = False

    def __init__(self, o, context):
        """Initialize the base task parameters.

        Args:
            o (termoutput.OutputFormatter): the output formatter used for task
                output.
            context (Context): the shared job context.
        """
        self.o = o
        self.context = context
        self.artifacts = {}

    def run(self, auditor=None):
        subject = self.context.semigroup
        if auditor:
            auditor.started(audit.DEBUG, self.name, subject)

        start = time.time()
        try:
            self.o.pending('computing...')
            self._run()
            seconds = time.time() - start
            self.o.commit(green(TASK_RESULT_FMT.format('done')),
                          elapsed(seconds))
            if auditor:
                auditor.finished(audit.DEBUG, self.name, subject, seconds)
        except Exception as e:
            if auditor:
                auditor.failed(self.name, subject, e)
            exceptions.raise_with_tb()

    def _run(self):
        raise NotImplementedError

    def _emit(self, filename, report):
        data = self.context.header()
        data.update(report)
        self.artifacts[filename] = entities.dumps(data)


class LenzTask(Task):
    """Build L(S) with its isomorphism certificate; no report of its own."""

    name = 'lenz'
    internal = True

    def _run(self):
        s = self.context.semigroup
        ls, certificate = cosets.build_LS(
            s, max_table=self.context.job.caps['max_table'])
        self.context.results['ls'] = ls
        self.context.results['ls_certificate'] = certificate


class AnalyzeTask(Task):
    """Elements, idempotents, Green's relations, maximal subgroups and the
    maximal group image."""

    name = 'analyze'

    def _run(self):
        s = self.context.semigroup
        green_data = s.green_data()
        green_data.check()
        sigma, projection = core.sigma_quotient(s)
        subgroups = []
        for e in green_data.representatives():
            g = core.maximal_subgroup(s, e)
            subgroups.append({
                'idempotent': s.label(e),
                'order': g.size,
                'abelian': bool(g.is_abelian()),
                'exponent': g.exponent(),
                'elements': g.labels,
            })
        self._emit('analyze.json', {
            'size': s.size,
            'labels': s.labels,
            'idempotents': [s.label(e) for e in s.idempotents],
            'zero': s.label(s.zero) if s.zero is not None else None,
            'generators': [s.label(g) for g in s.generators],
            'natural_order': [[s.label(a), s.label(b)]
                              for b in range(s.size)
                              for a in sorted(s.below(b)) if a != b],
            'green': {
                'd_classes': [{
                    'idempotent': s.label(e),
                    'l_classes': k,
                    'group_order': h,
                } for e, k, h in green_data.d_class_sizes()],
                'L': green_data.L,
                'R': green_data.R,
                'H': green_data.H,
                'D': green_data.D,
                'J': green_data.J,
            },
            'maximal_subgroups': subgroups,
            'sigma': {
                'order': sigma.size,
                'classes': [sorted(x for x in projection
                                   if projection[x] == i)
                            for i in range(sigma.size)],
            },
        })


class CosetsTask(Task):
    """Closed inverse subsemigroups, K(S) and L(S)."""

    name = 'cosets'
    requires = ['lenz']

    def _run(self):
        s = self.context.semigroup
        caps = self.context.job.caps
        subsemigroups = order.enumerate_closed_inverse_subsemigroups(
            s, cap=caps['max_subsemigroups'])
        order.intersection_closure_check(subsemigroups)
        ks = cosets.build_KS(s, max_cosets=caps['max_cosets'],
                             max_table=caps['max_table'],
                             max_subsemigroups=caps['max_subsemigroups'])
        ks.check_iota()
        verified = None
        if len(ks) <= PRODUCT_LAW_LIMIT:
            ks.check_order()
            verified = ks.verify_product_law()
        ls = self.context.results['ls']
        self._emit('cosets.json', {
            'closed_inverse_subsemigroups': [h.to_dict()
                                             for h in subsemigroups],
            'conjugacy_classes': [[subsemigroups.index(h) for h in cls]
                                  for cls in order.conjugacy_classes(
                                      subsemigroups)],
            'fully_closed': [i for i, h in enumerate(subsemigroups)
                             if core.is_fully_closed(s, h.carrier)],
            'K': ks.to_dict(),
            'product_law_verified': verified,
            'L': {
                'size': len(ls),
                'certificate': self.context.results['ls_certificate'],
                'elements': [c.to_dict() for c in ls.elements],
            },
        })


class GroupoidTask(Task):
    """Paterson's groupoid, its components, local groups and topology."""

    name = 'groupoid'
    requires = ['lenz']

    def _run(self):
        ls = self.context.results['ls']
        g = groupoid.paterson_groupoid(self.context.semigroup, ls=ls)
        g.check_components()
        local = []
        for component in groupoid.connected_components(g):
            obj = component[0]
            group, quotient, theta, certificate = \
                groupoid.local_group_certificate(g, obj)
            local.append({
                'object': g.objects[obj],
                'objects': len(component),
                'order': group.size,
                'sigma_order': quotient.size,
                'theta': theta,
                'certificate': certificate,
            })
        basis = groupoid.topology_basis(ls)
        points = range(len(ls))
        self.context.results['groupoid'] = g
        self._emit('groupoid.json', {
            'groupoid': g.to_dict(),
            'isomorphic_to_restricted_product': True,
            'components': groupoid.connected_components(g),
            'local_groups': local,
            'topology': {
                'basis_sets': len(basis),
                'is_basis': groupoid.is_basis(basis, points),
                'discrete': groupoid.is_discrete(basis, points),
            },
        })
        self.artifacts['groupoid.dot'] = dot.groupoid_dot(g)


class ActionsTask(Task):
    """Schützenberger actions, their coset-space models, covers and the
    strong congruences of every universal action."""

    name = 'actions'

    def _run(self):
        s = self.context.semigroup
        entries = []
        for i, e in enumerate(s.green_data().representatives()):
            action = core.schutzenberger_action(s, e)
            equivalence = actions.equivalent_to_coset_action(
                action, action.base)
            cover, m = actions.universal_cover(action, action.base)
            quotient_map, fundamental = actions.fundamental_quotient(
                action, action.base)
            entries.append({
                'action': action.to_dict(),
                'stabilizer': sorted(
                    actions.stabilizer(action, action.base).carrier),
                'coset_model': equivalence.to_dict(),
                'universal': actions.is_universal(action),
                'fundamental': actions.is_fundamental(action),
                'universal_cover': {
                    'points': len(cover),
                    'cover': actions.check_cover(m),
                },
                'fundamental_quotient': {
                    'points': len(fundamental),
                    'bijective': quotient_map.is_bijective,
                },
            })
            self.artifacts['action-{}.dot'.format(i)] = \
                dot.action_graph_dot(actions.action_graph(action))

        universal = []
        for f in order.enumerate_filters(s):
            action = cosets.coset_space_action(order.filter_up_in_S(f))
            congruences = actions.strong_congruences(action, action.base)
            universal.append({
                'filter': [s.label(x) for x in sorted(f.carrier)],
                'points': len(action),
                'strong_congruences': [c.to_dict() for c in congruences],
            })
        self._emit('actions.json', {
            'schutzenberger': entries,
            'universal': universal,
        })


class RepsTask(Task):
    """All irreducible representations with their certificates."""

    name = 'reps'
    requires = ['lenz']

    def _run(self):
        s = self.context.semigroup
        job = self.context.job
        irreducibles = reps.irreducible_representations(
            s, job.field, max_dim=job.caps['max_dim'])
        field = irreducibles[0].field
        orders = self._group_orders()
        primes = [p for p in job.verification_primes
                  if all(g % p for g in orders)]
        verdicts = reps.certify_simple(irreducibles, primes,
                                       max_dim=job.caps['max_dim'])
        ls = self.context.results['ls']
        entries = []
        for rep, verdict in zip(irreducibles, verdicts):
            e = self._inducing_idempotent(rep)
            annihilated = reps.largest_submodule_annihilated_by(rep, e)
            reps.check_certificates(rep, verdict, annihilated)
            entry = rep.to_dict()
            entry.update({
                'trace': rep.trace_vector(),
                'simple': verdict,
                'semilattice_bound': reps.semilattice_bound_check(rep),
                'annihilated_submodule': len(annihilated),
                'extends_to_cosets': bool(reps.extend_to_cosets(rep, ls)),
            })
            entries.append(entry)
        report = {
            'field': field.name,
            'requested_field': fields.parse_field(job.field).name,
            'verification_primes': primes,
            'irreducibles': entries,
            'dimensions': sorted(r.dim for r in irreducibles),
            'completeness': reps.completeness(s, irreducibles),
            'regular_decomposition': None,
        }
        oracle_prime = field.characteristic or \
            (primes[0] if primes else None)
        if oracle_prime and s.size <= REGULAR_ORACLE_LIMIT and \
                all(r.split for r in irreducibles):
            report['regular_decomposition'] = \
                reps.check_regular_decomposition(s, irreducibles,
                                                 oracle_prime)
        self._emit('reps.json', report)

    def _group_orders(self):
        s = self.context.semigroup
        return [core.maximal_subgroup(s, e).size
                for e in s.green_data().representatives()]

    def _inducing_idempotent(self, rep):
        """The D-class representative e with M(e) != 0 lowest in the
        J-order."""
        s = self.context.semigroup
        candidates = [e for e in s.green_data().representatives()
                      if any(x != 0 for row in rep.matrix(e) for x in row)]
        for e in candidates:
            if all(not s.j_leq(f, e) or f == e for f in candidates):
                return e
        raise exceptions.RepresentationException(
            '{} has no apex'.format(rep.name))


TASKS = dict((t.name, t) for t in (LenzTask, AnalyzeTask, CosetsTask,
                                   GroupoidTask, ActionsTask, RepsTask))
