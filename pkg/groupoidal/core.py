# Copyright (C) 2026 The groupoidal developers.
#
# Element-level kernel for finite inverse semigroups.

import itertools
import logging

import numpy

from . import entities
from . import exceptions

DEFAULT_ELEMENT_CAP = 10 ** 6

logger = logging.getLogger(__name__)


class PartialPerm(object):
    """An injective partial map on {1..n}.

    Images are stored as a tuple of length n with 0 marking an undefined
    point. Composition follows the left action convention, so that
    f * g maps x to f(g(x)).
    """

    __slots__ = ('_images',)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        n = len(images)
        if n == 0:
            raise exceptions.ParameterException(
                'partial permutations need a positive degree')
        defined = [i for i in images if i != 0]
        if any(i < 0 or i > n for i in images):
            raise exceptions.ParameterException(
                'image out of range in {}'.format(list(images)))
        if len(set(defined)) != len(defined):
            raise exceptions.ParameterException(
                '{} is not injective'.format(list(images)))
        self._images = images

    @property
    def degree(self):
        return len(self._images)

    @property
    def images(self):
        return self._images

    @property
    def rank(self):
        return sum(1 for i in self._images if i)

    @property
    def domain(self):
        return frozenset(x + 1 for x, i in enumerate(self._images) if i)

    def __call__(self, x):
        """Image of the point x, or None when undefined."""
        i = self._images[x - 1]
        return i or None

    def __mul__(self, other):
        return pp_compose(self, other)

    def inverse(self):
        return pp_inverse(self)

    def is_idempotent(self):
        return all(i in (0, x + 1) for x, i in enumerate(self._images))

    def __eq__(self, other):
        return isinstance(other, PartialPerm) and self._images == other._images

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self._images < other._images

    def __hash__(self):
        return hash(self._images)

    def __str__(self):
        return pp_format(self)

    def __repr__(self):
        return 'PartialPerm({})'.format(pp_format(self))


def pp_compose(f, g):
    """The partial map x -> f(g(x))."""
    if f.degree != g.degree:
        raise exceptions.ParameterException(
            'degree mismatch: {} and {}'.format(f.degree, g.degree))
    fi = f.images
    return PartialPerm(fi[i - 1] if i else 0 for i in g.images)


def pp_inverse(f):
    images = [0] * f.degree
    for x, i in enumerate(f.images):
        if i:
            images[i - 1] = x + 1
    return PartialPerm(images)


def pp_identity(n):
    return PartialPerm(range(1, n + 1))


def pp_idempotent(n, points):
    """The identity map restricted to the given points."""
    points = set(points)
    return PartialPerm(x if x in points else 0 for x in range(1, n + 1))


def pp_rank(f):
    return f.rank


def pp_format(f):
    return '[{}]'.format(','.join(str(i) for i in f.images))


def pp_parse(text):
    """Parse the bracketed image-list form, e.g. "[2,0]" for {1 -> 2}."""
    if isinstance(text, PartialPerm):
        return text
    if isinstance(text, (list, tuple)):
        return PartialPerm(text)
    body = str(text).strip()
    if not (body.startswith('[') and body.endswith(']')):
        raise exceptions.ParameterException(
            'Invalid partial permutation {!r}'.format(text))
    try:
        images = [int(x) for x in body[1:-1].split(',') if x.strip()]
    except ValueError:
        raise exceptions.ParameterException(
            'Invalid partial permutation {!r}'.format(text))
    return PartialPerm(images)


def product_words(rows, generators):
    """Express every element reachable from the generators as a product.

    Returns:
        A list of (element, generator, rest) triples in discovery order,
        meaning element = generator * rest; rest is None for generators.
        Each rest appears earlier in the list than the element it builds.
    """
    words = []
    seen = set()
    for g in generators:
        if g not in seen:
            seen.add(g)
            words.append((g, g, None))
    i = 0
    while i < len(words):
        x = words[i][0]
        for g in generators:
            y = rows[g][x]
            if y not in seen:
                seen.add(y)
                words.append((y, g, x))
        i += 1
    return words


def _greedy_generators(size, rows, height):
    """A small generating set, picking elements of largest height first."""
    order = sorted(range(size), key=lambda s: (-height[s], s))
    gens = []
    generated = set()
    for s in order:
        if s in generated:
            continue
        gens.append(s)
        generated = set(w[0] for w in product_words(rows, gens))
        if len(generated) == size:
            break
    return sorted(gens)


class GroupTable(entities.Entity):
    """A finite group given by its multiplication table.

    Groups appear as maximal subgroups G_e (with an embedding into the
    semigroup), as σ-quotients, and as the input of representation code.
    """

    def __init__(self, mul, identity=None, inv=None, labels=None,
                 embedding=None, name='group', verify=True):
        super(GroupTable, self).__init__(name)
        self._mul = numpy.asarray(mul, dtype=numpy.int64)
        n = self._mul.shape[0] if self._mul.ndim == 2 else 0
        if n == 0 or self._mul.shape != (n, n):
            raise exceptions.ParameterException(
                'a group table must be a non-empty square table')
        self._rows = self._mul.tolist()
        self._size = n

        if identity is None:
            identity = next((e for e in range(n)
                             if self._rows[e] == list(range(n))), None)
            if identity is None:
                raise exceptions.ValidationException('no identity element')
        self._identity = int(identity)
        if inv is None:
            inv = []
            for g in range(n):
                h = next((h for h in range(n)
                          if self._rows[g][h] == self._identity), None)
                if h is None:
                    raise exceptions.InverseException(
                        'element {} has no inverse'.format(g), witness=g)
                inv.append(h)
        self._inv = [int(x) for x in inv]
        self._labels = list(labels) if labels else \
            [str(g) for g in range(n)]
        self._embedding = list(embedding) if embedding is not None else None
        if verify:
            self.validate()

    def validate(self):
        n = self._size
        if ((self._mul < 0) | (self._mul >= n)).any():
            raise exceptions.ValidationException('group table out of range')
        witness = _associativity_witness(self._mul)
        if witness:
            raise exceptions.NonAssociativeException(
                'group table is not associative', witness=witness)
        e = self._identity
        for g in range(n):
            if self._rows[e][g] != g or self._rows[g][e] != g:
                raise exceptions.ValidationException(
                    '{} is not an identity'.format(e), witness=(e, g))
            h = self._inv[g]
            if self._rows[g][h] != e or self._rows[h][g] != e:
                raise exceptions.InverseException(
                    'bad inverse of {}'.format(g), witness=g)

    @property
    def size(self):
        return self._size

    @property
    def identity(self):
        return self._identity

    @property
    def table(self):
        return self._rows

    @property
    def labels(self):
        return self._labels

    @property
    def embedding(self):
        """Semigroup element index of each group element, when embedded."""
        return self._embedding

    def __len__(self):
        return self._size

    def product(self, g, h):
        return self._rows[g][h]

    def inverse(self, g):
        return self._inv[g]

    def power(self, g, k):
        x = self._identity
        for _ in range(k):
            x = self._rows[x][g]
        return x

    def element_order(self, g):
        k, x = 1, g
        while x != self._identity:
            x = self._rows[x][g]
            k += 1
        return k

    def exponent(self):
        return int(numpy.lcm.reduce(
            [self.element_order(g) for g in range(self._size)]))

    def is_abelian(self):
        return (self._mul == self._mul.T).all()

    def generated(self, elements):
        """Subgroup generated by the given elements."""
        gens = list(elements) or [self._identity]
        return frozenset(w[0] for w in product_words(self._rows, gens)) | \
            frozenset([self._identity])

    def generators(self):
        """A small generating set of the group."""
        height = [self.element_order(g) for g in range(self._size)]
        return _greedy_generators(self._size, self._rows, height)

    def subgroups(self):
        """All subgroups, as frozensets, sorted by size then elements."""
        found = {frozenset([self._identity])}
        frontier = list(found)
        while frontier:
            h = frontier.pop()
            for g in range(self._size):
                if g in h:
                    continue
                k = self.generated(list(h) + [g])
                if k not in found:
                    found.add(k)
                    frontier.append(k)
        return sorted(found, key=lambda h: (len(h), sorted(h)))

    def conjugacy_classes(self):
        seen = set()
        classes = []
        for g in range(self._size):
            if g in seen:
                continue
            cls = frozenset(
                self._rows[self._rows[h][g]][self._inv[h]]
                for h in range(self._size))
            seen |= cls
            classes.append(sorted(cls))
        return classes

    def to_dict(self):
        return {
            'name': self.name,
            'size': self._size,
            'identity': self._identity,
            'labels': self._labels,
            'mul': self._rows,
        }


def groups_isomorphic(g1, g2, max_order=8):
    """Search for an isomorphism between two small groups.

    Brute force over bijections that respect element orders.

    Returns:
        The isomorphism as a list (g1 element -> g2 element), or None.
    """
    n = g1.size
    if n != g2.size:
        return None
    if n > max_order:
        raise exceptions.CapExceededException('group order {}'.format(n),
                                              max_order)
    orders1 = [g1.element_order(g) for g in range(n)]
    orders2 = [g2.element_order(g) for g in range(n)]
    if sorted(orders1) != sorted(orders2):
        return None
    rest1 = [g for g in range(n) if g != g1.identity]
    rest2 = [g for g in range(n) if g != g2.identity]
    for perm in itertools.permutations(rest2):
        phi = [None] * n
        phi[g1.identity] = g2.identity
        ok = True
        for a, b in zip(rest1, perm):
            if orders1[a] != orders2[b]:
                ok = False
                break
            phi[a] = b
        if not ok:
            continue
        if all(phi[g1.product(a, b)] == g2.product(phi[a], phi[b])
               for a in range(n) for b in range(n)):
            return phi
    return None


def _associativity_witness(mul):
    """First (i, j, k) with (ij)k != i(jk), or None."""
    n = mul.shape[0]
    for i in range(n):
        left = mul[mul[i]]
        right = mul[i][mul]
        bad = numpy.argwhere(left != right)
        if bad.size:
            j, k = bad[0]
            return (int(i), int(j), int(k))
    return None


class FiniteInverseSemigroup(entities.Entity):
    """A finite inverse semigroup on the element indices 0..size-1.

    The multiplication table is validated on construction: associativity,
    commuting idempotents, unique inverses and the natural order
    characterization are all checked exhaustively unless verify is False.
    Instances are immutable; derived data (idempotents, d, r, the natural
    order) is computed once.
    """

    def __init__(self, mul, inv=None, labels=None, name='S', verify=True,
                 generators=None, models=None):
        super(FiniteInverseSemigroup, self).__init__(name)
        table = numpy.asarray(mul, dtype=numpy.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] \
                or table.shape[0] == 0:
            raise exceptions.ValidationException(
                'multiplication table must be a non-empty square table')
        n = table.shape[0]
        if ((table < 0) | (table >= n)).any():
            bad = numpy.argwhere((table < 0) | (table >= n))[0]
            raise exceptions.ValidationException(
                'table entry out of range', witness=(int(bad[0]),
                                                     int(bad[1])))
        self._mul = table
        self._rows = table.tolist()
        self._size = n
        if labels is not None and len(labels) != n:
            raise exceptions.ValidationException(
                'expected {} labels, got {}'.format(n, len(labels)))
        self._labels = [str(x) for x in labels] if labels is not None \
            else [str(s) for s in range(n)]
        self._index = dict((l, s) for s, l in enumerate(self._labels))
        self._models = list(models) if models is not None else None

        if verify:
            witness = _associativity_witness(table)
            if witness:
                raise exceptions.NonAssociativeException(
                    'multiplication is not associative at {}'.format(witness),
                    witness=witness)

        diag = table[numpy.arange(n), numpy.arange(n)]
        self._idempotents = [int(e) for e in
                             numpy.nonzero(diag == numpy.arange(n))[0]]
        self._is_idempotent = [False] * n
        for e in self._idempotents:
            self._is_idempotent[e] = True

        if verify:
            self._check_idempotents_commute()

        if inv is None:
            self._inv = self._find_inverses()
        else:
            self._inv = [int(x) for x in inv]
            if len(self._inv) != n:
                raise exceptions.InverseException(
                    'expected {} inverses'.format(n))
            if verify:
                self._check_inverses()

        rows = self._rows
        self._d = [rows[self._inv[s]][s] for s in range(n)]
        self._r = [rows[s][self._inv[s]] for s in range(n)]

        zero = numpy.nonzero((table == numpy.arange(n)[:, None]).all(axis=1) &
                             (table == numpy.arange(n)[None, :]).all(axis=0))
        zero = [int(z) for z in zero[0]]
        self._zero = zero[0] if zero else None

        # leq[s][t] is True iff s <= t, that is s = t d(s).
        leq = table[:, self._d] == numpy.arange(n)[None, :]
        self._leq = leq.T.copy()
        if verify:
            self._check_natural_order()
        self._below = [frozenset(int(s) for s in numpy.nonzero(
            self._leq[:, t])[0]) for t in range(n)]
        self._above = [frozenset(int(t) for t in numpy.nonzero(
            self._leq[s])[0]) for s in range(n)]

        self._generators = sorted(set(int(g) for g in generators)) \
            if generators is not None else None
        self._green = None
        self._ideals = None

    # Validation.

    def _check_idempotents_commute(self):
        e = numpy.array(self._idempotents, dtype=numpy.int64)
        sub = self._mul[numpy.ix_(e, e)]
        bad = numpy.argwhere(sub != sub.T)
        if bad.size:
            a, b = int(e[bad[0][0]]), int(e[bad[0][1]])
            raise exceptions.NonCommutingIdempotentsException(
                'idempotents {} and {} do not commute'.format(
                    self._labels[a], self._labels[b]), witness=(a, b))

    def _find_inverses(self):
        n = self._size
        rows = self._mul
        ar = numpy.arange(n)
        inv = []
        for s in range(n):
            sts = rows[rows[s], s]
            tst = rows[rows[:, s], ar]
            cand = numpy.nonzero((sts == s) & (tst == ar))[0]
            if len(cand) != 1:
                raise exceptions.InverseException(
                    'element {} has {} generalized inverses'.format(
                        self._labels[s], len(cand)), witness=s)
            inv.append(int(cand[0]))
        return inv

    def _check_inverses(self):
        rows = self._rows
        for s in range(self._size):
            t = self._inv[s]
            if not 0 <= t < self._size or rows[rows[s][t]][s] != s \
                    or rows[rows[t][s]][t] != t:
                raise exceptions.InverseException(
                    'inv({}) is not an inverse'.format(self._labels[s]),
                    witness=s)

    def _check_natural_order(self):
        n = self._size
        by_idempotent = numpy.zeros((n, n), dtype=bool)
        for e in self._idempotents:
            # t e = s for some idempotent e
            by_idempotent[self._mul[:, e], numpy.arange(n)] = True
        bad = numpy.argwhere(by_idempotent != self._leq)
        if bad.size:
            s, t = int(bad[0][0]), int(bad[0][1])
            raise exceptions.ValidationException(
                'natural order characterizations disagree on {} <= {}'
                .format(self._labels[s], self._labels[t]), witness=(s, t))

    # Basic access.

    @property
    def size(self):
        return self._size

    def __len__(self):
        return self._size

    @property
    def table(self):
        """Multiplication table as nested lists."""
        return self._rows

    @property
    def array(self):
        """Multiplication table as a numpy array (read-only by convention)."""
        return self._mul

    @property
    def labels(self):
        return self._labels

    @property
    def models(self):
        """Concrete PartialPerm of each element, when built from one."""
        return self._models

    @property
    def zero(self):
        return self._zero

    @property
    def idempotents(self):
        return list(self._idempotents)

    @property
    def elements(self):
        return range(self._size)

    def label(self, s):
        return self._labels[s]

    def index(self, label):
        """Element index of a label (or of a PartialPerm model)."""
        if isinstance(label, PartialPerm):
            label = pp_format(label)
        try:
            return self._index[str(label)]
        except KeyError:
            raise exceptions.ParameterException(
                'No element labelled {} in {}'.format(label, self.name))

    def product(self, s, t):
        return self._rows[s][t]

    def inverse(self, s):
        return self._inv[s]

    @property
    def inverses(self):
        return list(self._inv)

    def d(self, s):
        return self._d[s]

    def r(self, s):
        return self._r[s]

    def is_idempotent(self, s):
        return self._is_idempotent[s]

    def natural_leq(self, s, t):
        return bool(self._leq[s][t])

    def below(self, t):
        """All s <= t."""
        return self._below[t]

    def above(self, s):
        """All t >= s."""
        return self._above[s]

    def require_idempotent(self, e):
        if not 0 <= e < self._size or not self._is_idempotent[e]:
            raise exceptions.ParameterException(
                '{} is not an idempotent'.format(
                    self._labels[e] if 0 <= e < self._size else e))

    # Set arithmetic.

    def set_product(self, a, b):
        rows = self._rows
        return frozenset(rows[x][y] for x in a for y in b)

    def set_inverse(self, a):
        return frozenset(self._inv[x] for x in a)

    def conjugate(self, s, a):
        """The set s A s^-1."""
        rows = self._rows
        si = self._inv[s]
        return frozenset(rows[rows[s][x]][si] for x in a)

    # Ideals and generators.

    def ideal(self, s):
        """The principal two-sided ideal SsS (which contains s)."""
        if self._ideals is None:
            self._ideals = [None] * self._size
        if self._ideals[s] is None:
            left = self._mul[:, s]
            self._ideals[s] = frozenset(
                int(x) for x in numpy.unique(self._mul[left]))
        return self._ideals[s]

    def j_leq(self, s, t):
        return s in self.ideal(t)

    @property
    def generators(self):
        """A semigroup generating set (computed greedily when not given)."""
        if self._generators is None:
            height = [len(self.ideal(s)) for s in range(self._size)]
            self._generators = _greedy_generators(
                self._size, self._rows, height)
        return list(self._generators)

    def generator_words(self):
        words = product_words(self._rows, self.generators)
        if len(words) != self._size:
            raise exceptions.ValidationException(
                'generators do not generate {}'.format(self.name))
        return words

    # Derived structure.

    def green_data(self):
        if self._green is None:
            self._green = GreenData(self)
        return self._green

    def is_group(self):
        return len(self._idempotents) == 1

    def to_dict(self):
        return {
            'name': self.name,
            'size': self._size,
            'mul': self._rows,
            'inv': self._inv,
            'labels': self._labels,
        }

    def canonical_json(self):
        """Content used to key cached results."""
        return entities.dumps({'size': self._size, 'mul': self._rows,
                               'inv': self._inv, 'labels': self._labels})


def _partition(keys):
    classes = {}
    for s, k in enumerate(keys):
        classes.setdefault(k, []).append(s)
    return sorted(classes.values())


class GreenData(object):
    """Green's relations of a finite inverse semigroup.

    Each relation is stored as a sorted list of classes (sorted lists of
    element indices) together with the class number of every element.
    """

    def __init__(self, semigroup):
        s = semigroup
        n = s.size
        self.d = [s.d(x) for x in range(n)]
        self.r = [s.r(x) for x in range(n)]
        self.L = _partition(self.d)
        self.R = _partition(self.r)
        self.H = _partition(list(zip(self.d, self.r)))

        # D as the composite L o R: x D y iff some a has d(a) = d(x) and
        # r(a) = r(y).
        pairs = set((s.d(a), s.r(a)) for a in range(n))
        d_class = [None] * n
        classes = []
        for x in range(n):
            if d_class[x] is not None:
                continue
            members = [y for y in range(n) if (self.d[x], self.r[y]) in pairs]
            for y in members:
                if d_class[y] is not None:
                    raise exceptions.ValidationException(
                        'L o R is not an equivalence', witness=(x, y))
                d_class[y] = len(classes)
            classes.append(members)
        self.D = sorted(classes)
        self.J = _partition([s.ideal(x) for x in range(n)])
        self._index = dict(
            (name, self._class_index(getattr(self, name)))
            for name in ('L', 'R', 'H', 'D', 'J'))
        self._semigroup = semigroup

    @staticmethod
    def _class_index(partition):
        index = {}
        for i, cls in enumerate(partition):
            for x in cls:
                index[x] = i
        return index

    def class_of(self, relation, x):
        """The class of x under 'L', 'R', 'H', 'D' or 'J'."""
        return self.__dict__[relation][self._index[relation][x]]

    def related(self, relation, x, y):
        return self._index[relation][x] == self._index[relation][y]

    def d_class_idempotents(self, x):
        s = self._semigroup
        return [e for e in self.class_of('D', x) if s.is_idempotent(e)]

    def representatives(self):
        """Minimum idempotent of every D-class, sorted."""
        s = self._semigroup
        return sorted(min(e for e in cls if s.is_idempotent(e))
                      for cls in self.D)

    def d_class_sizes(self):
        """(minimum idempotent, number of L-classes, group order) for every
        D-class; the L-class count is the size of each Schützenberger
        orbit."""
        s = self._semigroup
        result = []
        for cls in self.D:
            idempotents = [e for e in cls if s.is_idempotent(e)]
            result.append((min(idempotents), len(idempotents),
                           len(self.class_of('H', idempotents[0]))))
        return sorted(result)

    def check(self):
        """Verify H = L ∩ R, D ⊆ J and that L-classes refine D-classes."""
        n = self._semigroup.size
        for x in range(n):
            for y in range(n):
                lr = self.related('L', x, y) and self.related('R', x, y)
                if lr != self.related('H', x, y):
                    raise exceptions.ValidationException(
                        'H differs from L ∩ R', witness=(x, y))
                if self.related('D', x, y) and not self.related('J', x, y):
                    raise exceptions.ValidationException(
                        'D is not contained in J', witness=(x, y))
                if self.related('L', x, y) and not self.related('D', x, y):
                    raise exceptions.ValidationException(
                        'L does not refine D', witness=(x, y))
        return True

    def to_dict(self):
        s = self._semigroup
        return {
            'd_classes': [{
                'elements': cls,
                'idempotents': [e for e in cls if s.is_idempotent(e)],
                'group_order': len(self.class_of('H', cls[0])),
            } for cls in self.D],
        }


def d_of(semigroup, s):
    return semigroup.d(s)


def r_of(semigroup, s):
    return semigroup.r(s)


def natural_leq(semigroup, s, t):
    return semigroup.natural_leq(s, t)


def green_data(semigroup):
    return semigroup.green_data()


def semigroup_from_table(mul, inv=None, labels=None, name='S', verify=True):
    return FiniteInverseSemigroup(mul, inv=inv, labels=labels, name=name,
                                  verify=verify)


def semigroup_from_generators(gens, cap=DEFAULT_ELEMENT_CAP, name='S',
                              verify=True):
    """Close a list of partial permutations under product and inverse."""
    gens = [pp_parse(g) for g in gens]
    if not gens:
        raise exceptions.ParameterException('no generators given')
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise exceptions.ParameterException(
            'generators have different degrees')
    alphabet = sorted(set(gens) | set(pp_inverse(g) for g in gens))
    seen = set(alphabet)
    queue = list(alphabet)
    while queue:
        x = queue.pop()
        for g in alphabet:
            y = pp_compose(x, g)
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise exceptions.CapExceededException(
                        'semigroup size', cap)
                queue.append(y)
    elements = sorted(seen)
    index = dict((x, i) for i, x in enumerate(elements))
    logger.debug('closed %d generators to %d elements',
                 len(gens), len(elements))
    mul = [[index[pp_compose(x, y)] for y in elements] for x in elements]
    inv = [index[pp_inverse(x)] for x in elements]
    return FiniteInverseSemigroup(
        mul, inv=inv, labels=[pp_format(x) for x in elements], name=name,
        verify=verify, generators=[index[g] for g in alphabet],
        models=elements)


def maximal_subgroup(semigroup, e):
    """The H-class of the idempotent e as a group, embedded in S."""
    semigroup.require_idempotent(e)
    members = [s for s in range(semigroup.size)
               if semigroup.d(s) == e and semigroup.r(s) == e]
    index = dict((s, i) for i, s in enumerate(members))
    mul = [[index[semigroup.product(a, b)] for b in members] for a in members]
    return GroupTable(
        mul, identity=index[e],
        inv=[index[semigroup.inverse(a)] for a in members],
        labels=[semigroup.label(a) for a in members],
        embedding=members,
        name='G_{}'.format(semigroup.label(e)))


def sigma_classes(semigroup, subset=None):
    """Classes of the minimum group congruence, within an optional inverse
    subsemigroup: a σ b iff some c in the subset lies below both."""
    carrier = sorted(subset) if subset is not None \
        else list(range(semigroup.size))
    members = set(carrier)
    parent = dict((x, x) for x in carrier)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in carrier:
        ups = [t for t in semigroup.above(c) if t in members]
        for t in ups[1:]:
            a, b = find(ups[0]), find(t)
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes = {}
    for x in carrier:
        classes.setdefault(find(x), []).append(x)
    return sorted(classes.values())


def sigma_quotient(semigroup, subset=None):
    """The maximal group image S/σ (or T/σ for an inverse subsemigroup T).

    Returns:
        (GroupTable, projection) where projection maps each element of the
        carrier to its σ-class in the group.
    """
    classes = sigma_classes(semigroup, subset)
    projection = {}
    for i, cls in enumerate(classes):
        for x in cls:
            projection[x] = i
    k = len(classes)
    mul = [[None] * k for _ in range(k)]
    for a in projection:
        for b in projection:
            ab = semigroup.product(a, b)
            if ab not in projection:
                raise exceptions.ParameterException(
                    'subset is not closed under products')
            c = projection[ab]
            i, j = projection[a], projection[b]
            if mul[i][j] is None:
                mul[i][j] = c
            elif mul[i][j] != c:
                raise exceptions.ValidationException(
                    'σ is not a congruence', witness=(a, b))
    identity = projection[next(x for x in projection
                               if semigroup.is_idempotent(x))]
    group = GroupTable(mul, identity=identity,
                       labels=['{' + ','.join(semigroup.label(x)
                                              for x in cls) + '}'
                               for cls in classes],
                       name='{}/sigma'.format(semigroup.name))
    return group, projection


def schutzenberger_action(semigroup, e):
    """Action of S on the L-class L_e: a.x = ax whenever d(ax) = e."""
    from . import actions
    semigroup.require_idempotent(e)
    points = [x for x in range(semigroup.size) if semigroup.d(x) == e]
    index = dict((x, i) for i, x in enumerate(points))

    def act(a, i):
        y = semigroup.product(a, points[i])
        return index.get(y) if semigroup.d(y) == e else None

    return actions.TransitiveAction(
        semigroup, [semigroup.label(x) for x in points], act,
        name='L_{}'.format(semigroup.label(e)), base=index[e],
        keys=points)


def is_fully_closed(semigroup, carrier):
    """Whether a closed inverse subsemigroup equals the bar closure of its
    idempotents."""
    from . import order
    f = order.Filter(semigroup, [x for x in carrier
                                 if semigroup.is_idempotent(x)])
    return order.bar_closure(f).carrier == frozenset(carrier)


# Built-in families.

def inverse_symmetric(n, verify=False):
    """The symmetric inverse monoid I_n on n points (n <= 4)."""
    if not 1 <= n <= 4:
        raise exceptions.ParameterException(
            'inverse_symmetric takes 1 <= n <= 4, got {}'.format(n))
    gens = [pp_identity(n)]
    if n >= 2:
        gens.append(PartialPerm([2, 1] + list(range(3, n + 1))))
        gens.append(PartialPerm(list(range(2, n + 1)) + [1]))
    gens.append(PartialPerm([0] + list(range(2, n + 1))))
    return semigroup_from_generators(gens, name='I_{}'.format(n),
                                     verify=verify)


def chain(n):
    """The n-element chain semilattice 0 < 1 < ... < n-1."""
    if n < 1:
        raise exceptions.ParameterException('chain needs n >= 1')
    mul = [[min(i, j) for j in range(n)] for i in range(n)]
    return FiniteInverseSemigroup(mul, inv=list(range(n)),
                                  labels=[str(i) for i in range(n)],
                                  name='chain_{}'.format(n))


def cyclic_group(n):
    if n < 1:
        raise exceptions.ParameterException('cyclic group needs n >= 1')
    labels = ['e', 'a'] + ['a^{}'.format(k) for k in range(2, n)]
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable(mul, identity=0, inv=[(-i) % n for i in range(n)],
                      labels=labels[:n], name='C{}'.format(n))


def symmetric_group(n):
    if not 1 <= n <= 4:
        raise exceptions.ParameterException(
            'symmetric_group takes 1 <= n <= 4, got {}'.format(n))
    perms = sorted(PartialPerm(p) for p in
                   itertools.permutations(range(1, n + 1)))
    index = dict((p, i) for i, p in enumerate(perms))
    mul = [[index[pp_compose(p, q)] for q in perms] for p in perms]
    return GroupTable(mul, identity=index[pp_identity(n)],
                      inv=[index[pp_inverse(p)] for p in perms],
                      labels=[pp_format(p) for p in perms],
                      name='S{}'.format(n))


def parse_group(text):
    """A named small group: C1..C24 (cyclic) or S1..S4 (symmetric)."""
    text = str(text).strip().upper()
    try:
        k = int(text[1:])
    except ValueError:
        raise exceptions.ParameterException('Unknown group {}'.format(text))
    if text.startswith('C') and 1 <= k <= 24:
        return cyclic_group(k)
    if text.startswith('S'):
        return symmetric_group(k)
    raise exceptions.ParameterException('Unknown group {}'.format(text))


def group_semigroup(group):
    """A group viewed as an inverse semigroup."""
    return FiniteInverseSemigroup(group.table, inv=[
        group.inverse(g) for g in range(group.size)],
        labels=group.labels, name=group.name)


def brandt(group, n):
    """The Brandt semigroup B(G, n): triples (i, g, j) plus a zero."""
    if not 1 <= n <= 3:
        raise exceptions.ParameterException(
            'brandt takes 1 <= n <= 3, got {}'.format(n))
    triples = [(i, g, j) for i in range(n) for g in range(group.size)
               for j in range(n)]
    index = dict((t, k + 1) for k, t in enumerate(triples))
    size = len(triples) + 1
    mul = [[0] * size for _ in range(size)]
    for (i, g, j), a in index.items():
        for (k, h, l), b in index.items():
            if j == k:
                mul[a][b] = index[(i, group.product(g, h), l)]
    inv = [0] + [index[(j, group.inverse(g), i)] for (i, g, j) in triples]
    labels = ['0'] + ['({},{},{})'.format(i + 1, group.labels[g], j + 1)
                      for (i, g, j) in triples]
    return FiniteInverseSemigroup(mul, inv=inv, labels=labels,
                                  name='B({},{})'.format(group.name, n))


def adjoin_identity(semigroup, label='1'):
    """S with a new identity element adjoined at index 0."""
    n = semigroup.size
    mul = [[0] + [s + 1 for s in range(n)]]
    for a in range(n):
        mul.append([a + 1] + [semigroup.product(a, b) + 1 for b in range(n)])
    inv = [0] + [semigroup.inverse(a) + 1 for a in range(n)]
    return FiniteInverseSemigroup(
        mul, inv=inv, labels=[label] + semigroup.labels,
        name='{}^1'.format(semigroup.name))
