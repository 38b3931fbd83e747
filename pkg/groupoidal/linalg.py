# Copyright (C) 2026 The groupoidal developers.
#
# Dense exact linear algebra over a fields.Field.
#
# Matrices are lists of rows, vectors are lists, and matrices act on column
# vectors from the left. Subspaces are given by lists of independent vectors.

from . import exceptions


def zeros(rows, cols, field):
    return [[field.zero] * cols for _ in range(rows)]


def identity(n, field):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def transpose(a, cols=None):
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(col) for col in zip(*a)]


def coerce_matrix(a, field):
    return [[field.coerce(x) for x in row] for row in a]


def mat_mul(a, b, field):
    if not a:
        return []
    inner = len(b)
    if inner == 0:
        return [[] for _ in a]
    bt = transpose(b)
    reduce_ = field.reduce
    zero = field.zero
    return [[reduce_(sum((x * y for x, y in zip(row, col) if x and y), zero))
             for col in bt] for row in a]


def mat_vec(a, v, field):
    reduce_ = field.reduce
    zero = field.zero
    return [reduce_(sum((x * y for x, y in zip(row, v) if x and y), zero))
            for row in a]


def mat_add(a, b, field):
    return [[field.reduce(x + y) for x, y in zip(ra, rb)]
            for ra, rb in zip(a, b)]


def mat_sub(a, b, field):
    return [[field.reduce(x - y) for x, y in zip(ra, rb)]
            for ra, rb in zip(a, b)]


def mat_scale(c, a, field):
    return [[field.reduce(c * x) for x in row] for row in a]


def trace(a, field):
    return field.reduce(sum((a[i][i] for i in range(len(a))), field.zero))


def is_zero(a):
    return all(x == 0 for row in a for x in row)


def rref(a, field, ncols=None):
    """Reduced row echelon form of a copy of a.

    Returns:
        (rows, pivots) where pivots lists the pivot column of each nonzero
        row, in order.
    """
    m = [list(row) for row in a]
    cols = ncols if ncols is not None else (len(m[0]) if m else 0)
    pivots = []
    r = 0
    for c in range(cols):
        if r >= len(m):
            break
        p = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.reduce(x * inv) for x in m[r]]
        pivot_row = m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [field.reduce(x - f * y)
                        for x, y in zip(m[i], pivot_row)]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a, field):
    return len(rref(a, field)[1])


def nullspace(a, field, ncols=None):
    """Basis of {x : a x = 0}."""
    cols = ncols if ncols is not None else (len(a[0]) if a else 0)
    r, pivots = rref(a, field, cols)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [field.zero] * cols
        x[f] = field.one
        for i, p in enumerate(pivots):
            x[p] = field.neg(r[i][f])
        basis.append(x)
    return basis


def inverse(a, field):
    n = len(a)
    aug = [list(row) + e for row, e in zip(a, identity(n, field))]
    r, pivots = rref(aug, field, n)
    if pivots != list(range(n)):
        raise exceptions.ParameterException('matrix is singular')
    return [row[n:] for row in r]


def determinant(a, field):
    m = [list(row) for row in a]
    n = len(m)
    det = field.one
    for c in range(n):
        p = None
        for i in range(c, n):
            if m[i][c] != 0:
                p = i
                break
        if p is None:
            return field.zero
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = field.neg(det)
        det = field.reduce(det * m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = field.reduce(m[i][c] * inv)
                m[i] = [field.reduce(x - f * y) for x, y in zip(m[i], m[c])]
    return det


def echelon_basis(vectors, field, n=None):
    """Reduced echelon basis of the span of the given vectors."""
    r, pivots = rref(vectors, field, n)
    return r[:len(pivots)]


def dimension(vectors, field, n=None):
    if not vectors:
        return 0
    return len(rref(vectors, field, n)[1])


def coordinates(basis, vectors, field):
    """Coordinates of each vector in terms of an independent basis.

    Raises:
        ParameterException: a vector does not lie in the span of the basis.
    """
    k = len(basis)
    if not vectors:
        return []
    n = len(vectors[0])
    if k == 0:
        if any(any(x != 0 for x in v) for v in vectors):
            raise exceptions.ParameterException('vector outside of span')
        return [[] for _ in vectors]
    aug = [[basis[j][i] for j in range(k)] + [v[i] for v in vectors]
           for i in range(n)]
    r, pivots = rref(aug, field, k)
    if pivots != list(range(k)):
        raise exceptions.ParameterException('basis is not independent')
    for row in r[k:]:
        if any(x != 0 for x in row[k:]):
            raise exceptions.ParameterException('vector outside of span')
    return [[r[i][k + j] for i in range(k)] for j in range(len(vectors))]


def contains(basis, v, field):
    try:
        coordinates(basis, [v], field)
        return True
    except exceptions.ParameterException:
        return False


def complete_basis(basis, n, field):
    """Extend independent vectors to a basis of field^n with unit vectors."""
    _, pivots = rref(basis, field, n) if basis else ([], [])
    result = [list(v) for v in basis]
    taken = set(pivots)
    for c in range(n):
        if c not in taken:
            e = [field.zero] * n
            e[c] = field.one
            result.append(e)
    return result


def intersection(u, w, field, n):
    """Basis of span(u) ∩ span(w)."""
    if not u or not w:
        return []
    system = [[u[j][i] for j in range(len(u))] +
              [field.neg(w[j][i]) for j in range(len(w))] for i in range(n)]
    result = []
    for sol in nullspace(system, field, len(u) + len(w)):
        v = [field.zero] * n
        for j in range(len(u)):
            if sol[j] != 0:
                v = [field.reduce(x + sol[j] * y) for x, y in zip(v, u[j])]
        result.append(v)
    return echelon_basis(result, field, n) if result else []


def spin(seeds, generators, field, n):
    """Smallest subspace containing the seeds and invariant under the
    generators.

    Returns:
        An independent list of vectors, in the order they were discovered.
    """
    echelon = {}
    basis = []

    def _add(v):
        v = list(v)
        for c, row in echelon.items():
            if v[c] != 0:
                f = v[c]
                v = [field.reduce(x - f * y) for x, y in zip(v, row)]
        lead = next((i for i, x in enumerate(v) if x != 0), None)
        if lead is None:
            return False
        inv = field.inv(v[lead])
        v = [field.reduce(x * inv) for x in v]
        for c in list(echelon):
            row = echelon[c]
            if row[lead] != 0:
                f = row[lead]
                echelon[c] = [field.reduce(x - f * y) for x, y in zip(row, v)]
        echelon[lead] = v
        return True

    queue = []
    for s in seeds:
        if _add(s):
            basis.append(list(s))
            queue.append(list(s))
    while queue and len(basis) < n:
        v = queue.pop(0)
        for g in generators:
            w = mat_vec(g, v, field)
            if _add(w):
                basis.append(w)
                queue.append(w)
                if len(basis) == n:
                    break
    return basis


def restrict(basis, matrices, field):
    """Matrices of the action on an invariant subspace, in the given basis."""
    result = []
    for m in matrices:
        images = [mat_vec(m, b, field) for b in basis]
        coords = coordinates(basis, images, field)
        result.append(transpose(coords, len(basis)))
    return result


def split(basis, matrices, field, n):
    """Block decomposition along an invariant subspace.

    Returns:
        (sub, quotient) matrix lists for the action on the subspace and on
        the quotient space.
    """
    k = len(basis)
    full = complete_basis(basis, n, field)
    p = transpose(full, n)
    p_inv = inverse(p, field)
    sub, quo = [], []
    for m in matrices:
        c = mat_mul(p_inv, mat_mul(m, p, field), field)
        sub.append([row[:k] for row in c[:k]])
        quo.append([row[k:] for row in c[k:]])
    return sub, quo
