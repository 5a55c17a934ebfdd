"""Exact linear algebra over the rationals.

All routines use deterministic pivoting (first nonzero entry, scanning
rows top to bottom and columns left to right), so results are
reproducible bit for bit.  ``solve`` and ``express`` accept right-hand
sides whose entries live in any commutative ring with a Fraction
action; divisions only ever happen by pivot entries of the coefficient
matrix, which are plain Fractions.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def identity_matrix(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    k = len(b)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = None
            for t in range(k):
                x = a[i][t]
                y = b[t][j]
                if not x or not y:
                    continue
                acc = x * y if acc is None else acc + x * y
            row.append(ZERO if acc is None else acc)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if not x or not y:
                continue
            acc = x * y if acc is None else acc + x * y
        out.append(ZERO if acc is None else acc)
    return out


def transpose(m):
    return [list(col) for col in zip(*m)]


def rref(m):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    rows = [list(r) for r in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m):
    if not m:
        return 0
    return len(rref(m)[1])


def kernel(m, ncols=None):
    """Basis of the right nullspace of m, one vector per free column.

    ``ncols`` is only needed when m has no rows.
    """
    if not m:
        if ncols is None:
            raise ValueError("kernel of an empty matrix needs ncols")
        return [[ONE if i == j else ZERO for j in range(ncols)]
                for i in range(ncols)]
    rows, pivots = rref(m)
    width = len(m[0])
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * width
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -rows[r][f]
        basis.append(v)
    return basis


def solve(m, b, zero=ZERO):
    """One solution of m @ x = b, or None if the system is inconsistent.

    Free variables are set to ``zero``, which also fixes the ring the
    solution lives in when b has non-Fraction entries.
    """
    rows = [list(r) for r in m]
    rhs = list(b)
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    piv = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        rhs[r], rhs[pr] = rhs[pr], rhs[r]
        for i in range(r + 1, nrows):
            if rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
                rhs[i] = rhs[i] - f * rhs[r]
        piv.append((r, c))
        r += 1
    for i in range(r, nrows):
        if rhs[i]:
            return None
    sol = [zero] * ncols
    for pr, pc in reversed(piv):
        acc = rhs[pr]
        for c in range(pc + 1, ncols):
            if rows[pr][c] and sol[c]:
                acc = acc - rows[pr][c] * sol[c]
        sol[pc] = acc * (ONE / rows[pr][pc])
    return sol


def invert(m):
    n = len(m)
    aug = [list(row) + list(idrow) for row, idrow in zip(m, identity_matrix(n))]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in rows]


def independent(vectors):
    return rank(list(vectors)) == len(list(vectors))


def express(basis_vectors, target, zero=ZERO):
    """Coordinates of target in the given spanning family, or None.

    Solves the column system; with a dependent family the first
    consistent coordinate vector (free variables zero) is returned.
    """
    basis_vectors = list(basis_vectors)
    if not basis_vectors:
        return [] if not any(target) else None
    m = [[v[i] for v in basis_vectors] for i in range(len(basis_vectors[0]))]
    return solve(m, target, zero=zero)


def span_rank(vectors):
    vectors = list(vectors)
    return rank(vectors) if vectors else 0


def span_contains(vectors, v):
    vectors = list(vectors)
    return span_rank(vectors) == span_rank(vectors + [list(v)])


def span_equal(a, b):
    a, b = list(a), list(b)
    ra, rb = span_rank(a), span_rank(b)
    return ra == rb == span_rank(a + b)


def extend_with_standard(vectors, dim):
    """Indices of standard basis vectors that complete the family to a
    basis of the ambient space, chosen greedily in index order."""
    current = [list(v) for v in vectors]
    r = span_rank(current)
    added = []
    for i in range(dim):
        if r == dim:
            break
        e = [ZERO] * dim
        e[i] = ONE
        if span_rank(current + [e]) > r:
            current.append(e)
            added.append(i)
            r += 1
    if r != dim:
        raise ValueError("family does not extend to a basis")
    return added
