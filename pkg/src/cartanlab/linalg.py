"""Dense exact linear algebra over the Gaussian rationals.

Matrices are tuples of tuples of Scalar (row major).  Everything is small
(dimensions rarely above 64), so plain Gauss-Jordan elimination with exact
pivoting is the right tool.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar


def as_matrix(rows):
    return tuple(tuple(Scalar.of(x) for x in row) for row in rows)


def zeros(nrows, ncols):
    return tuple(tuple(ZERO for _ in range(ncols)) for _ in range(nrows))


def identity(n):
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, s):
    s = Scalar.of(s)
    return tuple(tuple(x * s for x in row) for row in a)


def mat_mul(a, b):
    n, m = len(a), len(b[0])
    k = len(b)
    bt = transpose(b)
    return tuple(
        tuple(
            sum((a[i][l] * bt[j][l] for l in range(k)), ZERO)
            for j in range(m)
        )
        for i in range(n)
    )


def mat_vec(a, v):
    return tuple(sum((row[j] * v[j] for j in range(len(v))), ZERO) for row in a)


def transpose(a):
    return tuple(tuple(row[j] for row in a) for j in range(len(a[0])))


def trace(a):
    return sum((a[i][i] for i in range(len(a))), ZERO)


def rref(rows):
    """Reduced row echelon form; returns (rref rows, pivot column list).

    Zero rows are dropped, so the output is a canonical basis of the row
    space: two row sets span the same space iff their rrefs are equal.
    """
    m = [list(row) for row in rows]
    if not m:
        return (), ()
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    reduced = tuple(tuple(row) for row in m[:r])
    return reduced, tuple(pivots)


def rank(rows):
    return len(rref(rows)[0])


def nullspace(rows, ncols=None):
    """Canonical basis of {x : A x = 0}, one vector per free column."""
    if not rows:
        if ncols is None:
            raise ValueError("nullspace of an empty system needs ncols")
        return [tuple(ONE if j == k else ZERO for j in range(ncols)) for k in range(ncols)]
    ncols = len(rows[0]) if ncols is None else ncols
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r][f]
        basis.append(tuple(v))
    return basis


def det(rows):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [list(row) for row in rows]
    n = len(m)
    sign = ONE
    out = ONE
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            return ZERO
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        p = m[c][c]
        out = out * p
        inv = ONE / p
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out * sign


def solve(a, b):
    """Solve A x = b exactly; returns None when inconsistent."""
    n = len(a)
    ncols = len(a[0])
    aug = [list(a[i]) + [Scalar.of(b[i])] for i in range(n)]
    red, pivots = rref(aug)
    for row in red:
        if all(not x for x in row[:ncols]) and row[ncols]:
            return None
    x = [ZERO] * ncols
    for r, p in enumerate(pivots):
        if p == ncols:
            return None
        x[p] = red[r][ncols]
    return tuple(x)


def invert(a):
    n = len(a)
    aug = [list(a[i]) + list(identity(n)[i]) for i in range(n)]
    red, pivots = rref(aug)
    if tuple(pivots[:n]) != tuple(range(n)) or len(red) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(red[i][n:]) for i in range(n))
