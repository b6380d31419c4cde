import random
from fractions import Fraction

from cartanlab.linalg import (
    as_matrix,
    det,
    identity,
    invert,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
)
from cartanlab.scalars import ONE, ZERO, Scalar


def _rand_matrix(r, n, m):
    return as_matrix(
        [[Fraction(r.randint(-5, 5), r.randint(1, 4)) for _ in range(m)] for _ in range(n)]
    )


def test_rref_canonical():
    a = as_matrix([[2, 4], [1, 2]])
    red, pivots = rref(a)
    assert red == as_matrix([[1, 2]])
    assert pivots == (0,)
    b = as_matrix([[1, 2], [3, 7]])
    red_b, _ = rref(b)
    assert red_b == identity(2)


def test_rank_and_nullspace():
    a = as_matrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(a) == 2
    basis = nullspace(a)
    assert len(basis) == 1
    for v in basis:
        assert all(x == ZERO for x in mat_vec(a, v))


def test_nullspace_empty_system():
    assert len(nullspace([], ncols=3)) == 3


def test_det_and_invert():
    r = random.Random(0)
    for _ in range(10):
        a = _rand_matrix(r, 4, 4)
        d = det(a)
        if d == ZERO:
            continue
        inv = invert(a)
        assert mat_mul(a, inv) == identity(4)


def test_det_singular():
    a = as_matrix([[1, 2], [2, 4]])
    assert det(a) == ZERO


def test_solve():
    a = as_matrix([[1, 1], [1, -1]])
    x = solve(a, [Scalar(3), Scalar(1)])
    assert x == (Scalar(2), ONE)
    inconsistent = as_matrix([[1, 1], [1, 1]])
    assert solve(inconsistent, [Scalar(1), Scalar(2)]) is None


def test_rref_row_space_invariance():
    r = random.Random(1)
    for _ in range(10):
        a = _rand_matrix(r, 3, 5)
        # mixing rows does not change the canonical form
        mixed = [
            tuple(x + y for x, y in zip(a[0], a[1])),
            a[1],
            tuple(x - y for x, y in zip(a[2], a[0])),
        ]
        assert rref(a + tuple([mixed[0]]))[0] == rref(list(a) + list(mixed))[0]
