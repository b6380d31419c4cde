import pytest

from cartanlab import catalog as cat
from cartanlab.forms import cartan_class
from cartanlab.liealg import LieAlgebra, LinearMap
from cartanlab.linalg import mat_mul, mat_sub
from cartanlab.randgen import random_covector, rng
from cartanlab.scalars import ONE, ZERO, Scalar
from cartanlab.structure import (
    PreconditionError,
    bracket_compatible_dimension,
    bracket_compatible_endomorphisms,
    center,
    diagonal_derivations,
    is_derivation,
    jacobi_check,
    lower_central_series,
)


def test_jacobi_heisenberg_and_model():
    assert jacobi_check(cat.heisenberg(2).algebra).ok
    assert jacobi_check(cat.frobenius_model(3, [2, -3]).algebra).ok


def test_jacobi_witness():
    bad = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    res = jacobi_check(bad)
    assert not res.ok
    i, j, k, defect = res.witness
    assert (i, j, k) == (1, 2, 3)
    # cyclic sum is [[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = -X3
    assert defect.comps == (ZERO, ZERO, -ONE)


def test_center_examples():
    h7 = cat.heisenberg(3).algebra
    z = center(h7)
    assert z.dim == 1 and z.contains(h7.basis_vector(7))

    ab = cat.abelian(4).algebra
    assert center(ab).dim == 4

    assert center(cat.dim3("sl2").algebra).dim == 0


def test_center_requires_jacobi():
    bad = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    with pytest.raises(PreconditionError):
        center(bad)


def test_lower_central_series():
    for p in (1, 2, 3):
        s = lower_central_series(cat.heisenberg(p).algebra)
        assert s.nilindex == 2

    mu = cat.mu_c9([1, 2, 3]).algebra
    s = lower_central_series(mu)
    assert s.nilindex == 8 and s.filiform(mu)

    sl2 = cat.dim3("sl2").algebra
    s = lower_central_series(sl2)
    assert s.nilindex is None and not s.nilpotent

    L5 = cat.filiform_model(5).algebra
    s5 = lower_central_series(L5)
    assert s5.nilindex == 4 and s5.filiform(L5)


def test_is_derivation():
    h3 = cat.heisenberg(1).algebra
    assert is_derivation(LinearMap.from_diagonal(h3, [5, -5, 0]), h3)
    assert not is_derivation(LinearMap.from_diagonal(h3, [1, 1, 1]), h3)
    ab = cat.abelian(3).algebra
    assert is_derivation(LinearMap.from_diagonal(ab, [1, 1, 1]), ab)


def test_diagonal_derivation_pairing():
    # any diagonal derivation of h_{2p+1} vanishing on the center pairs
    # opposite eigenvalues on each bracket pair
    for p in (1, 2, 3):
        g = cat.heisenberg(p).algebra
        for rho in diagonal_derivations(g):
            if rho[2 * p]:
                continue
            for k in range(p):
                assert rho[2 * k] + rho[2 * k + 1] == ZERO


def test_bracket_compatible_dimension():
    for p in (1, 2, 3):
        assert bracket_compatible_dimension(p) == p * (2 * p + 1)


def test_bracket_compatible_closure():
    basis = bracket_compatible_endomorphisms(2)
    m = 4
    j = [[ZERO] * m for _ in range(m)]
    for k in range(2):
        j[2 * k][2 * k + 1] = ONE
        j[2 * k + 1][2 * k] = -ONE

    def in_space(mat):
        ft = tuple(tuple(mat[r][c] for r in range(m)) for c in range(m))
        lhs = mat_mul(ft, j)
        rhs = mat_mul(j, mat)
        return all(
            lhs[a][b] + rhs[a][b] == ZERO for a in range(m) for b in range(m)
        )

    for f in basis:
        assert in_space(f)
    comm = mat_sub(mat_mul(basis[0], basis[1]), mat_mul(basis[1], basis[0]))
    assert in_space(comm)


def test_central_vectors_in_characteristic_space():
    r = rng(12)
    for entry in (cat.heisenberg(2), cat.filiform_model(6), cat.mu_c9([1, 2, 3])):
        g = entry.algebra
        z = center(g)
        for _ in range(10):
            w = random_covector(g, r)
            info = cartan_class(w)
            for v in z.vectors():
                if w.pair(v) == ZERO:
                    assert info.characteristic_space.contains(v)


def test_frobenius_entries_have_trivial_center():
    for entry in (
        cat.frobenius_model(2, [Scalar(1)]),
        cat.frobenius_model(3, [1, -2]),
        cat.frobenius_base(3),
    ):
        assert center(entry.algebra).dim == 0
