from itertools import combinations_with_replacement

import pytest

from cartanlab import catalog as cat
from cartanlab.deformation import (
    BilinearMap,
    DeformationSpec,
    DegenerateFormError,
    NotCocycleError,
    assemble,
    bilinear_from_endomorphism,
    bullet_power,
    bullet_product,
    central_extension,
    central_quotient,
    check_quadratic_deformation,
    circle_product,
    coboundary_of_bilinear,
    coboundary_of_map,
    deformation_from_classical_basis,
    endomorphism_of,
    normalize_linear_deformation,
)
from cartanlab.forms import DualForm, cartan_class, ce_differential, wedge_power
from cartanlab.liealg import LieAlgebra, LinearMap
from cartanlab.poly import Poly
from cartanlab.randgen import rng
from cartanlab.scalars import ONE, ZERO, Scalar
from cartanlab.structure import jacobi_check, lower_central_series


def test_circle_product_examples():
    h3 = cat.heisenberg(1).algebra
    mu = BilinearMap.of_algebra(h3)
    assert circle_product(mu, mu).is_zero

    phi = BilinearMap.from_brackets(h3, {(1, 2): {1: 1}})
    assert circle_product(phi, phi).at(1, 2, 3) == (ZERO, ZERO, ZERO)

    zero = BilinearMap.zero(h3)
    assert circle_product(zero, mu).is_zero


def test_circle_detects_jacobi():
    bad = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    mu = BilinearMap.of_algebra(bad)
    assert not circle_product(mu, mu).is_zero


def test_bullet_examples():
    h3 = cat.heisenberg(1).algebra
    mu = BilinearMap.of_algebra(h3)
    assert bullet_product(mu, mu).is_zero
    assert not bullet_power(mu, 2)

    L5 = cat.filiform_model(5).algebra
    muL = BilinearMap.of_algebra(L5)
    val = bullet_product(muL, muL).at(1, 2, 1)  # mu(mu(e0, e1), e0) = -e3
    assert val == (ZERO, ZERO, ZERO, -ONE, ZERO)
    assert bullet_power(muL, 3) and not bullet_power(muL, 4)

    assert bullet_product(BilinearMap.zero(h3), mu).is_zero


def test_coboundary_of_inner_map():
    for entry in (cat.dim3("sl2"), cat.heisenberg(2)):
        g = entry.algebra
        ad3 = LinearMap.adjoint(g, g.dim)
        assert coboundary_of_bilinear(coboundary_of_map(ad3, g), g).is_zero


def test_coboundary_diagonal_display():
    h5 = cat.heisenberg(2).algebra
    f = ((1, 0, 0, 0), (0, -1, 0, 0), (0, 0, 3, 0), (0, 0, 0, -3))
    phi2 = bilinear_from_endomorphism(h5, f)
    d = coboundary_of_bilinear(phi2, h5)
    # d phi2(X1, X2, X_l) = -rho_l X_l for l outside the pair
    assert d.at(1, 2, 3) == (ZERO, ZERO, Scalar(-3), ZERO, ZERO)
    assert d.at(1, 2, 4) == (ZERO, ZERO, ZERO, Scalar(3), ZERO)
    assert d.at(3, 4, 1) == (-ONE, ZERO, ZERO, ZERO, ZERO)


def test_coboundary_of_zero():
    h3 = cat.heisenberg(1).algebra
    assert coboundary_of_bilinear(BilinearMap.zero(h3), h3).is_zero


def test_coboundary_squared_random_maps():
    r = rng(13)
    for entry in (cat.heisenberg(2), cat.dim3("so3"), cat.filiform_model(5)):
        g = entry.algebra
        for _ in range(5):
            rows = [[r.randint(-3, 3) for _ in range(g.dim)] for _ in range(g.dim)]
            lm = LinearMap(g, rows)
            assert coboundary_of_bilinear(coboundary_of_map(lm, g), g).is_zero


def test_quadratic_check_positive_cases():
    # phi1 = 0, phi2 from split diagonal f: the rank-1 simple algebra
    sl2 = cat.dim3("sl2")
    res = check_quadratic_deformation(sl2.deformation)
    assert res.ok
    assembled = assemble(sl2.deformation)
    assert assembled.same_constants(sl2.algebra)
    assert assembled.constant(1, 3, 1) == ONE and assembled.constant(2, 3, 2) == -ONE

    # phi1(X1,X2) = X1 with nilpotent f
    solv = cat.dim3("solvable_b")
    assert check_quadratic_deformation(solv.deformation).ok
    assert assemble(solv.deformation).same_constants(solv.algebra)


def test_quadratic_check_negative_case_fails_equation_three():
    h3 = cat.heisenberg(1).algebra
    spec = DeformationSpec(
        h3,
        BilinearMap.from_brackets(h3, {(1, 2): {1: 1}}),
        bilinear_from_endomorphism(h3, ((1, 0), (0, -1))),
    )
    res = check_quadratic_deformation(spec)
    assert not res.ok
    assert res.failing_equations() == (3,)


def test_quadratic_check_requires_two_step_base():
    L5 = cat.filiform_model(5).algebra
    spec = DeformationSpec(L5, BilinearMap.zero(L5), BilinearMap.zero(L5))
    from cartanlab.structure import PreconditionError

    with pytest.raises(PreconditionError):
        check_quadratic_deformation(spec)


def test_quadra_ok_implies_assembled_jacobi_grid_search():
    h3 = cat.heisenberg(1).algebra
    values = [Scalar(-1), ZERO, ONE]
    passing = 0
    for a in values:
        for b in values:
            phi1 = BilinearMap.from_brackets(h3, {(1, 2): {1: a, 2: b}})
            for fa in values:
                for fb in values:
                    f = ((fa, fb), (ZERO, -fa))
                    spec = DeformationSpec(h3, phi1, bilinear_from_endomorphism(h3, f))
                    if check_quadratic_deformation(spec).ok:
                        passing += 1
                        assert jacobi_check(assemble(spec)).ok
    assert passing > 0


def test_endomorphism_round_trip():
    h5 = cat.heisenberg(2).algebra
    f = ((1, 2, 0, 0), (3, -1, 0, 0), (0, 0, 0, 5), (0, 0, -5, 0))
    phi2 = bilinear_from_endomorphism(h5, f)
    back = endomorphism_of(phi2)
    assert back == tuple(tuple(Scalar.of(x) for x in row) for row in f)


def test_normalize_linear_deformation():
    h5 = cat.heisenberg(2).algebra
    phi1 = BilinearMap.from_brackets(
        h5, {(1, 2): {1: 1}, (1, 5): {5: 2}, (3, 5): {5: -1}}
    )
    adjusted, f = normalize_linear_deformation(h5, phi1)
    for i in range(1, 5):
        assert adjusted.at(i, 5) == (ZERO,) * 5
    # subtracting a coboundary keeps the horizontal part untouched on h
    assert adjusted.at(1, 2)[0] == ONE


def test_central_extension_base_cases():
    ab2 = cat.abelian(2).algebra
    h3 = central_extension(ab2, DualForm(ab2, 2, {(1, 2): 1}))
    assert h3.same_constants(cat.heisenberg(1).algebra)

    ab4 = cat.abelian(4).algebra
    theta = DualForm(ab4, 2, {(1, 2): 1, (3, 4): 1})
    h5 = central_extension(ab4, theta)
    assert h5.same_constants(cat.heisenberg(2).algebra)
    assert cartan_class(DualForm.basis(h5, 5)).value == 5


def test_central_extension_errors():
    ab4 = cat.abelian(4).algebra
    with pytest.raises(DegenerateFormError):
        central_extension(ab4, DualForm(ab4, 2, {(1, 2): 1}))
    # a non-closed 2-form on a nonabelian base
    frob = cat.frobenius_model(2, [1]).algebra
    bad = DualForm(frob, 2, {(3, 4): 1})
    assert not ce_differential(bad).is_zero
    with pytest.raises(NotCocycleError):
        central_extension(frob, bad)


def test_central_extension_round_trips():
    for entry in (cat.heisenberg(1), cat.heisenberg(2), cat.mu_c9([1, 2, 3])):
        g = entry.algebra
        k, theta = central_quotient(g)
        assert central_extension(k, theta).same_constants(g)


def test_extension_class_parity_and_nilindex_shift():
    # extension by a symplectic form always has contact class dim(k) + 1
    mu = cat.mu_c9([1, 2, 3]).algebra
    k, theta = central_quotient(mu)
    assert ce_differential(theta).is_zero
    assert not wedge_power(theta, 4).is_zero
    ext = central_extension(k, theta)
    assert cartan_class(DualForm.basis(ext, ext.dim)).value == k.dim + 1
    # nilindex increments for the filiform family
    assert lower_central_series(k).nilindex == 7
    assert lower_central_series(ext).nilindex == 8

    ab4 = cat.abelian(4).algebra
    theta4 = DualForm(ab4, 2, {(1, 2): 1, (3, 4): 1})
    assert cartan_class(DualForm.basis(central_extension(ab4, theta4), 5)).value == 5


def test_deformation_from_classical_basis():
    for kind in ("solvable1", "solvable_b", "sl2"):
        entry = cat.dim3(kind)
        spec = deformation_from_classical_basis(entry.algebra)
        assert check_quadratic_deformation(spec).ok
        assert assemble(spec).same_constants(entry.algebra)


# -- the diagonal-eigenvalue search -------------------------------------------
#
# For a nonsingular diagonal endomorphism with eigenvalue pairs
# (l_1, -l_1, ..., l_p, -l_p), the quadratic-deformation system forces a
# web of relations on the cochain coefficients: a coefficient A_ij^k may be
# nonzero only when rho_i + rho_j = rho_k, and the second compatibility
# equation prescribes the value of single products of them.  The search
# below certifies, over the whole positive non-increasing integer grid up
# to 6, that these prescriptions always collide: either a required
# component is unreachable, or the same product is forced to two different
# values (the collision sits at the (X1, X2, X_l) components).  So the
# arithmetic-progression eigenvalue relations are necessary conditions on
# an empty set, and realizable diagonal cases all have a singular diagonal
# part, as in every dimension-5 family.


def _diagonal_profile_verdict(lam):
    p = len(lam)
    m = 2 * p
    rho = []
    for l in lam:
        rho.extend([Scalar(l), Scalar(-l)])
    pairing = [[ZERO] * m for _ in range(m)]
    for k in range(p):
        pairing[2 * k][2 * k + 1] = ONE
        pairing[2 * k + 1][2 * k] = -ONE
    allowed = [
        (i, j, k)
        for i in range(m)
        for j in range(i + 1, m)
        for k in range(m)
        if rho[i] + rho[j] == rho[k]
    ]
    names = tuple(f"A_{i}_{j}_{k}" for (i, j, k) in allowed) or ("_none",)
    allowed_set = set(allowed)

    def phi1(i, j):
        sign = 1
        if i > j:
            i, j, sign = j, i, -1
        out = {}
        for k in range(m):
            if (i, j, k) in allowed_set:
                v = Poly.variable(names, f"A_{i}_{j}_{k}")
                out[k] = v if sign > 0 else -v
        return out

    forced = {}
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                comp = [Poly.zero(names) for _ in range(m)]
                for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                    for mid, pv in phi1(x, y).items():
                        for tgt, qv in phi1(mid, z).items():
                            comp[tgt] = comp[tgt] + pv * qv
                const = [ZERO] * m
                for (x, y, z) in ((a, b, c), (b, c, a), (c, a, b)):
                    if pairing[x][y]:
                        const[z] = const[z] - pairing[x][y] * rho[z]
                for tgt in range(m):
                    poly, cval = comp[tgt], const[tgt]
                    if poly.is_zero and cval != ZERO:
                        return "unreachable"
                    if len(poly.terms) == 1 and cval != ZERO:
                        (expo, coeff), = poly.terms.items()
                        val = (-cval) / coeff
                        if expo in forced and forced[expo] != val:
                            return "conflict"
                        forced[expo] = val
    return "undecided"


def test_nonsingular_diagonal_profiles_are_infeasible():
    for p in (2, 3):
        for lam in combinations_with_replacement(range(1, 7), p):
            lam = tuple(sorted(lam, reverse=True))
            verdict = _diagonal_profile_verdict(lam)
            assert verdict in ("unreachable", "conflict"), (lam, verdict)
    # in particular the arithmetic-progression profiles themselves
    assert _diagonal_profile_verdict((2, 1)) != "undecided"
    assert _diagonal_profile_verdict((3, 2, 1)) == "conflict"
