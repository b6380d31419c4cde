import pytest

from cartanlab import catalog as cat
from cartanlab.forms import (
    DualForm,
    FormError,
    cartan_class,
    ce_differential,
    interior_product,
    wedge,
)
from cartanlab.liealg import LieAlgebra
from cartanlab.randgen import random_covector, random_form, rng
from cartanlab.scalars import ONE, sc


def test_wedge_basis_products_heisenberg():
    h3 = cat.heisenberg(1).algebra
    w1, w2 = DualForm.basis(h3, 1), DualForm.basis(h3, 2)
    assert wedge(w1, w2) == DualForm(h3, 2, {(1, 2): 1})
    assert wedge(w1, w1).is_zero
    assert wedge(w2, w1) == DualForm(h3, 2, {(1, 2): -1})


def test_wedge_associative_volume():
    so3 = cat.dim3("so3").algebra
    w1, w2, w3 = (DualForm.basis(so3, i) for i in (1, 2, 3))
    vol = wedge(wedge(w1, w2), w3)
    assert vol == DualForm(so3, 3, {(1, 2, 3): 1})
    assert vol == wedge(w1, wedge(w2, w3))


def test_wedge_above_dimension_vanishes():
    h3 = cat.heisenberg(1).algebra
    vol = DualForm(h3, 3, {(1, 2, 3): 1})
    assert wedge(vol, DualForm.basis(h3, 1)).is_zero


def test_wedge_mixed_algebras_error():
    a, b = cat.heisenberg(1).algebra, cat.heisenberg(1).algebra
    with pytest.raises(FormError):
        wedge(DualForm.basis(a, 1), DualForm.basis(b, 1))


def test_graded_commutativity_random():
    g = cat.heisenberg(2).algebra
    r = rng(5)
    for _ in range(25):
        p, q = r.randint(1, 3), r.randint(1, 3)
        a, b = random_form(g, p, r), random_form(g, q, r)
        left = wedge(a, b)
        right = wedge(b, a)
        assert left == (right if (p * q) % 2 == 0 else -right)


def test_ce_differential_heisenberg():
    h3 = cat.heisenberg(1).algebra
    assert ce_differential(DualForm.basis(h3, 3)) == DualForm(h3, 2, {(1, 2): -1})
    assert ce_differential(DualForm.basis(h3, 1)).is_zero
    assert ce_differential(DualForm.basis(h3, 2)).is_zero


def test_ce_differential_so3_display():
    so3 = cat.dim3("so3").algebra
    assert ce_differential(DualForm.basis(so3, 1)) == DualForm(so3, 2, {(2, 3): 1})


def test_antiderivation_random():
    g = cat.frobenius_model(2, [sc("1/2")]).algebra
    r = rng(6)
    for _ in range(20):
        p = r.randint(1, 2)
        a, b = random_form(g, p, r), random_form(g, r.randint(1, 2), r)
        lhs = ce_differential(wedge(a, b))
        rhs = wedge(ce_differential(a), b) + (
            wedge(a, ce_differential(b)) if p % 2 == 0 else -wedge(a, ce_differential(b))
        )
        assert lhs == rhs


def test_d_squared_zero_on_jacobi_algebras():
    for entry in (cat.heisenberg(2), cat.dim3("sl2"), cat.filiform_model(6)):
        g = entry.algebra
        for i in range(1, g.dim + 1):
            assert ce_differential(ce_differential(DualForm.basis(g, i))).is_zero


def test_d_squared_detects_jacobi_failure():
    bad = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    w3 = DualForm.basis(bad, 3)
    assert not ce_differential(ce_differential(w3)).is_zero


def test_interior_product_examples():
    h3 = cat.heisenberg(1).algebra
    x1, x2, x3 = (h3.basis_vector(i) for i in (1, 2, 3))
    w12 = DualForm(h3, 2, {(1, 2): 1})
    assert interior_product(x1, w12) == DualForm.basis(h3, 2)
    assert interior_product(x2, w12) == -DualForm.basis(h3, 1)
    # the center contracts the differential of the contact form to zero
    dw3 = ce_differential(DualForm.basis(h3, 3))
    assert interior_product(x3, dw3).is_zero


def test_interior_product_nilpotency_and_linearity():
    g = cat.heisenberg(2).algebra
    r = rng(7)
    for _ in range(10):
        w = random_form(g, 3, r)
        v = random_covector(g, r)
        x = g.basis_vector(1).scale(v.coeffs.get((1,), ONE))
        assert interior_product(x, interior_product(x, w)).is_zero


def test_interior_grade0_error():
    h3 = cat.heisenberg(1).algebra
    with pytest.raises(FormError):
        interior_product(h3.basis_vector(1), DualForm.one(h3))


def test_cartan_class_examples():
    h3 = cat.heisenberg(1)
    info = cartan_class(h3.distinguished_form)
    assert info.value == 3 and info.characteristic_space.dim == 0

    ab = cat.abelian(4)
    assert cartan_class(DualForm.covector(ab.algebra, [1, 2, 0, 0])).value == 1

    so3 = cat.dim3("so3").algebra
    assert cartan_class(DualForm.covector(so3, [1, 1, 0])).value == 3

    frob = cat.frobenius_model(2, [sc("1/2")])
    assert cartan_class(frob.distinguished_form).value == 4


def test_cartan_class_zero_form_error():
    h3 = cat.heisenberg(1).algebra
    with pytest.raises(FormError):
        cartan_class(DualForm.zero(h3, 1))


def test_class_equals_characteristic_codimension_random():
    r = rng(8)
    for entry in cat.standard_entries():
        g = entry.algebra
        for _ in range(10):
            w = random_covector(g, r)
            info = cartan_class(w)  # raises ClassOracleError on any mismatch
            assert info.value == g.dim - info.characteristic_space.dim


def test_parity_on_nilpotent_entries():
    r = rng(9)
    for entry in cat.nilpotent_entries():
        for _ in range(30):
            assert cartan_class(random_covector(entry.algebra, r)).value % 2 == 1


def test_semisimple_rank_one_bound():
    r = rng(10)
    for entry in (cat.dim3("sl2"), cat.dim3("so3")):
        for _ in range(50):
            assert cartan_class(random_covector(entry.algebra, r)).value <= 3


def test_evaluate_and_pair():
    h3 = cat.heisenberg(1).algebra
    w = DualForm.covector(h3, [1, 2, 3])
    assert w.pair(h3.basis_vector(2)) == 2
    vol = DualForm(h3, 3, {(1, 2, 3): 2})
    assert vol.evaluate(*(h3.basis_vector(i) for i in (1, 2, 3))) == 2
    assert vol.evaluate(*(h3.basis_vector(i) for i in (2, 1, 3))) == -2
