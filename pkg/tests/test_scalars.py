from fractions import Fraction

import pytest

from cartanlab.scalars import I, ONE, ZERO, Scalar, gaussian_sqrt, rational_sqrt, sc


def test_arithmetic_is_exact():
    a = Scalar(Fraction(1, 3), Fraction(2, 7))
    b = Scalar(Fraction(-5, 2), 1)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a * ONE == a
    assert a + ZERO == a
    assert -(-a) == a


def test_denominators_normalized():
    s = Scalar(Fraction(2, -4), Fraction(6, 8))
    assert s.re == Fraction(-1, 2) and s.re.denominator == 2
    assert s.im == Fraction(3, 4)


def test_gaussian_multiplication():
    assert I * I == -1
    z = Scalar(1, 2) * Scalar(3, -1)
    assert z == Scalar(5, 5)
    assert Scalar(1, 2).conjugate() == Scalar(1, -2)
    assert Scalar(3, 4).norm() == 25


def test_division_and_zero():
    z = Scalar(2, 1)
    assert ONE / z * z == ONE
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    assert not ZERO
    assert z


def test_powers():
    assert Scalar(0, 1) ** 4 == ONE
    assert Scalar(2) ** 10 == 1024
    with pytest.raises(ValueError):
        Scalar(2) ** -1


def test_parsing_and_coercion():
    assert sc("3/4") == Scalar(Fraction(3, 4))
    assert sc(5) == Scalar(5)
    assert Scalar.from_strings("-3/7", "1/2") == Scalar(Fraction(-3, 7), Fraction(1, 2))
    assert str(sc("-3/7")) == "-3/7"
    assert str(Scalar(0, -1)) == "-i"
    assert str(Scalar(1, 2)) == "1+2i"


def test_hash_consistency():
    assert hash(Scalar(3)) == hash(Fraction(3))
    d = {Scalar(1, 2): "z"}
    assert d[Scalar(Fraction(2, 2), Fraction(4, 2))] == "z"


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


def test_gaussian_sqrt():
    assert gaussian_sqrt(Scalar(-4)) == Scalar(0, 2)
    assert gaussian_sqrt(Scalar(0, 2)) == Scalar(1, 1)
    w = gaussian_sqrt(Scalar(Fraction(-3, 4), ONE.re))
    # -3/4 + i = (1/2 + i)^2
    assert w is not None and w * w == Scalar(Fraction(-3, 4), 1)
    assert gaussian_sqrt(Scalar(2)) is None
    assert gaussian_sqrt(ZERO) == ZERO
