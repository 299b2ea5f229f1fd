from fractions import Fraction

import pytest
from hypothesis import given

from tensorcomplex.poly import P_ONE, Poly3, X1, X2, X3, monomials_up_to

from conftest import polys


def test_partial_power_rule():
    p = X1 * X1 * X3
    assert p.partial(1) == X1.scale(2) * X3
    assert p.partial(3) == X1 * X1


def test_partial_absent_variable():
    assert (X1 * X2).partial(3).is_zero


def test_difference_of_squares():
    assert (X1 + X2) * (X1 - X2) == X1 * X1 - X2 * X2


def test_no_zero_coefficients_stored():
    p = X1 - X1
    assert p.is_zero and p.terms == {}
    q = Poly3({(1, 0, 0): Fraction(0), (0, 1, 0): Fraction(2)})
    assert (1, 0, 0) not in q.terms


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        Poly3({(-1, 0, 0): Fraction(1)})


def test_degree_and_homogeneous_parts():
    p = P_ONE + X1 * X2 + X3
    assert p.degree() == 2
    parts = p.homogeneous_parts()
    assert sorted(parts) == [0, 1, 2]
    assert parts[2] == X1 * X2
    assert Poly3.zero().degree() == -1


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(polys(), polys())
def test_derivative_product_rule(p, q):
    for i in (1, 2, 3):
        assert (p * q).partial(i) == p.partial(i) * q + q.partial(i) * p


@given(polys())
def test_text_round_trip(p):
    assert Poly3.parse(str(p)) == p
    assert str(Poly3.parse(str(p))) == str(p)


def test_parse_fraction_forms():
    assert Poly3.parse("5/6 * x1^1 x2^0 x3^2") == Poly3({(1, 0, 2): Fraction(5, 6)})
    assert Poly3.parse("-3 * x1^0 x2^0 x3^0") == Poly3.const(-3)
    assert Poly3.parse("0").is_zero


def test_monomials_up_to_counts():
    # C(d+3, 3) monomials of degree <= d
    assert len(monomials_up_to(0)) == 1
    assert len(monomials_up_to(3)) == 20
    assert len(monomials_up_to(4)) == 35
