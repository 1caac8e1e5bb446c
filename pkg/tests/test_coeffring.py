from fractions import Fraction

import pytest
from hypothesis import given

from runnet.coeffring import InexactDivision, Poly, T, format_rational, parse_poly, poly, poly_from_csv

from conftest import polys


def test_difference_of_squares():
    assert (1 + T) * (1 - T) == 1 - T * T


def test_additive_identity():
    assert poly(4, 2) + Poly() == poly(4, 2)


def test_square():
    assert (1 + T) * (1 + T) == poly(1, 2, 1)


def test_div_exact_factor():
    assert (1 - T * T).div_exact(1 + T) == 1 - T


def test_div_exact_u_squared():
    assert (T * T + 2 * T - 3).div_exact(T - 1) == T + 3


def test_div_exact_non_divisor():
    with pytest.raises(InexactDivision):
        (1 + T).div_exact(1 - T)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        T.div_exact(Poly())


def test_normalized():
    p = poly(1, 2, 0, 0)
    assert p.coeffs == (1, 2) and p.degree == 1
    assert Poly().degree == -1 and Poly().is_zero
    assert (T - T).coeffs == ()


def test_rationals_reduced():
    p = poly(Fraction(2, 4))
    assert p[0].numerator == 1 and p[0].denominator == 2


def test_text_forms():
    assert str(poly(4, 2)) == "4 + 2*t"
    assert poly(4, 2).csv() == "4,2"
    assert str(poly(0, 1, 0, -1)) == "t - t^3"
    assert str(poly(Fraction(1, 2), -3)) == "1/2 - 3*t"
    assert str(Poly()) == "0"
    assert format_rational(Fraction(-3, 1)) == "-3"


def test_parse_round_trip():
    for p in (poly(4, 2), poly(0, 1, 0, -1), poly(Fraction(1, 2), -3), Poly(), poly(7)):
        assert parse_poly(str(p)) == p
    assert parse_poly("t**2 + 2*t - 3") == T * T + 2 * T - 3
    assert poly_from_csv("4,2") == poly(4, 2)


def test_evaluate():
    assert (1 + T)(Fraction(1, 2)) == Fraction(3, 2)


def test_big_integers_exact():
    p = poly(10 ** 40) * poly(10 ** 40)
    assert p[0] == 10 ** 80


@given(polys(), polys(), polys())
def test_distributive(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(polys(), polys())
def test_div_exact_inverts_mul(a, b):
    if b.is_zero:
        return
    assert (a * b).div_exact(b) == a


@given(polys(), polys())
def test_divmod(a, b):
    if b.is_zero:
        return
    q, r = a.divmod(b)
    assert q * b + r == a and r.degree < b.degree


@given(polys())
def test_coeffs_stay_reduced(a):
    for c in (a * a).coeffs:
        assert isinstance(c, Fraction)
    assert not (a * a).coeffs or (a * a).coeffs[-1] != 0
