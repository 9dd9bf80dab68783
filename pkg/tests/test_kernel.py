from fractions import Fraction

import pytest
from hypothesis import given

from riordan_moments.errors import DivisionByZero, NotDivisible
from riordan_moments.kernel import (
    Poly,
    RatFunc,
    Y,
    as_polynomial,
    poly_div_exact,
    poly_gcd,
    ratfunc_normalize,
)

from strategies import nonzero_polys, nonzero_ratfuncs, polys, ratfuncs

y = Poly.y()


def test_poly_basics():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Poly().degree == float("-inf")
    assert Poly([3]).is_constant() and Poly([3]).constant() == 3
    assert p(Fraction(1, 2)) == 2
    assert str(y * y - 1) == "-1 + y^2"


def test_poly_divmod():
    q, r = divmod(y**3 + 2 * y + 5, y - 1)
    assert q * (y - 1) + r == y**3 + 2 * y + 5
    assert r.degree < 1


@pytest.mark.parametrize(
    "p, q, want",
    [
        (y * y - 1, y - 1, y + 1),
        (1 - y**3, 1 - y, 1 + y + y * y),
    ],
)
def test_poly_div_exact(p, q, want):
    assert poly_div_exact(p, q) == want


def test_poly_div_exact_not_divisible():
    with pytest.raises(NotDivisible):
        poly_div_exact(y * y + 4 * y + 1, y + 2)


def test_gcd_is_monic():
    g = poly_gcd((y - 1) * (y + 2) * 3, (y - 1) * (y + 5) * 7)
    assert g == y - 1
    assert poly_gcd(Poly(), Poly()) == Poly()


@pytest.mark.parametrize(
    "num, den, want",
    [
        (2 * y + 2, Poly([2]), (y + 1, Poly([1]))),
        (y * y - 1, y - 1, (y + 1, Poly([1]))),
        (Poly(), y, (Poly(), Poly([1]))),
    ],
)
def test_normalize(num, den, want):
    r = ratfunc_normalize(num, den)
    assert (r.num, r.den) == want


def test_ratfunc_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        RatFunc(y, Poly())
    with pytest.raises(DivisionByZero):
        Y / RatFunc(Poly())


def test_as_polynomial():
    assert as_polynomial((Y * Y - 1) / (Y - 1)) == y + 1
    assert as_polynomial(Fraction(3)) == Poly([3])
    with pytest.raises(NotDivisible):
        as_polynomial(1 / (1 + Y))


def test_ratfunc_mixes_with_fraction():
    r = (1 + Y) / 2
    assert r * 2 == 1 + Y
    assert Fraction(1, 2) + r == 1 + Y / 2
    assert RatFunc(Poly([5])) == 5
    assert hash(RatFunc(Poly([5]))) == hash(Fraction(5))


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Poly()


@given(polys, nonzero_polys)
def test_poly_division_identity(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(ratfuncs, ratfuncs, ratfuncs)
def test_ratfunc_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a


@given(ratfuncs, nonzero_ratfuncs)
def test_ratfunc_inverse(a, b):
    assert (a / b) * b == a
    assert b * b.inverse() == 1


@given(ratfuncs)
def test_ratfunc_normal_form(r):
    assert r.den.lc == 1
    assert poly_gcd(r.num, r.den).degree <= 0
