from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan_moments.errors import (
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    NotRevertible,
    OrderMismatch,
)
from riordan_moments.eulerian import EulerianParams, eulerian_egf
from riordan_moments.riordan import lower_inverse
from riordan_moments.series import (
    Series,
    catalan_series,
    exp_linear,
    lagrange_invert,
    series_compose,
    series_exp,
    series_log,
    series_mul,
    series_pow_rational,
    series_recip,
    series_revert,
    shift_revert,
    trig_pair_scaled,
)

from strategies import fractions, nonzero_fractions

F = Fraction
CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def revertible(order):
    return st.tuples(nonzero_fractions, st.lists(fractions, min_size=order - 2, max_size=order - 2)).map(
        lambda t: Series([0, t[0], *t[1]], order)
    )


def unit_series(order):
    return st.tuples(nonzero_fractions, st.lists(fractions, min_size=order - 1, max_size=order - 1)).map(
        lambda t: Series([t[0], *t[1]], order)
    )


def test_construction_pads_and_truncates():
    assert Series([1, 2], 4).coeffs == (1, 2, 0, 0)
    assert Series([1, 2, 3], 2).order == 2
    assert isinstance(Series([3]).coeffs[0], Fraction)
    with pytest.raises(OrderMismatch):
        Series([1, 2]).truncate(5)


def test_mixed_orders_take_the_minimum():
    assert (Series([1, 1], 3) + Series([1], 5)).order == 3
    assert series_mul(Series([1], 4), Series([1], 2)).order == 2


def test_mul_examples():
    assert series_mul(Series([1, 1], 4), Series([1, -1], 4)) == Series([1, 0, -1, 0])
    geo = Series([1] * 6)
    assert series_mul(geo, Series([1, -1], 6)) == Series.one(6)


def test_catalan_square_identity():
    c = catalan_series(11)
    lhs = series_mul(c, c).truncate(10)
    rhs = (c - 1).shift_down()
    assert lhs == rhs


def test_recip_examples():
    assert series_recip(Series([1, -1], 5)) == Series([1] * 5)
    assert series_recip(Series([1] * 6)) == Series([1, -1], 6)
    E = eulerian_egf(EulerianParams(0, 1, 8)).series
    assert series_mul(series_recip(E), E) == Series.one(8)
    with pytest.raises(NonUnitConstantTerm):
        series_recip(Series([0, 1], 3))


@settings(max_examples=40)
@given(unit_series(8))
def test_recip_matches_triangular_solve(a):
    # reciprocal = first column of the inverse of the Toeplitz multiplication matrix
    n = a.order
    m = [[a.coeffs[i - j] for j in range(i + 1)] for i in range(n)]
    inv = lower_inverse(m)
    assert list(series_recip(a).coeffs) == [inv[i][0] for i in range(n)]


def test_compose_examples():
    f = Series([1] * 7)
    assert series_compose(f, Series([0, 0, 1], 7)) == Series([1, 0, 1, 0, 1, 0, 1])
    c2 = series_compose(catalan_series(5), Series([0, 2], 5))
    assert list(c2.coeffs) == [1, 2, 8, 40, 224]
    with pytest.raises(NonzeroInnerConstant):
        series_compose(f, Series([1, 1], 7))


def test_revert_examples():
    assert list(shift_revert(Series([1, -1], 8)).coeffs[:6]) == CATALAN[:6]
    motz = shift_revert(series_recip(Series([1, 1, 1], 8)))
    assert list(motz.coeffs[:6]) == [1, 1, 2, 4, 9, 21]
    g = series_mul(Series([1, -1], 9), series_recip(Series([1, -1, 1], 9)))
    assert list(shift_revert(g).coeffs) == [1, 0, 1, 1, 3, 6, 15, 36, 91]


@pytest.mark.parametrize("f", [Series([0, 1, -1], 10), series_mul(Series.x(10), series_recip(Series([1, 1, 1], 10))), Series.x(6)])
def test_lagrange_matches_newton(f):
    assert lagrange_invert(f) == series_revert(f)


def test_revert_errors():
    with pytest.raises(NotRevertible):
        series_revert(Series([1, 1], 4))
    with pytest.raises(NotRevertible):
        series_revert(Series([0, 0, 1], 4))


@settings(max_examples=30, deadline=None)
@given(revertible(12))
def test_reversion_laws(f):
    g = series_revert(f)
    assert series_compose(f, g) == Series.x(12)
    assert series_compose(g, f) == Series.x(12)
    assert series_revert(g) == f


def test_exp_log_examples():
    assert series_exp(Series.x(6)) == Series([F(1, factorial(n)) for n in range(6)])
    assert series_log(Series([1, 1], 5)) == Series([0, 1, F(-1, 2), F(1, 3), F(-1, 4)])
    assert series_exp(series_log(Series([1, 3], 10))) == Series([1, 3], 10)
    assert exp_linear(2, 5) == Series([F(2**n, factorial(n)) for n in range(5)])


@settings(max_examples=30, deadline=None)
@given(st.lists(fractions, min_size=7, max_size=7))
def test_exp_log_round_trip(tail):
    a = Series([0, *tail], 8)
    assert series_log(series_exp(a)) == a
    assert series_exp(series_log(a + 1)) == a + 1


def test_rational_powers():
    half = series_pow_rational(Series([1, 1], 6), F(1, 2))
    assert list(half.coeffs[:4]) == [1, F(1, 2), F(-1, 8), F(1, 16)]
    r = series_pow_rational(Series([1, 2], 10), F(1, 2))
    assert series_mul(r, r) == Series([1, 2], 10)
    assert series_pow_rational(Series([1, 1], 8), -1) == series_recip(Series([1, 1], 8))


def test_trig_pair():
    u = Series.x(8)
    C, S = trig_pair_scaled(0, u)
    assert C == Series.one(8) and S == u
    C, S = trig_pair_scaled(1, u)
    assert C == Series([F(1, factorial(n)) if n % 2 == 0 else 0 for n in range(8)])
    assert S == Series([F(1, factorial(n)) if n % 2 else 0 for n in range(8)])


@given(fractions)
def test_trig_pair_differential_relations(s):
    C, S = trig_pair_scaled(s, Series.x(10))
    assert C.derivative() == S.scale(s).truncate(9)
    assert S.derivative() == C.truncate(9)


def test_calculus():
    s = Series([1, 2, 3, 4])
    assert s.derivative() == Series([2, 6, 12])
    assert s.derivative().integral(1) == s
    assert s.shift_up().shift_down() == s
    assert Series([1, 1, 1], 3) ** 2 == Series([1, 2, 3])
    assert list((Series([1, 1], 5) ** 4).coeffs) == [comb(4, k) for k in range(5)]
