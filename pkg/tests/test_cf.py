from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from riordan_moments.cf import (
    SQUARES,
    TRIANGULAR,
    JFraction,
    ScalingSequence,
    bareiss_det,
    cf_map,
    get_scaling,
    hankel_from_beta,
    hankel_oracle,
    jfraction_to_series,
    series_to_jfraction,
)
from riordan_moments.errors import (
    InsufficientCoefficients,
    InsufficientDepth,
    NonPolynomialResult,
    ZeroHankel,
)
from riordan_moments.eulerian import symmetric_jfraction
from riordan_moments.kernel import Y
from riordan_moments.transforms import OgfSeries

from strategies import fractions, nonzero_fractions

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429]
FACTORIALS = [1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880]
MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127]


def leibniz_det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def jf(alpha, beta):
    return JFraction([Fraction(a) for a in alpha], [Fraction(b) for b in beta])


def test_jfraction_shape():
    J = jf([1, 2, 3], [4, 5])
    assert J.depth == 3 and J.trusted_order == 6
    assert J.truncate(2) == jf([1, 2], [4])
    with pytest.raises(ValueError):
        jf([1, 2], [1, 2])
    assert JFraction.from_rules(lambda k: k, lambda k: k * k, 3) == jf([0, 1, 2], [1, 4])


@pytest.mark.parametrize(
    "alpha, beta, want",
    [
        ([1] * 4, [1] * 3, [1, 1, 2, 4, 9, 21, 51]),
        ([1, 3, 5, 7], [1, 4, 9], [1, 1, 2, 6, 24, 120, 720]),
        ([2, 1, 1, 1], [2, 1, 1], [1, 2, 6, 18, 56, 176, 558]),
    ],
)
def test_evaluate(alpha, beta, want):
    assert jfraction_to_series(jf(alpha, beta), 7).terms() == want


def test_evaluate_depth_bound():
    J = jf([1, 1], [1])
    assert jfraction_to_series(J, 4).terms() == [1, 1, 2, 4]
    with pytest.raises(InsufficientDepth):
        jfraction_to_series(J, 5)


def test_extract_examples():
    J = series_to_jfraction(OgfSeries.from_terms(CATALAN))
    assert J == jf([1, 2, 2, 2], [1, 1, 1])
    J = series_to_jfraction(OgfSeries.from_terms(FACTORIALS), 5)
    assert J == jf([1, 3, 5, 7, 9], [1, 4, 9, 16])
    with pytest.raises(InsufficientCoefficients):
        series_to_jfraction(OgfSeries.from_terms(CATALAN), 5)


def test_extract_zero_hankel_reports_depth():
    with pytest.raises(ZeroHankel) as err:
        series_to_jfraction(OgfSeries.from_terms([1] * 8))
    assert err.value.depth == 1
    assert err.value.partial.alpha == (1,)


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=4, max_size=4), st.lists(nonzero_fractions, min_size=3, max_size=3))
def test_extract_evaluate_round_trip(alpha, beta):
    J = JFraction(alpha, beta)
    assert series_to_jfraction(jfraction_to_series(J)) == J


def test_hankel_examples():
    assert all(hankel_oracle(OgfSeries.from_terms(CATALAN), n) == 1 for n in range(1, 5))
    assert hankel_oracle(OgfSeries.from_terms(FACTORIALS), 3) == 4
    assert hankel_oracle(OgfSeries.from_terms(MOTZKIN), 4) == 1


def test_bareiss_against_leibniz():
    m = [[2, -1, 3, 0], [1, 4, -2, 5], [0, 3, 1, -1], [2, 2, 0, 1]]
    m = [[Fraction(v) for v in r] for r in m]
    assert bareiss_det(m) == leibniz_det(m)
    assert bareiss_det([[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]) == -1


def test_hankel_symbolic():
    J = symmetric_jfraction(4)
    s = jfraction_to_series(J)
    assert hankel_oracle(s, 3) == hankel_from_beta(J, 3)


@pytest.mark.parametrize(
    "src, direction, w, want",
    [
        (([1] * 4, [1] * 3), "T_inv", SQUARES, ([1, 2, 3, 4], [1, 4, 9])),
        (([2, 3, 3, 3], [3, 3, 3]), "T_inv", SQUARES, ([2, 5, 8, 11], [3, 12, 27])),
        (([0, 3, 5, 7], [1, 4, 9]), "T", SQUARES, ([0, 3, 2, 2], [1, 1, 1])),
    ],
)
def test_cf_map_examples(src, direction, w, want):
    assert cf_map(jf(*src), direction, w) == jf(*want)


def test_cf_map_symmetric():
    J = cf_map(symmetric_jfraction(5), "T", TRIANGULAR)
    assert J == JFraction([Y + 1] * 5, [2 * Y] * 4)


def test_cf_map_round_trip_and_errors():
    J = jf([1, 4, 2, 0], [3, 1, 7])
    for w in (SQUARES, TRIANGULAR, ScalingSequence.custom([2, 5, 9])):
        assert cf_map(cf_map(J, "T_inv", w), "T", w) == J
    with pytest.raises(ValueError):
        cf_map(J, "sideways")
    with pytest.raises(ValueError):
        get_scaling("cubes")
    with pytest.raises(ValueError):
        ScalingSequence.custom([1, 0])(2)
    with pytest.raises(NonPolynomialResult):
        cf_map(JFraction([Y, 1 / (1 + Y)], [Y]), "T", require_polynomial=True)
