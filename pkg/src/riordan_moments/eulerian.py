"""The Eulerian family E(x, y; a, b), its image G(x, y; a, b), and triangles.

All series here have coefficients in Q(y).  Triangles are read off by
asserting that each x-coefficient is a polynomial in y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cf import JFraction
from .errors import NonPolynomialResult, NotDivisible
from .kernel import RatFunc, Y, as_polynomial
from .riordan import EXPONENTIAL, OrthoPolyParams, RiordanPair
from .series import (
    Series,
    catalan_series,
    exp_linear,
    series_compose,
    series_log,
    series_mul,
    series_pow_rational,
    series_recip,
)
from .transforms import EgfSeries, OgfSeries

_ONE = Fraction(1)
_ZERO = Fraction(0)


@dataclass(frozen=True)
class EulerianParams:
    a: Fraction
    b: Fraction
    N: int = 10

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            raise ValueError("EulerianParams needs b != 0")


@dataclass(frozen=True)
class PolyTriangle:
    rows: tuple

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} has {len(r)} entries, expected {n + 1}")
        object.__setattr__(self, "rows", rows)

    @property
    def integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for r in self.rows for c in r)

    def as_int_rows(self) -> list[list[int]]:
        if not self.integral:
            raise ValueError("triangle has non-integral entries")
        return [[int(c) for c in r] for r in self.rows]

    def row_sums(self) -> list:
        return [sum(r) for r in self.rows]

    def head(self, n: int) -> "PolyTriangle":
        return PolyTriangle(self.rows[:n])


def _one_minus_y() -> RatFunc:
    return 1 - Y


def eulerian_egf(p: EulerianParams) -> EgfSeries:
    """``E = (1-y) exp(a x (1-y)) / (1 - y exp(b x (1-y)))``."""
    N = p.N
    num = exp_linear(p.a * _one_minus_y(), N).scale(_one_minus_y())
    den = Series.one(N) - exp_linear(p.b * _one_minus_y(), N).scale(Y)
    E = series_mul(num, series_recip(den))
    _assert_polynomial(E)
    return EgfSeries(E)


def G_series(p: EulerianParams) -> OgfSeries:
    """``G = 1/(1-ux) c(x(a(a-b)(y-1)^2 x + a(y-1) + b) / (1-ux)^2)``, ``u = (b-2a)(y-1)``."""
    N = p.N
    a, b = p.a, p.b
    ym1 = Y - 1
    u = (b - 2 * a) * ym1
    lead = series_recip(Series((_ONE, -u), N))
    inner_num = Series((_ZERO, a * ym1 + b, a * (a - b) * ym1 * ym1), N)
    inner = series_mul(inner_num, series_mul(lead, lead))
    G = series_mul(lead, series_compose(catalan_series(N), inner))
    _assert_polynomial(G)
    return OgfSeries(G)


def symmetric_eulerian_egf(N: int) -> EgfSeries:
    """``exp(x(1+y)) (1-y)^2 / (y e^x - e^{yx})^2``, the A008292 family."""
    num = exp_linear(1 + Y, N).scale(_one_minus_y() ** 2)
    d = exp_linear(_ONE, N).scale(Y) - exp_linear(Y, N)
    E = series_mul(num, series_recip(series_mul(d, d)))
    _assert_polynomial(E)
    return EgfSeries(E)


def symmetric_image_series(N: int) -> OgfSeries:
    """``1/(1-x(1+y)) c(2 x^2 y / (1-x(1+y))^2)``."""
    lead = series_recip(Series((_ONE, -(1 + Y)), N))
    inner = series_mul(Series((_ZERO, _ZERO, 2 * Y), N), series_mul(lead, lead))
    return OgfSeries(series_mul(lead, series_compose(catalan_series(N), inner)))


def symmetric_image_triangle(N: int) -> PolyTriangle:
    return triangle_from_bivariate(symmetric_image_series(N))


def _assert_polynomial(s: Series) -> None:
    for n, c in enumerate(s.coeffs):
        if isinstance(c, RatFunc) and not c.is_polynomial():
            raise NonPolynomialResult(f"x^{n} coefficient {c} is not a polynomial in y")


def triangle_from_bivariate(s, egf: bool | None = None) -> PolyTriangle:
    """Row ``n`` = y-coefficients of the n-th term (factorial-scaled for EGFs)."""
    if isinstance(s, EgfSeries):
        series, egf = s.series, True if egf is None else egf
    elif isinstance(s, OgfSeries):
        series, egf = s.series, False if egf is None else egf
    else:
        series, egf = s, bool(egf)
    rows = []
    for n, c in enumerate(series.coeffs):
        if egf:
            c = c * factorial(n)
        try:
            poly = as_polynomial(c)
        except NotDivisible as err:
            raise NonPolynomialResult(f"row {n}: {c} is not a polynomial in y") from err
        cs = list(poly.coeffs)
        if len(cs) > n + 1:
            raise NonPolynomialResult(f"row {n} has degree {len(cs) - 1} > {n}")
        cs += [_ZERO] * (n + 1 - len(cs))
        rows.append([int(v) if v.denominator == 1 else v for v in cs])
    return PolyTriangle(rows)


# continued fractions and Riordan data for the family ---------------------

def G_jfraction(p: EulerianParams, depth: int) -> JFraction:
    """``J(y(b-a)+a, b(y+1), b(y+1), ...; b^2 y, b^2 y, ...)``."""
    a, b = p.a, p.b
    first = Y * (b - a) + a
    rest = b * (Y + 1)
    return JFraction([first] + [rest] * (depth - 1), [b * b * Y] * (depth - 1))


def E_jfraction(p: EulerianParams, depth: int) -> JFraction:
    """OGF of the moments with EGF ``E``:
    ``J(y(b-a)+a + k b(1+y), ...; k^2 b^2 y, ...)``."""
    a, b = p.a, p.b
    return JFraction.from_rules(
        lambda k: Y * (b - a) + a + k * b * (1 + Y),
        lambda k: k * k * b * b * Y,
        depth,
    )


def symmetric_jfraction(depth: int) -> JFraction:
    """``J(y+1, 2(y+1), ...; 2y, 6y, 12y, ...)``."""
    return JFraction.from_rules(lambda k: (k + 1) * (Y + 1), lambda k: k * (k + 1) * Y, depth)


def eulerian_ortho_params(p: EulerianParams) -> OrthoPolyParams:
    """Ordinary array whose moments are ``G(x, y; a, b)``.

    ``((1 + (a(y-1)+b) x)/(1 + b(1+y) x + b^2 y x^2), x/(1 + b(1+y) x + b^2 y x^2))``.
    """
    a, b = p.a, p.b
    return OrthoPolyParams(a * (Y - 1) + b, _ZERO, b * (1 + Y), b * b * Y)


def eulerian_orthogonal_array(p: EulerianParams) -> RiordanPair:
    """Exponential array of the orthogonal polynomials whose moments have EGF ``E``.

    ``[(1+bxy)^(a/b-1) / (1+bx)^(a/b), ln((1+bx)/(1+bxy)) / (b(1-y))]``.  The
    ``g`` is fixed by requiring ``1/g(fbar) = E``.
    """
    N = p.N
    a, b = p.a, p.b
    one_bx = Series((_ONE, b), N)
    one_bxy = Series((_ONE, b * Y), N)
    g = series_mul(
        series_pow_rational(one_bxy, a / b - 1),
        series_recip(series_pow_rational(one_bx, a / b)),
    )
    f = (series_log(one_bx) - series_log(one_bxy)).scale(1 / (b * _one_minus_y()))
    return RiordanPair(g, f, EXPONENTIAL)


def eulerian_moment_array(p: EulerianParams) -> RiordanPair:
    """``[E, (e^{bx} - e^{bxy}) / (b(e^{bxy} - y e^{bx}))]``."""
    N = p.N
    b = p.b
    ebx = exp_linear(b, N)
    ebxy = exp_linear(b * Y, N)
    g = eulerian_egf(p).series
    top = ebx - ebxy
    bottom = (ebxy - ebx.scale(Y)).scale(b)
    f = series_mul(top, series_recip(bottom))
    return RiordanPair(g, f, EXPONENTIAL)


__all__ = [
    "EulerianParams",
    "PolyTriangle",
    "eulerian_egf",
    "G_series",
    "symmetric_eulerian_egf",
    "symmetric_image_series",
    "symmetric_image_triangle",
    "triangle_from_bivariate",
    "G_jfraction",
    "E_jfraction",
    "symmetric_jfraction",
    "eulerian_ortho_params",
    "eulerian_orthogonal_array",
    "eulerian_moment_array",
]
