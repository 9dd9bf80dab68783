"""Truncated formal power series over an exact coefficient field.

A :class:`Series` knows exactly ``order`` coefficients ``c_0 .. c_{order-1}``.
Binary operations return the minimum order of their inputs, so an answer
never claims more precision than its data supports.  Coefficients may be
``int``/``Fraction`` (the field Q) or :class:`~riordan_moments.kernel.RatFunc`
(the field Q(y)); the engine only uses field operations and ``== 0``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .errors import (
    BadConstantTerm,
    NonUnitConstantTerm,
    NonzeroInnerConstant,
    NotRevertible,
    OrderMismatch,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Series:
    """Immutable truncated power series ``c_0 + c_1 x + ... + O(x^order)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = tuple(Fraction(c) if type(c) is int else c for c in coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(cs) > order:
                cs = cs[:order]
            elif len(cs) < order:
                cs = cs + (_ZERO,) * (order - len(cs))
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs)

    # constructors -----------------------------------------------------
    @classmethod
    def x(cls, order: int) -> "Series":
        return cls((_ZERO, _ONE), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((_ONE,), order)

    @classmethod
    def const(cls, c, order: int) -> "Series":
        return cls((c,), order)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int) -> "Series":
        return cls((fn(n) for n in range(order)), order)

    @classmethod
    def from_egf_terms(cls, terms: Sequence, order: int | None = None) -> "Series":
        """Series ``sum a_n x^n / n!`` of the integer sequence ``a_n``."""
        cs = [Fraction(a) / factorial(n) for n, a in enumerate(terms)]
        return cls(cs, order if order is not None else len(cs))

    # access -------------------------------------------------------------
    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OrderMismatch(f"cannot raise order {self.order} to {order}")
        return Series(self.coeffs[:order])

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    # arithmetic -------------------------------------------------------
    def _other(self, other) -> "Series":
        if isinstance(other, Series):
            return other
        return Series.const(other, self.order)

    def __add__(self, other):
        o = self._other(other)
        n = min(self.order, o.order)
        return Series(self.coeffs[i] + o.coeffs[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._other(other)
        n = min(self.order, o.order)
        return Series(self.coeffs[i] - o.coeffs[i] for i in range(n))

    def __rsub__(self, other):
        return self._other(other) - self

    def scale(self, c) -> "Series":
        return Series(a * c for a in self.coeffs)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return self.scale(_ONE / other)
        return series_mul(self, series_recip(other))

    def __rtruediv__(self, other):
        return series_recip(self).scale(other)

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return series_recip(self) ** (-n)
        result = Series.one(self.order)
        base = self
        while n:
            if n & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}], order={self.order})"

    # calculus and shifts ------------------------------------------------
    def derivative(self) -> "Series":
        return Series(self.coeffs[n] * n for n in range(1, self.order))

    def integral(self, constant=_ZERO) -> "Series":
        return Series([constant] + [c / (n + 1) for n, c in enumerate(self.coeffs)])

    def shift_up(self) -> "Series":
        """Multiply by ``x``; the order grows by one."""
        return Series((_ZERO,) + self.coeffs)

    def shift_down(self) -> "Series":
        """Divide by ``x``; requires a zero constant term."""
        if self.order == 0:
            return self
        if self.coeffs[0] != 0:
            raise BadConstantTerm("division by x needs a zero constant term")
        return Series(self.coeffs[1:])

    def map(self, fn: Callable) -> "Series":
        return Series(fn(c) for c in self.coeffs)

    def __call__(self, inner: "Series") -> "Series":
        return series_compose(self, inner)


def series_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        acc = _ZERO
        for i in range(k + 1):
            ai = ac[i]
            if ai == 0:
                continue
            bj = bc[k - i]
            if bj == 0:
                continue
            acc = acc + ai * bj
        out.append(acc)
    return Series(out)


def series_recip(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be a unit."""
    if a.order == 0:
        return a
    c0 = a.coeffs[0]
    if c0 == 0:
        raise NonUnitConstantTerm("reciprocal of a series with zero constant term")
    inv0 = _ONE / c0
    out = [inv0]
    ac = a.coeffs
    for n in range(1, a.order):
        acc = _ZERO
        for k in range(1, n + 1):
            ak = ac[k]
            if ak != 0:
                acc = acc + ak * out[n - k]
        out.append(-acc * inv0)
    return Series(out)


def series_compose(f: Series, g: Series) -> Series:
    """``f(g(x))`` by Horner's rule; ``g`` must have zero constant term."""
    n = min(f.order, g.order)
    if n == 0:
        return Series(())
    if g.coeffs[0] != 0:
        raise NonzeroInnerConstant("inner series of a composition needs g_0 = 0")
    g = g.truncate(n)
    acc = Series.const(f.coeffs[n - 1], n)
    for k in range(n - 2, -1, -1):
        acc = series_mul(acc, g) + f.coeffs[k]
    return acc


def _check_revertible(f: Series) -> None:
    if f.order < 2:
        raise NotRevertible("reversion needs at least two coefficients")
    if f.coeffs[0] != 0:
        raise NotRevertible("reversion needs f_0 = 0")
    if f.coeffs[1] == 0:
        raise NotRevertible("reversion needs an invertible linear coefficient")


def series_revert(f: Series) -> Series:
    """Compositional inverse by Newton iteration ``g <- g - (f(g) - x)/f'(g)``.

    Each step doubles the number of correct coefficients.
    """
    _check_revertible(f)
    n = f.order
    df = f.derivative()
    g = Series((_ZERO, _ONE / f.coeffs[1]))
    prec = 2
    while prec < n:
        prec = min(2 * prec, n)
        g = Series(g.coeffs, prec)
        x = Series.x(prec)
        resid = series_compose(f.truncate(prec), g) - x
        # f' has one coefficient fewer than f; the missing top term only
        # reaches x^(n-1) of the slope and vanishes after multiplying by the
        # residual, whose valuation is at least one
        slope = series_compose(Series(df.coeffs, prec), g)
        g = g - series_mul(resid, series_recip(slope))
    return Series(g.coeffs, n)


def lagrange_invert(f: Series) -> Series:
    """Reversion via ``[x^n] fbar = (1/n) [x^(n-1)] (x/f)^n``.

    Slower than :func:`series_revert` and kept as its independent check.
    """
    _check_revertible(f)
    n = f.order
    h = series_recip(f.shift_down())  # x/f, order n-1
    out = [_ZERO]
    power = Series.one(h.order)
    for k in range(1, n):
        power = series_mul(power, h)
        out.append(power.coeffs[k - 1] / k)
    return Series(out)


def shift_revert(g: Series) -> Series:
    """``(1/x) Rev(x g(x))``; order is preserved."""
    return series_revert(g.shift_up()).shift_down()


def series_log(a: Series) -> Series:
    """Formal logarithm of a series with constant term 1."""
    if a.order == 0:
        return a
    if a.coeffs[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    q = series_mul(a.derivative(), series_recip(a.truncate(max(a.order - 1, 0))))
    return q.integral()


def series_exp(a: Series) -> Series:
    """Formal exponential via ``b' = a' b``; needs a zero constant term."""
    if a.order == 0:
        return a
    if a.coeffs[0] != 0:
        raise BadConstantTerm("exp needs constant term 0")
    ac = a.coeffs
    out = [_ONE]
    for n in range(1, a.order):
        acc = _ZERO
        for k in range(1, n + 1):
            if ac[k] != 0:
                acc = acc + ac[k] * k * out[n - k]
        out.append(acc / n)
    return Series(out)


def series_pow_rational(a: Series, e) -> Series:
    """``a^e = exp(e log a)`` for rational ``e``; needs constant term 1."""
    if a.order and a.coeffs[0] != 1:
        raise BadConstantTerm("rational power needs constant term 1")
    return series_exp(series_log(a).scale(Fraction(e)))


def exp_linear(c, order: int) -> Series:
    """Coefficients of ``exp(c x)``, i.e. ``c^n / n!``."""
    out = []
    p = _ONE
    for n in range(order):
        out.append(p / factorial(n))
        p = p * c
    return Series(out)


def trig_pair_scaled(s, u: Series) -> tuple[Series, Series]:
    """Radical-free hyperbolic pair.

    Returns ``(C, S)`` with ``C = sum s^k u^(2k)/(2k)!`` and
    ``S = sum s^k u^(2k+1)/(2k+1)!``, so that ``cosh(sqrt(s) u) = C`` and
    ``sqrt(s) sinh(sqrt(s) u) = s S``.
    """
    n = u.order
    even, odd = [], []
    p = _ONE
    for k in range(n):
        if k % 2 == 0:
            even.append(p / factorial(k))
            odd.append(_ZERO)
        else:
            even.append(_ZERO)
            odd.append(p / factorial(k))
            p = p * s
    return series_compose(Series(even), u), series_compose(Series(odd), u)


def catalan_series(order: int) -> Series:
    """``c(x) = (1/x) Rev(x(1 - x))``."""
    return shift_revert(Series((_ONE, -_ONE), order))
