"""Jacobi continued fractions.

``J(a_0, a_1, ...; b_1, b_2, ...)`` denotes::

    1 / (1 - a_0 x - b_1 x^2 / (1 - a_1 x - b_2 x^2 / (1 - ...)))

A :class:`JFraction` holds finitely many coefficients; with ``m`` alphas and
``m - 1`` betas it pins down the first ``2m`` series coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import (
    InsufficientCoefficients,
    InsufficientDepth,
    NonPolynomialResult,
    ZeroHankel,
)
from .kernel import RatFunc
from .series import Series, series_mul, series_recip
from .transforms import OgfSeries

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


@dataclass(frozen=True)
class JFraction:
    alpha: tuple
    beta: tuple

    def __init__(self, alpha: Sequence, beta: Sequence):
        alpha = tuple(_coerce(a) for a in alpha)
        beta = tuple(_coerce(b) for b in beta)
        if not alpha:
            raise ValueError("a J-fraction needs at least one alpha")
        if len(beta) != len(alpha) - 1:
            raise ValueError(
                f"need len(beta) == len(alpha) - 1, got {len(alpha)} and {len(beta)}"
            )
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def from_rules(
        cls,
        alpha: Callable[[int], object],
        beta: Callable[[int], object],
        depth: int,
    ) -> "JFraction":
        """``alpha(k)`` for k = 0..depth-1 and ``beta(k)`` for k = 1..depth-1."""
        return cls([alpha(k) for k in range(depth)], [beta(k) for k in range(1, depth)])

    @property
    def depth(self) -> int:
        return len(self.alpha)

    @property
    def trusted_order(self) -> int:
        return 2 * len(self.alpha)

    def truncate(self, depth: int) -> "JFraction":
        return JFraction(self.alpha[:depth], self.beta[: depth - 1])

    def __eq__(self, other):
        if not isinstance(other, JFraction):
            return NotImplemented
        return (
            len(self.alpha) == len(other.alpha)
            and all(a == b for a, b in zip(self.alpha, other.alpha))
            and all(a == b for a, b in zip(self.beta, other.beta))
        )

    __hash__ = None


def jfraction_to_series(J: JFraction, N: int | None = None) -> OgfSeries:
    """Expand ``J`` bottom-up to ``N`` coefficients (default: all trusted ones)."""
    if N is None:
        N = J.trusted_order
    if N > J.trusted_order:
        raise InsufficientDepth(
            f"{J.depth} levels determine {J.trusted_order} coefficients, asked for {N}"
        )
    x = Series.x(N)
    x2 = series_mul(x, x)
    mu = series_recip(Series.one(N) - x.scale(J.alpha[-1]))
    for k in range(J.depth - 2, -1, -1):
        denom = Series.one(N) - x.scale(J.alpha[k]) - series_mul(x2, mu).scale(J.beta[k])
        mu = series_recip(denom)
    return OgfSeries(mu)


def series_to_jfraction(s: OgfSeries, depth: int | None = None) -> JFraction:
    """Peel ``mu = 1/(1 - a_0 x - b_1 x^2 mu_1)`` level by level.

    Extracts as many levels as the coefficients determine (or ``depth``).
    Raises :class:`ZeroHankel` when some ``b_k`` vanishes before that.
    """
    mu = s.series if isinstance(s, OgfSeries) else s
    if mu.order == 0 or mu.coeffs[0] != 1:
        raise ValueError("J-fraction extraction needs constant term 1")
    max_depth = mu.order // 2
    if depth is None:
        depth = max_depth
    elif depth > max_depth:
        raise InsufficientCoefficients(
            f"depth {depth} needs {2 * depth} coefficients, have {mu.order}"
        )
    if depth < 1:
        raise InsufficientCoefficients("need at least two coefficients")
    alpha, beta = [], []
    for level in range(depth):
        r = series_recip(mu)
        alpha.append(-r.coeffs[1])
        if level == depth - 1:
            break
        # (1 - a x - 1/mu) / x^2 = b mu'
        rest = Series(-c for c in r.coeffs[2:])
        b = rest.coeffs[0]
        if b == 0:
            partial = JFraction(alpha, beta)
            raise ZeroHankel(
                f"beta_{level + 1} vanishes; extracted depth {level + 1}",
                depth=level + 1,
                partial=partial,
            )
        beta.append(b)
        mu = rest.scale(_ONE / b)
    return JFraction(alpha, beta)


def hankel_oracle(s: OgfSeries, n: int):
    """Determinant of the ``n x n`` Hankel matrix ``(c_{i+j})`` (Bareiss)."""
    c = s.series.coeffs if isinstance(s, OgfSeries) else tuple(s)
    if n == 0:
        return _ONE
    if len(c) < 2 * n - 1:
        raise InsufficientCoefficients(f"need {2 * n - 1} coefficients, have {len(c)}")
    m = [[c[i + j] for j in range(n)] for i in range(n)]
    return bareiss_det(m)


def bareiss_det(m: list[list]):
    """Fraction-free determinant, with row swaps on zero pivots."""
    m = [list(row) for row in m]
    n = len(m)
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return m[n - 1][n - 1] * sign if n else _ONE


def hankel_from_beta(J: JFraction, n: int):
    """``prod_{k=1}^{n-1} beta_k^(n-k)``."""
    out = _ONE
    for k in range(1, n):
        out = out * J.beta[k - 1] ** (n - k)
    return out


# scaling sequences ------------------------------------------------------

@dataclass(frozen=True)
class ScalingSequence:
    """Weights ``w_1, w_2, ...`` applied to the beta coefficients."""

    tag: str
    rule: Callable[[int], object]

    def __call__(self, k: int):
        if k < 1:
            raise ValueError("scaling weights are indexed from 1")
        w = self.rule(k)
        if w == 0:
            raise ValueError(f"scaling weight w_{k} is zero")
        return w

    @classmethod
    def custom(cls, weights: Sequence) -> "ScalingSequence":
        ws = tuple(_coerce(w) for w in weights)
        return cls("custom", lambda k: ws[k - 1])


SQUARES = ScalingSequence("squares", lambda k: Fraction(k * k))
# k(k+1)/2: the 1, 3, 6, ... weights of the symmetric Eulerian case
TRIANGULAR = ScalingSequence("triangular-doubled", lambda k: Fraction(k * (k + 1), 2))

SCALINGS = {"squares": SQUARES, "triangular-doubled": TRIANGULAR, "triangular": TRIANGULAR}


def get_scaling(name: str | ScalingSequence) -> ScalingSequence:
    if isinstance(name, ScalingSequence):
        return name
    try:
        return SCALINGS[name]
    except KeyError:
        raise ValueError(f"unknown scaling {name!r}; choose from {sorted(SCALINGS)}") from None


def cf_map(
    J: JFraction,
    direction: str,
    w: ScalingSequence | str = SQUARES,
    require_polynomial: bool = False,
) -> JFraction:
    """CF-level form of the transformation.

    ``T_inv``: alphas become partial sums, ``beta_k -> w_k beta_k``.
    ``T``: alphas become first differences, ``beta_k -> beta_k / w_k``.
    """
    w = get_scaling(w)
    if direction == "T_inv":
        alpha, acc = [], _ZERO
        for a in J.alpha:
            acc = acc + a
            alpha.append(acc)
        beta = [b * w(k) for k, b in enumerate(J.beta, start=1)]
    elif direction == "T":
        alpha = [J.alpha[0]] + [J.alpha[k] - J.alpha[k - 1] for k in range(1, J.depth)]
        beta = [b / w(k) for k, b in enumerate(J.beta, start=1)]
    else:
        raise ValueError(f"direction must be 'T' or 'T_inv', got {direction!r}")
    out = JFraction(alpha, beta)
    if require_polynomial:
        for c in out.alpha + out.beta:
            if isinstance(c, RatFunc) and not c.is_polynomial():
                raise NonPolynomialResult(f"coefficient {c} is not a polynomial in y")
    return out
