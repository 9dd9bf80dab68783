"""Ordinary and exponential Riordan arrays.

An ordinary pair ``(g, f)`` has entries ``[x^n] g f^k``; an exponential pair
``[g, f]`` has ``(n!/k!) [x^n] g f^k``.  Both flavours store ``g`` and ``f``
as the Taylor coefficients of the functions, and share the group law
``(g, f) (h, l) = (g h(f), l(f))`` and inverse ``(1/g(fbar), fbar)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import BadConstantTerm, FlavorMismatch, NotRevertible, OrderMismatch
from .series import (
    Series,
    catalan_series,
    series_compose,
    series_mul,
    series_recip,
    series_revert,
)
from .transforms import OgfSeries

_ZERO = Fraction(0)
_ONE = Fraction(1)

ORDINARY = "ordinary"
EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class RiordanPair:
    g: Series
    f: Series
    flavor: str = ORDINARY

    def __post_init__(self):
        if self.flavor not in (ORDINARY, EXPONENTIAL):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.g.order == 0 or self.g.coeffs[0] != 1:
            raise BadConstantTerm("Riordan g needs g_0 = 1")
        if self.f.order < 2 or self.f.coeffs[0] != 0 or self.f.coeffs[1] == 0:
            raise NotRevertible("Riordan f needs f_0 = 0 and f_1 != 0")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    @classmethod
    def identity(cls, order: int, flavor: str = ORDINARY) -> "RiordanPair":
        return cls(Series.one(order), Series.x(order), flavor)


class LowerTriangular:
    """Square lower-triangular matrix; row ``n`` keeps ``n + 1`` entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(r) for r in rows)
        for n, r in enumerate(rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} has {len(r)} entries, expected {n + 1}")
        self.rows = rows

    @classmethod
    def from_square(cls, m: Sequence[Sequence]) -> "LowerTriangular":
        for i, row in enumerate(m):
            if any(c != 0 for c in row[i + 1:]):
                raise ValueError(f"row {i} has entries above the diagonal")
        return cls([row[: i + 1] for i, row in enumerate(m)])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, nk: tuple[int, int]):
        n, k = nk
        return self.rows[n][k] if k <= n else _ZERO

    def column(self, k: int) -> list:
        return [self.rows[n][k] for n in range(k, self.size)]

    def to_square(self) -> list[list]:
        n = self.size
        return [list(r) + [_ZERO] * (n - len(r)) for r in self.rows]

    def __matmul__(self, other: "LowerTriangular") -> "LowerTriangular":
        return LowerTriangular.from_square(matmul(self.to_square(), other.to_square()))

    def inverse(self) -> "LowerTriangular":
        return LowerTriangular.from_square(lower_inverse(self.to_square()))

    def __eq__(self, other):
        if not isinstance(other, LowerTriangular):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"LowerTriangular({[[str(c) for c in r] for r in self.rows]})"


# dense exact matrix helpers --------------------------------------------

def identity_matrix(n: int) -> list[list]:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = []
    for row in a:
        new = []
        for j in range(cols):
            acc = _ZERO
            for k in range(inner):
                if row[k] != 0 and b[k][j] != 0:
                    acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def lower_inverse(m: Sequence[Sequence]) -> list[list]:
    """Inverse of a lower-triangular matrix by forward substitution."""
    n = len(m)
    inv = [[_ZERO] * n for _ in range(n)]
    for i in range(n):
        if m[i][i] == 0:
            raise ZeroDivisionError(f"zero diagonal entry at {i}")
        inv[i][i] = _ONE / m[i][i]
        for j in range(i):
            acc = _ZERO
            for k in range(j, i):
                if m[i][k] != 0 and inv[k][j] != 0:
                    acc = acc + m[i][k] * inv[k][j]
            inv[i][j] = -acc / m[i][i]
    return inv


# group operations -------------------------------------------------------

def riordan_matrix(R: RiordanPair, N: int | None = None) -> LowerTriangular:
    if N is None:
        N = R.order
    if N > R.order:
        raise OrderMismatch(f"matrix of size {N} needs series of order {N}, have {R.order}")
    g, f = R.g.truncate(N), R.f.truncate(N)
    cols = []
    col = g
    for k in range(N):
        cols.append(col.coeffs)
        col = series_mul(col, f)
    rows = []
    for n in range(N):
        if R.flavor == EXPONENTIAL:
            nf = factorial(n)
            rows.append([cols[k][n] * Fraction(nf, factorial(k)) for k in range(n + 1)])
        else:
            rows.append([cols[k][n] for k in range(n + 1)])
    return LowerTriangular(rows)


def riordan_inverse(R: RiordanPair) -> RiordanPair:
    fbar = series_revert(R.f)
    g = R.g.truncate(fbar.order)
    return RiordanPair(series_recip(series_compose(g, fbar)), fbar, R.flavor)


def riordan_multiply(R1: RiordanPair, R2: RiordanPair) -> RiordanPair:
    if R1.flavor != R2.flavor:
        raise FlavorMismatch(f"cannot multiply {R1.flavor} by {R2.flavor} arrays")
    g = series_mul(R1.g, series_compose(R2.g, R1.f))
    f = series_compose(R2.f, R1.f)
    return RiordanPair(g, f, R1.flavor)


def apply_to_series(R: RiordanPair, h: Series) -> Series:
    """Fundamental theorem: ``(g, f) . h = g h(f)`` (ordinary flavour)."""
    if R.flavor != ORDINARY:
        raise FlavorMismatch("the ordinary fundamental theorem needs an ordinary pair")
    return series_mul(R.g, series_compose(h, R.f))


# orthogonal polynomials and moments -------------------------------------

@dataclass(frozen=True)
class OrthoPolyParams:
    """``((1 + lam x + mu x^2)/(1 + alpha x + beta x^2), x/(1 + alpha x + beta x^2))``."""

    lam: object
    mu: object
    alpha: object
    beta: object

    def riordan_pair(self, order: int) -> RiordanPair:
        d = Series((_ONE, self.alpha, self.beta), order)
        d_inv = series_recip(d)
        g = series_mul(Series((_ONE, self.lam, self.mu), order), d_inv)
        f = series_mul(Series.x(order), d_inv)
        return RiordanPair(g, f, ORDINARY)

    def jfraction(self, depth: int):
        from .cf import JFraction

        return JFraction(
            [self.alpha - self.lam] + [self.alpha] * (depth - 1),
            [self.beta - self.mu] + [self.beta] * (depth - 2) if depth > 1 else [],
        )


def moments_closed_form(p: OrthoPolyParams, N: int) -> Series:
    """``mu(x) = 1/(1 - u x) c(x(lam - x(alpha lam - beta - lam^2)) / (1 - u x)^2)``
    with ``u = alpha - 2 lam``; valid only when ``p.mu == 0``."""
    if p.mu != 0:
        raise ValueError("the radical-free closed form needs mu = 0")
    u = p.alpha - 2 * p.lam
    lead = series_recip(Series((_ONE, -u), N))
    inner_num = Series((_ZERO, p.lam, -(p.alpha * p.lam - p.beta - p.lam * p.lam)), N)
    inner = series_mul(inner_num, series_mul(lead, lead))
    return series_mul(lead, series_compose(catalan_series(N), inner))


def moments_ordinary(p: OrthoPolyParams, N: int, method: str = "auto") -> OgfSeries:
    """Moment sequence of the orthogonal family defined by ``p``.

    ``method`` is ``"closed-form"`` (needs ``mu == 0``), ``"inverse"`` (first
    column of the inverse array) or ``"auto"``.
    """
    if method == "auto":
        method = "closed-form" if p.mu == 0 else "inverse"
    if method == "closed-form":
        return OgfSeries(moments_closed_form(p, N))
    if method == "inverse":
        inv = riordan_inverse(p.riordan_pair(N))
        return OgfSeries(inv.g)
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class RecurrenceReport:
    holds: bool
    rows_checked: int
    first_failure: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _poly_rows(m: LowerTriangular) -> list[list]:
    return [list(r) for r in m.rows]


def _ppoly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _ppoly_scale(a: list, c) -> list:
    return [x * c for x in a]


def _ppoly_times_x_minus(a: list, c) -> list:
    # (x - c) a(x)
    return _ppoly_sub([_ZERO] + a, _ppoly_scale(a, c))


def _ppoly_eq(a: list, b: list) -> bool:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return all(x == y for x, y in zip(a, b))


def check_recurrence(rows: Sequence[Sequence], p: OrthoPolyParams) -> RecurrenceReport:
    """Check ``P_n = (x - alpha) P_{n-1} - beta P_{n-2}`` on coefficient rows."""
    lam, mu, al, be = p.lam, p.mu, p.alpha, p.beta
    seeds = [
        [_ONE],
        [lam - al, _ONE],
        [al * al - al * lam - be + mu, lam - 2 * al, _ONE],
    ]
    rows = [list(r) for r in rows]
    for n, seed in enumerate(seeds[: len(rows)]):
        if not _ppoly_eq(rows[n], seed):
            return RecurrenceReport(False, n + 1, n, f"seed P_{n} mismatch")
    for n in range(3, len(rows)):
        expect = _ppoly_sub(
            _ppoly_times_x_minus(rows[n - 1], al), _ppoly_scale(rows[n - 2], be)
        )
        if not _ppoly_eq(rows[n], expect):
            return RecurrenceReport(False, n + 1, n, f"recurrence fails at P_{n}")
    return RecurrenceReport(True, len(rows))


def orthopoly_recurrence_check(p: OrthoPolyParams, N: int) -> RecurrenceReport:
    """Read the polynomial rows off the array and check the recurrence."""
    return check_recurrence(_poly_rows(riordan_matrix(p.riordan_pair(N), N)), p)


# production matrices ----------------------------------------------------

def az_sequences(R: RiordanPair) -> tuple[Series, Series]:
    """``A = f'(fbar)`` and ``Z = g'(fbar)/g(fbar)`` of an exponential array."""
    if R.flavor != EXPONENTIAL:
        raise FlavorMismatch("A/Z sequences are defined here for exponential arrays")
    fbar = series_revert(R.f)
    A = series_compose(R.f.derivative(), fbar)
    gf = series_compose(R.g, fbar)
    Z = series_mul(series_compose(R.g.derivative(), fbar), series_recip(gf))
    return A, Z


def production_matrix_bruteforce(R: RiordanPair, N: int) -> list[list]:
    """``P = R^{-1} Rbar`` from explicit matrices (needs order ``N + 1``)."""
    M = riordan_matrix(R, N + 1).to_square()
    inv = lower_inverse([row[:N] for row in M[:N]])
    bar = [row[:N] for row in M[1: N + 1]]
    return matmul(inv, bar)


def production_matrix(R: RiordanPair, N: int | None = None, method: str = "auto") -> list[list]:
    """``N x N`` production matrix.

    Exponential arrays default to the rule
    ``P[n][k] = (n!/k!) (z_{n-k} + k a_{n-k+1})`` from the A and Z sequences;
    ordinary arrays use the matrix product.
    """
    if method == "auto":
        method = "az" if R.flavor == EXPONENTIAL else "matrix"
    if method == "matrix":
        if N is None:
            N = R.order - 1
        return production_matrix_bruteforce(R, N)
    if method != "az":
        raise ValueError(f"unknown method {method!r}")
    A, Z = az_sequences(R)
    if N is None:
        N = min(A.order, Z.order)
    if N > A.order or N > Z.order:
        raise OrderMismatch(f"size {N} exceeds the A/Z order {min(A.order, Z.order)}")
    return [
        [_production_entry(A, Z, n, k) for k in range(N)]
        for n in range(N)
    ]


def _production_entry(A: Series, Z: Series, n: int, k: int):
    if k > n + 1:
        return _ZERO
    d = n - k
    z = Z.coeffs[d] if 0 <= d < Z.order else _ZERO
    a = A.coeffs[d + 1] if 0 <= d + 1 < A.order else _ZERO
    return (z + a * k) * Fraction(factorial(n), factorial(k))
