"""Formal Sumudu transform, the transformation T and its inverse, INVERT.

The forward transformation takes an exponential generating function ``E``
through three stages::

    invert:  1/E
    sumudu:  g = S(1/E)           (coefficientwise t^n/n! -> x^n)
    revert:  G = (1/x) Rev(x g)

and the inverse runs the stages backwards.  Errors raised inside a stage
carry the stage name in ``err.stage``.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import FlavorMismatch, NonUnitConstantTerm, RiordanError
from .series import Series, series_mul, series_recip, shift_revert


@dataclass(frozen=True)
class EgfSeries:
    """A series read as ``sum a_n x^n / n!``; ``series`` stores ``a_n / n!``."""

    series: Series

    @classmethod
    def from_terms(cls, terms, order: int | None = None) -> "EgfSeries":
        return cls(Series.from_egf_terms(terms, order))

    @property
    def order(self) -> int:
        return self.series.order

    def terms(self) -> list:
        return [c * factorial(n) for n, c in enumerate(self.series.coeffs)]


@dataclass(frozen=True)
class OgfSeries:
    """A series read as ``sum a_n x^n``."""

    series: Series

    @classmethod
    def from_terms(cls, terms, order: int | None = None) -> "OgfSeries":
        return cls(Series(terms, order))

    @property
    def order(self) -> int:
        return self.series.order

    def terms(self) -> list:
        return list(self.series.coeffs)


def _expect(value, kind, op: str):
    if not isinstance(value, kind):
        raise FlavorMismatch(
            f"{op} expects {kind.__name__}, got {type(value).__name__}"
        )
    return value.series


@contextmanager
def _stage(name: str):
    try:
        yield
    except RiordanError as err:
        if err.stage is None:
            err.stage = name
        raise


def sumudu(e: EgfSeries) -> OgfSeries:
    """Formal Sumudu transform: multiply the n-th coefficient by n!."""
    s = _expect(e, EgfSeries, "sumudu")
    return OgfSeries(Series(c * factorial(n) for n, c in enumerate(s.coeffs)))


def sumudu_inv(g: OgfSeries) -> EgfSeries:
    s = _expect(g, OgfSeries, "sumudu_inv")
    return EgfSeries(Series(c / factorial(n) for n, c in enumerate(s.coeffs)))


def transform_T(E: EgfSeries) -> OgfSeries:
    s = _expect(E, EgfSeries, "transform_T")
    with _stage("invert"):
        inv = series_recip(s)
    with _stage("sumudu"):
        g = sumudu(EgfSeries(inv)).series
    with _stage("revert"):
        G = shift_revert(g)
    return OgfSeries(G)


def transform_T_inv(G: OgfSeries) -> EgfSeries:
    s = _expect(G, OgfSeries, "transform_T_inv")
    with _stage("revert"):
        g = shift_revert(s)
    with _stage("sumudu"):
        e = sumudu_inv(OgfSeries(g)).series
    with _stage("invert"):
        E = series_recip(e)
    return EgfSeries(E)


def invert_transform(a: OgfSeries, r) -> OgfSeries:
    """INVERT(r): ``A(x) / (1 - r x A(x))``.

    INVERT(r) followed by INVERT(-r) is the identity.
    """
    s = _expect(a, OgfSeries, "invert_transform")
    if s.order and s.coeffs[0] != 1:
        raise NonUnitConstantTerm("INVERT needs a_0 = 1")
    r = Fraction(r) if isinstance(r, int) else r
    denom = Series.one(s.order) - s.shift_up().truncate(s.order).scale(r)
    return OgfSeries(series_mul(s, series_recip(denom)))
