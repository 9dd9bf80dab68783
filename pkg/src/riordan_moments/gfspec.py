"""Uniform input language for generating functions on the command line.

A :class:`GfSpec` names exactly one of: a rational function (numerator and
denominator coefficient lists), a J-fraction, a Riordan pair, an Eulerian
parameter pair ``(a, b)``, or an embedded OEIS fixture.  Rational functions
may also be written infix, e.g. ``"x(1-x)/(1-x+x^2)"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import RiordanError
from .kernel import Poly, RatFunc

VARIANTS = ("rational", "jfraction", "riordan", "eulerian", "fixture")


class SpecError(RiordanError, ValueError):
    pass


# infix parser ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([xX])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise SpecError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        num, var, op = m.groups()
        if num is not None:
            out.append(("num", num))
        elif var is not None:
            out.append(("x", "x"))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise SpecError(f"expected {value or 'token'} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> RatFunc:
        val = self.expr()
        if self.peek()[0] is not None:
            raise SpecError(f"trailing input in {self.text!r}")
        return val

    def expr(self) -> RatFunc:
        val = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> RatFunc:
        val = self.unary()
        while True:
            tok = self.peek()
            if tok in (("op", "*"), ("op", "/")):
                self.take()
                rhs = self.unary()
                if tok[1] == "*":
                    val = val * rhs
                else:
                    if rhs.is_zero():
                        raise SpecError(f"division by zero in {self.text!r}")
                    val = val / rhs
            elif tok[0] in ("num", "x") or tok == ("op", "("):
                val = val * self.power()  # implicit multiplication
            else:
                return val

    def unary(self) -> RatFunc:
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RatFunc:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            if self.peek() == ("op", "("):
                self.take()
                if self.peek() == ("op", "-"):
                    self.take()
                    sign = -sign
                exp = int(self.take()[1])
                self.take(")")
            else:
                kind, val = self.take()
                if kind != "num":
                    raise SpecError(f"exponent must be an integer in {self.text!r}")
                exp = int(val)
            return base ** (sign * exp)
        return base

    def atom(self) -> RatFunc:
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return RatFunc(Poly((int(val),)))
        if kind == "x":
            self.take()
            return RatFunc(Poly((0, 1)))
        if (kind, val) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise SpecError(f"unexpected token {val!r} in {self.text!r}")


def parse_rational(text: str) -> tuple[list[Fraction], list[Fraction]]:
    """Infix rational function in ``x`` to (numerator, denominator) coefficients."""
    r = _Parser(text).parse()
    num = list(r.num.coeffs) or [Fraction(0)]
    den = list(r.den.coeffs)
    if den[0] != 0:
        # power-series normal form: constant term of the denominator is 1
        c = den[0]
        num, den = [a / c for a in num], [d / c for d in den]
    return num, den


def parse_number_list(text: str | Sequence) -> list[Fraction]:
    if not isinstance(text, str):
        return [Fraction(t) for t in text]
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        return [Fraction(p) for p in parts]
    except ValueError as err:
        raise SpecError(f"bad number list {text!r}: {err}") from None


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# the spec type -------------------------------------------------------------

@dataclass(frozen=True)
class GfSpec:
    rational: tuple | None = None   # (num coeffs, den coeffs)
    jfraction: tuple | None = None  # (alpha, beta)
    riordan: tuple | None = None    # (g spec, f spec, flavor); g/f are (num, den)
    eulerian: tuple | None = None   # (a, b)
    fixture: str | None = None

    def __post_init__(self):
        populated = [v for v in VARIANTS if getattr(self, v) is not None]
        if len(populated) != 1:
            raise SpecError(f"exactly one variant must be given, got {populated or 'none'}")

    @property
    def variant(self) -> str:
        return next(v for v in VARIANTS if getattr(self, v) is not None)

    # construction helpers
    @classmethod
    def from_infix(cls, text: str) -> "GfSpec":
        num, den = parse_rational(text)
        return cls(rational=(tuple(num), tuple(den)))

    @classmethod
    def from_lists(cls, num, den=(1,)) -> "GfSpec":
        return cls(rational=(tuple(parse_number_list(num)), tuple(parse_number_list(den))))

    @classmethod
    def from_jfraction(cls, alpha, beta) -> "GfSpec":
        return cls(jfraction=(tuple(parse_number_list(alpha)), tuple(parse_number_list(beta))))

    # serialisation
    def to_dict(self) -> dict:
        v = self.variant
        if v == "rational":
            num, den = self.rational
            return {"rational": {"num": [_fmt(c) for c in num], "den": [_fmt(c) for c in den]}}
        if v == "jfraction":
            alpha, beta = self.jfraction
            return {"jfraction": {"alpha": [_fmt(c) for c in alpha], "beta": [_fmt(c) for c in beta]}}
        if v == "riordan":
            (gn, gd), (fn, fd), flavor = self.riordan
            return {"riordan": {
                "g": {"num": [_fmt(c) for c in gn], "den": [_fmt(c) for c in gd]},
                "f": {"num": [_fmt(c) for c in fn], "den": [_fmt(c) for c in fd]},
                "flavor": flavor,
            }}
        if v == "eulerian":
            a, b = self.eulerian
            return {"eulerian": {"a": _fmt(a), "b": _fmt(b)}}
        return {"fixture": self.fixture}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "GfSpec":
        if not isinstance(d, dict):
            raise SpecError("spec JSON must be an object")
        # bare {"alpha": .., "beta": ..} as emitted by `cf --json`
        if "alpha" in d and "beta" in d and len(d) == 2:
            return cls.from_jfraction(d["alpha"], d["beta"])
        keys = [k for k in d if k in VARIANTS]
        if len(keys) != 1 or len(d) != 1:
            raise SpecError(f"spec JSON needs exactly one of {VARIANTS}")
        k = keys[0]
        body = d[k]
        if k == "rational":
            return cls.from_lists(body["num"], body.get("den", [1]))
        if k == "jfraction":
            return cls.from_jfraction(body["alpha"], body["beta"])
        if k == "riordan":
            def part(p):
                if isinstance(p, str):
                    n, dd = parse_rational(p)
                    return tuple(n), tuple(dd)
                return tuple(parse_number_list(p["num"])), tuple(parse_number_list(p.get("den", [1])))
            return cls(riordan=(part(body["g"]), part(body["f"]), body.get("flavor", "ordinary")))
        if k == "eulerian":
            return cls(eulerian=(Fraction(body["a"]), Fraction(body["b"])))
        return cls(fixture=str(body))

    @classmethod
    def from_json(cls, text: str) -> "GfSpec":
        try:
            return cls.from_dict(json.loads(text))
        except (KeyError, TypeError, json.JSONDecodeError) as err:
            raise SpecError(f"bad spec JSON: {err}") from None


# resolution ----------------------------------------------------------------

def rational_series(num, den, order: int):
    from .series import Series, series_mul, series_recip

    if not den or den[0] == 0:
        raise SpecError("denominator vanishes at x = 0; not a power series")
    return series_mul(Series(num, order), series_recip(Series(den, order)))


def resolve(spec: GfSpec, order: int, reading: str):
    """Expand ``spec`` to ``order`` terms as an ``EgfSeries`` or ``OgfSeries``.

    Rational functions and Eulerian parameters name a function, read per
    ``reading``; J-fractions, Riordan pairs (through their moments) and
    fixtures name a sequence of terms.
    """
    from .cf import JFraction, jfraction_to_series
    from .eulerian import EulerianParams, G_series, eulerian_egf
    from .fixtures import load_fixture
    from .riordan import RiordanPair, riordan_inverse
    from .series import Series
    from .transforms import EgfSeries, OgfSeries

    if reading not in ("egf", "ogf"):
        raise ValueError(f"reading must be 'egf' or 'ogf', got {reading!r}")
    wrap = EgfSeries if reading == "egf" else OgfSeries
    v = spec.variant
    if v == "rational":
        return wrap(rational_series(*spec.rational, order))
    if v == "eulerian":
        p = EulerianParams(*spec.eulerian, N=order)
        return eulerian_egf(p) if reading == "egf" else G_series(p)
    if v == "jfraction":
        alpha, beta = spec.jfraction
        J = JFraction(alpha, beta)
        terms = jfraction_to_series(J, min(order, J.trusted_order)).terms()
    elif v == "riordan":
        (gn, gd), (fn, fd), flavor = spec.riordan
        R = RiordanPair(rational_series(gn, gd, order), rational_series(fn, fd, order), flavor)
        moments = riordan_inverse(R).g
        terms = EgfSeries(moments).terms() if flavor == "exponential" else list(moments.coeffs)
    else:
        terms = list(load_fixture(spec.fixture).terms)
    if len(terms) < order:
        raise SpecError(f"{v} input supplies only {len(terms)} terms, {order} requested")
    return wrap.from_terms(terms[:order], order)
