"""Exact coefficient tower: rationals, polynomials over Q, and Q(y).

Rationals are :class:`fractions.Fraction`.  :class:`Poly` is a dense
univariate polynomial over Q and :class:`RatFunc` an element of its fraction
field, kept in lowest terms with a monic denominator.  Both interoperate with
``int`` and ``Fraction`` operands so that the series engine can run over any
of the three fields without knowing which one it has.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _Rational
from typing import Iterable, Sequence

from .errors import DivisionByZero, NotDivisible

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _strip(coeffs: Iterable) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Poly:
    """Dense polynomial in ``y`` with rational coefficients, index = degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _strip(coeffs)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def y(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> float | int:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else _ZERO

    def __call__(self, value):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs or self.lc == 1:
            return self
        inv = 1 / self.lc
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, _Rational)):
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out) if len(self.coeffs) == len(o.coeffs) else Poly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, _Rational)):
            if other == 0:
                return Poly._raw(())
            return Poly._raw(tuple(c * other for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly._raw((_ONE,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        if len(rem) - 1 < dq:
            return Poly._raw(()), self
        inv_lc = 1 / other.lc
        quot = [_ZERO] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c * inv_lc
            quot[i - dq] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - dq + j] -= q * oc
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)[0]

    def __mod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)[1]

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)

    def __truediv__(self, other):
        if isinstance(other, (int, _Rational)):
            if other == 0:
                raise DivisionByZero("polynomial division by zero")
            return Poly._raw(tuple(c / other for c in self.coeffs))
        return NotImplemented

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant())
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_poly(self.coeffs, "y")


def format_poly(coeffs: Sequence, var: str = "y") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and c == 1:
            s = mono
        elif mono and c == -1:
            s = "-" + mono
        else:
            cs = str(c)
            if mono:
                cs = f"({cs})" if "/" in cs else cs
                s = f"{cs}*{mono}"
            else:
                s = cs
        terms.append(s)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def poly_div_exact(p: Poly, q: Poly) -> Poly:
    """Return ``r`` with ``r * q == p``; raise :class:`NotDivisible` otherwise."""
    quot, rem = p.divmod(q)
    if not rem.is_zero():
        raise NotDivisible(f"{q} does not divide {p} (remainder {rem})")
    return quot


class RatFunc:
    """Element of Q(y) in canonical form: reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        n = Poly._coerce(num) if not isinstance(num, Poly) else num
        if n is None:
            raise TypeError(f"cannot build RatFunc numerator from {num!r}")
        if den is None:
            d = Poly._raw((_ONE,))
        else:
            d = Poly._coerce(den) if not isinstance(den, Poly) else den
            if d is None:
                raise TypeError(f"cannot build RatFunc denominator from {den!r}")
        self.num, self.den = _normalize(n, d)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        r = object.__new__(cls)
        r.num = num
        r.den = den
        return r

    @classmethod
    def y(cls) -> "RatFunc":
        return cls._raw(Poly.y(), Poly._raw((_ONE,)))

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> Poly:
        return poly_div_exact(self.num, self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __call__(self, value):
        return self.num(value) / self.den(value)

    @staticmethod
    def _coerce(other) -> "RatFunc | None":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc._raw(other, Poly._raw((_ONE,)))
        if isinstance(other, (int, _Rational)):
            return RatFunc._raw(Poly((other,)), Poly._raw((_ONE,)))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            if self.den.is_one():
                return RatFunc._raw(self.num + o.num, self.den)
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, _Rational)):
            if other == 0:
                return RatFunc._raw(Poly._raw(()), Poly._raw((_ONE,)))
            return RatFunc._raw(self.num * other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den.is_one() and o.den.is_one():
            return RatFunc._raw(self.num * o.num, self.den)
        # cross-cancel keeps intermediate degrees small
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n = (self.num // g1) * (o.num // g2)
        d = (self.den // g2) * (o.den // g1)
        return RatFunc._raw(*_monic_den(n, d))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise DivisionByZero("inverse of zero in Q(y)")
        return RatFunc._raw(*_monic_den(self.den, self.num))

    def __truediv__(self, other):
        if isinstance(other, (int, _Rational)):
            if other == 0:
                raise DivisionByZero("division by zero in Q(y)")
            return RatFunc._raw(self.num / other, self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc._raw(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.is_one():
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __repr__(self) -> str:
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _monic_den(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    lc = den.lc
    if lc != 1:
        inv = 1 / lc
        num = Poly._raw(tuple(c * inv for c in num.coeffs))
        den = Poly._raw(tuple(c * inv for c in den.coeffs))
    return num, den


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise DivisionByZero("rational function with zero denominator")
    if num.is_zero():
        return Poly._raw(()), Poly._raw((_ONE,))
    if den.is_constant():
        return _monic_den(num, den)
    g = poly_gcd(num, den)
    if not g.is_one():
        num, den = num // g, den // g
    return _monic_den(num, den)


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical form of ``num/den``: reduced, denominator monic."""
    return RatFunc(num, den)


def as_polynomial(c) -> Poly:
    """View a field element of Q or Q(y) as a polynomial in y.

    Raises :class:`NotDivisible` when ``c`` is a genuine fraction.
    """
    if isinstance(c, RatFunc):
        return c.as_poly()
    if isinstance(c, Poly):
        return c
    return Poly((c,))


Y = RatFunc.y()
