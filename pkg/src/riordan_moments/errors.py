"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RiordanError(Exception):
    """Base class. ``stage`` is filled in by multi-stage pipelines."""

    stage: str | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.stage:
            return f"[stage: {self.stage}] {msg}"
        return msg


# kernel
class NotDivisible(RiordanError, ArithmeticError):
    pass


class DivisionByZero(RiordanError, ZeroDivisionError):
    pass


# series
class NonUnitConstantTerm(RiordanError, ArithmeticError):
    pass


class NonzeroInnerConstant(RiordanError, ValueError):
    pass


class NotRevertible(RiordanError, ValueError):
    pass


class BadConstantTerm(RiordanError, ValueError):
    pass


class OrderMismatch(RiordanError, ValueError):
    pass


# transforms / riordan
class FlavorMismatch(RiordanError, TypeError):
    pass


class NonPolynomialResult(RiordanError, ArithmeticError):
    pass


# continued fractions
class InsufficientDepth(RiordanError, ValueError):
    pass


class InsufficientCoefficients(RiordanError, ValueError):
    pass


class ZeroHankel(RiordanError, ArithmeticError):
    """A Hankel pivot vanished during J-fraction extraction.

    ``depth`` is the number of alpha coefficients recovered before the
    failure and ``partial`` holds the fraction extracted so far.
    """

    def __init__(self, message: str, depth: int = 0, partial=None):
        super().__init__(message)
        self.depth = depth
        self.partial = partial


# fixtures
class FixtureError(RiordanError):
    pass


class MalformedLine(FixtureError, ValueError):
    def __init__(self, lineno: int, line: str):
        super().__init__(f"malformed b-file line {lineno}: {line!r}")
        self.lineno = lineno


class NonContiguousIndex(FixtureError, ValueError):
    def __init__(self, lineno: int, expected: int, got: int):
        super().__init__(f"line {lineno}: expected index {expected}, got {got}")
        self.lineno = lineno


class NetworkDisabled(FixtureError):
    pass


class NotFound(FixtureError, KeyError):
    def __str__(self) -> str:  # KeyError would repr() the message
        return Exception.__str__(self)


class ParseError(FixtureError, ValueError):
    pass
