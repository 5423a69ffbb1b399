"""Exact integer and rational primitives.

Integers are plain Python ``int`` (arbitrary precision, canonical by
construction) and rationals are :class:`fractions.Fraction`, which is
normalized on every construction (coprime, positive denominator).
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC

Integer = int
Rational = Fraction


class ExactnessError(ArithmeticError):
    """A value that must be an exact integer turned out not to be one."""


class RouteMismatchError(ArithmeticError):
    """Two independent computation routes disagreed."""


def binomial(m: int, k: int) -> int:
    """C(m, k) by the multiplicative formula; 0 when k is outside [0, m]."""
    if m < 0:
        raise ValueError(f"binomial: m must be nonnegative, got {m}")
    if k < 0 or k > m:
        return 0
    k = min(k, m - k)
    c = 1
    for i in range(k):
        # c == C(m, i) and C(m, i) * (m - i) == C(m, i + 1) * (i + 1)
        c = c * (m - i) // (i + 1)
    return c


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial: m must be nonnegative, got {m}")
    return math.factorial(m)


def odd_double_factorial(r: int) -> int:
    """(2r-1)(2r-3)...3*1 = (2r)! / (2^r r!), with the empty product 1 at r=0."""
    if r < 0:
        raise ValueError(f"odd_double_factorial: r must be nonnegative, got {r}")
    out = 1
    for j in range(1, 2 * r, 2):
        out *= j
    return out


def as_integer(value: int | Fraction, what: str = "value") -> int:
    """Return ``value`` as an int, raising :class:`ExactnessError` if it is fractional."""
    if isinstance(value, bool):
        raise TypeError(f"{what}: bool is not an exact number")
    if isinstance(value, int):
        return value
    if isinstance(value, _RationalABC):
        if value.denominator != 1:
            raise ExactnessError(f"{what} is not integral: {value}")
        return int(value.numerator)
    raise TypeError(f"{what}: expected int or Fraction, got {type(value).__name__}")


def pow2(e: int) -> Fraction:
    """2**e as an exact rational, for any integer e."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def format_exact(value: int | Fraction) -> str:
    """Full decimal rendering; non-integral rationals as ``num/den``."""
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))
