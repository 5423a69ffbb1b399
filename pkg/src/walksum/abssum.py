"""The absolute binomial sums S_r(n) = sum_{k=0}^{2n} C(2n, k) |n - k|^r.

Five routes are implemented and expected to agree exactly:

``brute``      literal term-by-term summation
``symmetric``  2 sum_{k=0}^{n} C(2n, n-k) k^r - C(2n, n) [r == 0]
``recursive``  S_{r+2}(n) = n^2 S_r(n) - 2n(2n-1) S_r(n-1) from the rows
               S_0(m) = 4^m and S_1(m) = m C(2m, m)
``closed``     P_r / Q_r polynomials times n C(2n, n) or 2^(2n - r/2)
``genfunc``    (even r only) Taylor coefficients of 2^n (1 + cosh t)^n

At n = 0 the sum is |0|^r, i.e. 1 for r = 0 and 0 otherwise.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, NamedTuple

from .exactnum import ExactnessError, as_integer, binomial, factorial, pow2
from .families import family_P, family_Q

__all__ = [
    "SumQuery",
    "sum_bruteforce",
    "sum_symmetric",
    "sum_recursive",
    "sum_closed_form",
    "sum_genfunc_even",
    "halfnormal_constant",
    "asymptotic_ratio",
    "METHODS",
    "compute",
]


class SumQuery(NamedTuple):
    r: int
    n: int

    def validate(self) -> "SumQuery":
        if self.r < 0 or self.n < 0:
            raise ValueError(f"S_r(n) needs r >= 0 and n >= 0, got r={self.r}, n={self.n}")
        return self


def _check(r: int, n: int) -> None:
    SumQuery(r, n).validate()


def sum_bruteforce(r: int, n: int) -> int:
    _check(r, n)
    # Python's 0**0 == 1 matches |n-k|^0 at k == n
    return sum(binomial(2 * n, k) * abs(n - k) ** r for k in range(2 * n + 1))


def sum_symmetric(r: int, n: int) -> int:
    _check(r, n)
    s = 2 * sum(binomial(2 * n, n - k) * k**r for k in range(n + 1))
    if r == 0:
        s -= binomial(2 * n, n)
    return s


def _base_row(parity: int, m: int) -> int:
    return 4**m if parity == 0 else m * binomial(2 * m, m)


@lru_cache(maxsize=None)
def _recursion_row(parity: int, steps: int, n: int) -> tuple[int, ...]:
    """(S_{parity + 2 steps}(m) for m = 0..n).

    Each step reads row m and row m-1 of the previous level; at m = 0 the
    factor 2m(2m-1) vanishes, so S(-1) is never needed.
    """
    if steps == 0:
        return tuple(_base_row(parity, m) for m in range(n + 1))
    prev = _recursion_row(parity, steps - 1, n)
    row = [0]
    for m in range(1, n + 1):
        row.append(m * m * prev[m] - 2 * m * (2 * m - 1) * prev[m - 1])
    return tuple(row)


def sum_recursive(r: int, n: int) -> int:
    _check(r, n)
    return _recursion_row(r % 2, r // 2, n)[n]


def sum_closed_form(r: int, n: int) -> int:
    _check(r, n)
    half = r // 2
    if r % 2:
        p = family_P(half)[half]
        return as_integer(p(n) * n * binomial(2 * n, n), f"S_{r}({n}) closed form")
    q = family_Q(half)[half]
    value = q(n) * pow2(2 * n - half)
    if value.denominator != 1:
        raise ExactnessError(f"Q_{half}({n}) * 2^{2 * n - half} = {value} is not an integer")
    return int(value)


@lru_cache(maxsize=None)
def _cosh_power_series(n: int, order: int) -> tuple[Fraction, ...]:
    """Coefficients of u^j, j = 0..order, of 2^n (1 + cosh t)^n with u = t^2."""
    base = [Fraction(2)] + [Fraction(1, factorial(2 * j)) for j in range(1, order + 1)]
    out = [Fraction(1)] + [Fraction(0)] * order
    for _ in range(n):
        nxt = [Fraction(0)] * (order + 1)
        for i, a in enumerate(out):
            if a:
                for j in range(order + 1 - i):
                    nxt[i + j] += a * base[j]
        out = nxt
    scale = 2**n
    return tuple(c * scale for c in out)


def sum_genfunc_even(r_half: int, n: int) -> int:
    """S_{2 r_half}(n) as (2 r_half)! times the t^(2 r_half) coefficient of 2^n (1 + cosh t)^n."""
    if r_half < 0 or n < 0:
        raise ValueError(f"sum_genfunc_even needs r_half >= 0 and n >= 0, got {r_half}, {n}")
    c = _cosh_power_series(n, r_half)[r_half]
    return as_integer(c * factorial(2 * r_half), f"S_{2 * r_half}({n}) generating function")


def _genfunc_method(r: int, n: int) -> int:
    if r % 2:
        raise ValueError(f"the generating-function route covers even r only, got r={r}")
    return sum_genfunc_even(r // 2, n)


METHODS: dict[str, Callable[[int, int], int]] = {
    "brute": sum_bruteforce,
    "symmetric": sum_symmetric,
    "recursive": sum_recursive,
    "closed": sum_closed_form,
    "genfunc": _genfunc_method,
}


def applicable_methods(r: int) -> list[str]:
    return [m for m in METHODS if m != "genfunc" or r % 2 == 0]


def compute(r: int, n: int, method: str = "recursive") -> int:
    try:
        fn = METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}; expected one of {sorted(METHODS)}") from None
    return fn(r, n)


def halfnormal_constant(r: int) -> tuple[Fraction, bool]:
    """Gamma((r+1)/2) / Gamma(1/2) as ``(c, divide_by_sqrt_pi)``.

    Even r = 2j gives (2j)! / (4^j j!) exactly; odd r = 2j+1 gives j! / sqrt(pi),
    returned as ``(j!, True)``.
    """
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    j = r // 2
    if r % 2 == 0:
        return Fraction(factorial(2 * j), 4**j * factorial(j)), False
    return Fraction(factorial(j)), True


def asymptotic_ratio(r: int, n: int) -> float:
    """S_r(n) / (c_r 4^n n^(r/2)); tends to 1 as n grows.

    Everything up to the final division is exact, so 4^n never enters
    floating point.
    """
    if n < 1:
        raise ValueError(f"asymptotic_ratio needs n >= 1, got {n}")
    c, sqrt_pi = halfnormal_constant(r)
    exact = Fraction(sum_recursive(r, n)) / (c * 4**n * n ** (r // 2))
    if not sqrt_pi:
        return float(exact)
    # S / (j!/sqrt(pi) 4^n n^j sqrt(n))
    return float(exact) * math.sqrt(math.pi) / math.sqrt(n)
