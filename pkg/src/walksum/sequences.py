"""Bernoulli numbers, Genocchi numbers and the scaled sequence 2^(r-1) G_2r / r."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import ExactnessError, binomial

__all__ = [
    "BernoulliTable",
    "GenocchiTable",
    "bernoulli",
    "genocchi",
    "genocchi_scaled",
    "bfile_lines",
]


@dataclass(frozen=True)
class BernoulliTable:
    """B_0..B_m with the convention B_1 = -1/2."""

    values: tuple[Fraction, ...]

    def __getitem__(self, m: int) -> Fraction:
        return self.values[m]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class GenocchiTable:
    """G_2, G_4, ..., indexed by r (``table[r] == G_2r``)."""

    values: tuple[int, ...]

    def __getitem__(self, r: int) -> int:
        if r < 1:
            raise IndexError(f"Genocchi index r starts at 1, got {r}")
        return self.values[r - 1]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_r(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def _bernoulli_values(upto_m: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for m in range(1, upto_m + 1):
        # sum_{k=0}^{m} C(m+1, k) B_k = 0, solved for B_m
        s = sum(binomial(m + 1, k) * b[k] for k in range(m))
        b.append(-s / (m + 1))
    return tuple(b)


def bernoulli(upto_m: int) -> BernoulliTable:
    if upto_m < 0:
        raise ValueError(f"upto_m must be nonnegative, got {upto_m}")
    return BernoulliTable(_bernoulli_values(upto_m))


def genocchi(upto_r: int) -> GenocchiTable:
    """G_2r = 2 (1 - 4^r) B_2r for r = 1..upto_r.

    Raises :class:`ExactnessError` if a value fails to be an integer, which
    can only come from a broken Bernoulli table.
    """
    if upto_r < 1:
        raise ValueError(f"upto_r must be >= 1, got {upto_r}")
    b = bernoulli(2 * upto_r)
    out = []
    for r in range(1, upto_r + 1):
        g = 2 * (1 - 4**r) * b[2 * r]
        if g.denominator != 1:
            raise ExactnessError(f"G_{2 * r} = {g} is not an integer")
        out.append(int(g))
    return GenocchiTable(tuple(out))


def genocchi_scaled(upto_r: int) -> list[Fraction]:
    """Signed terms 2^(r-1) G_2r / r, r = 1..upto_r (integrality is left to callers)."""
    g = genocchi(upto_r)
    return [Fraction(2 ** (r - 1) * g[r], r) for r in range(1, upto_r + 1)]


def bfile_lines(sequence: str, upto_r: int, sign: str = "signed") -> list[str]:
    """OEIS b-file lines (``index value``) with a ``#`` header giving the sign convention."""
    if sign not in ("signed", "absolute"):
        raise ValueError(f"sign must be 'signed' or 'absolute', got {sign!r}")
    if sequence == "genocchi":
        values = list(genocchi(upto_r).values)
        header = [
            "# Genocchi numbers G_2r = 2(1-2^(2r)) B_2r, r = 1..%d (A001469 indexing)" % upto_r,
        ]
    elif sequence == "scaled":
        values = []
        for r, v in enumerate(genocchi_scaled(upto_r), start=1):
            if v.denominator != 1:
                raise ExactnessError(f"2^(r-1) G_2r / r is not integral at r={r}: {v}")
            values.append(int(v))
        header = ["# 2^(r-1) G_2r / r, r = 1..%d (compare A002105)" % upto_r]
    else:
        raise ValueError(f"unknown sequence {sequence!r}")
    if sign == "signed":
        header.append("# sign convention: signed, sign(term r) = (-1)^r")
    else:
        values = [abs(v) for v in values]
        header.append("# sign convention: absolute values; true sign of term r is (-1)^r")
    return header + [f"{r} {v}" for r, v in enumerate(values, start=1)]
