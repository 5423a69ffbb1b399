"""The polynomial families P_r, Q_r, Gandhi P~_r, Q~_r and Dumont-Foata F_r.

``P_r`` and ``Q_r`` are polynomials in ``n`` with

    S_{2r+1}(n) = P_r(n) * n * C(2n, n),     S_{2r}(n) = Q_r(n) * 2^(2n-r),

built from P_0 = Q_0 = 1 by

    P_{r+1}(n) =  n^2 [P_r(n) - P_r(n-1)] + n P_r(n-1)
    Q_{r+1}(n) = 2n^2 [Q_r(n) - Q_r(n-1)] + n Q_r(n-1).

The remaining families start at r = 1 with the value 1 and use a forward
shift ``z -> z + 1``:

    P~_{r+1}(z)   = (z+1)^2 P~_r(z+1) - z^2 P~_r(z)
    Q~_{r+1}(z)   = (2z+1)(z+1) Q~_r(z+1) - 2z^2 Q~_r(z)
    F_{r+1}(x,y,z) = (x+z)(y+z) F_r(x,y,z+1) - z^2 F_r(x,y,z).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .exactnum import ExactnessError, binomial
from .polyring import TriPoly, UniPoly
from .sequences import genocchi

__all__ = [
    "FamilyTable",
    "family_P",
    "family_Q",
    "family_gandhi",
    "family_qtilde",
    "family_dumont_foata",
    "gandhi_negative",
    "CheckResult",
    "IdentityReport",
    "verify_identities",
]

KINDS = ("P", "Q", "gandhi", "qtilde", "df")

Poly = Union[UniPoly, TriPoly]


@dataclass(frozen=True)
class FamilyTable:
    """Polynomials of one family, ``table[r]`` for ``base <= r <= max_r``."""

    kind: str
    base: int
    polys: tuple

    @property
    def max_r(self) -> int:
        return self.base + len(self.polys) - 1

    def __getitem__(self, r: int) -> Poly:
        if not self.base <= r <= self.max_r:
            raise IndexError(f"{self.kind}_{r} outside table range {self.base}..{self.max_r}")
        return self.polys[r - self.base]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self) -> int:
        return len(self.polys)

    def items(self):
        return zip(range(self.base, self.max_r + 1), self.polys)


_N = UniPoly([0, 1])
_N2 = UniPoly([0, 0, 1])


@lru_cache(maxsize=None)
def _p_polys(max_r: int) -> tuple[UniPoly, ...]:
    if max_r == 0:
        return (UniPoly([1]),)
    prev = _p_polys(max_r - 1)
    p = prev[-1]
    back = p.shift(-1)
    return prev + (_N2 * (p - back) + _N * back,)


@lru_cache(maxsize=None)
def _q_polys(max_r: int) -> tuple[UniPoly, ...]:
    if max_r == 0:
        return (UniPoly([1]),)
    prev = _q_polys(max_r - 1)
    q = prev[-1]
    back = q.shift(-1)
    return prev + (2 * _N2 * (q - back) + _N * back,)


def family_P(max_r: int) -> FamilyTable:
    if max_r < 0:
        raise ValueError(f"max_r must be >= 0, got {max_r}")
    return FamilyTable("P", 0, _p_polys(max_r))


def family_Q(max_r: int) -> FamilyTable:
    if max_r < 0:
        raise ValueError(f"max_r must be >= 0, got {max_r}")
    return FamilyTable("Q", 0, _q_polys(max_r))


_GANDHI_A = UniPoly([1, 2, 1])  # (z+1)^2
_GANDHI_B = UniPoly([0, 0, 1])  # z^2
_QT_A = UniPoly([1, 3, 2])  # (2z+1)(z+1)
_QT_B = UniPoly([0, 0, 2])  # 2z^2


@lru_cache(maxsize=None)
def _gandhi_polys(max_r: int) -> tuple[UniPoly, ...]:
    if max_r == 1:
        return (UniPoly([1]),)
    prev = _gandhi_polys(max_r - 1)
    g = prev[-1]
    return prev + (_GANDHI_A * g.shift(1) - _GANDHI_B * g,)


@lru_cache(maxsize=None)
def _qtilde_polys(max_r: int) -> tuple[UniPoly, ...]:
    if max_r == 1:
        return (UniPoly([1]),)
    prev = _qtilde_polys(max_r - 1)
    q = prev[-1]
    return prev + (_QT_A * q.shift(1) - _QT_B * q,)


def family_gandhi(max_r: int) -> FamilyTable:
    if max_r < 1:
        raise ValueError(f"max_r must be >= 1, got {max_r}")
    return FamilyTable("gandhi", 1, _gandhi_polys(max_r))


def family_qtilde(max_r: int) -> FamilyTable:
    if max_r < 1:
        raise ValueError(f"max_r must be >= 1, got {max_r}")
    return FamilyTable("qtilde", 1, _qtilde_polys(max_r))


_X, _Y, _ZT = TriPoly.var("x"), TriPoly.var("y"), TriPoly.var("z")
_DF_A = (_X + _ZT) * (_Y + _ZT)
_DF_B = _ZT * _ZT


@lru_cache(maxsize=None)
def _df_polys(max_r: int) -> tuple[TriPoly, ...]:
    if max_r == 1:
        return (TriPoly.constant(1),)
    prev = _df_polys(max_r - 1)
    f = prev[-1]
    nxt = _DF_A * f.shift_z() - _DF_B * f
    bad = [(k, v) for k, v in nxt.terms.items() if v < 0]
    if bad:
        raise ExactnessError(f"F_{max_r} has negative coefficients {bad[:3]}")
    return prev + (nxt,)


def family_dumont_foata(max_r: int) -> FamilyTable:
    """F_1..F_max_r.  Coefficients are checked to be nonnegative integers."""
    if max_r < 1:
        raise ValueError(f"max_r must be >= 1, got {max_r}")
    return FamilyTable("df", 1, _df_polys(max_r))


def family(kind: str, max_r: int) -> FamilyTable:
    builders = {
        "P": family_P,
        "Q": family_Q,
        "gandhi": family_gandhi,
        "qtilde": family_qtilde,
        "df": family_dumont_foata,
    }
    try:
        return builders[kind](max_r)
    except KeyError:
        raise ValueError(f"unknown family {kind!r}; expected one of {KINDS}") from None


def gandhi_negative(r: int, n: int) -> Fraction:
    """P~_r(-n) from the binomial moment sum, without touching the polynomial.

        P~_r(-n) = (-1)^(r-1) * 2 / (n^2 C(2n,n)) * sum_{k=1}^{n} C(2n, n-k) k^(2r+1)
    """
    if r < 1 or n < 1:
        raise ValueError(f"gandhi_negative needs r >= 1 and n >= 1, got r={r}, n={n}")
    s = sum(binomial(2 * n, n - k) * k ** (2 * r + 1) for k in range(1, n + 1))
    sign = 1 if r % 2 == 1 else -1
    return sign * Fraction(2 * s, n * n * binomial(2 * n, n))


# -- identity verification --------------------------------------------------

@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int = 0
    counterexample: dict | None = None
    conjectural: bool = False
    note: str = ""
    proved: bool = False
    scope: str = ""

    @property
    def status(self) -> str:
        if not self.passed:
            return "FAIL"
        if self.conjectural:
            where = f" {self.scope}" if self.scope else ""
            return f"PASS (conjectural, verified in range{where})"
        if self.proved:
            return "PASS (proved identity)"
        return "PASS"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "status": self.status,
            "checked": self.checked,
            "conjectural": self.conjectural,
            "scope": self.scope,
            "counterexample": self.counterexample,
            "note": self.note,
        }


@dataclass
class IdentityReport:
    max_r: int
    max_n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        return next((c for c in self.checks if not c.passed), None)

    def as_dict(self) -> dict:
        return {
            "max_r": self.max_r,
            "max_n": self.max_n,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


def _pointwise(name, lhs, rhs, max_r, max_n, conjectural=False, r_min=1, n_min=1) -> CheckResult:
    # row-major scan: the first mismatch is the lexicographically smallest (r, n)
    checked = 0
    scope = f"r <= {max_r}" if max_n == n_min else f"r <= {max_r}, n <= {max_n}"
    for r in range(r_min, max_r + 1):
        for n in range(n_min, max_n + 1):
            a, b = lhs(r, n), rhs(r, n)
            checked += 1
            if a != b:
                return CheckResult(
                    name, False, checked,
                    {"r": r, "n": n, "lhs": str(a), "rhs": str(b)}, conjectural, scope=scope,
                )
    return CheckResult(name, True, checked, None, conjectural, scope=scope)


def verify_identities(max_r: int, max_n: int) -> IdentityReport:
    """Check the links between P, Q and the Gandhi / Q~ / Dumont-Foata families.

    All four pointwise identities are checked for 1 <= r <= max_r and
    1 <= n <= max_n, followed by the two constant-term laws.  The Q-side law
    depends on an unproved conjecture and is labelled conjectural.
    """
    if max_r < 1 or max_n < 1:
        raise ValueError("verify_identities needs max_r >= 1 and max_n >= 1")
    P, Q = family_P(max_r), family_Q(max_r)
    G, QT = family_gandhi(max_r), family_qtilde(max_r)
    F = family_dumont_foata(max_r)
    gen = genocchi(max_r)
    half = Fraction(1, 2)

    def sgn(r):
        return 1 if r % 2 == 1 else -1

    report = IdentityReport(max_r, max_n)
    report.checks.append(_pointwise(
        "P_r(n) = (-1)^(r-1) n P~_r(-n)",
        lambda r, n: P[r](n), lambda r, n: sgn(r) * n * G[r](-n), max_r, max_n))
    report.checks.append(_pointwise(
        "Q_r(n) = (-1)^(r-1) n Q~_r(-n)",
        lambda r, n: Q[r](n), lambda r, n: sgn(r) * n * QT[r](-n), max_r, max_n))
    report.checks.append(_pointwise(
        "P_r(n) = (-1)^(r-1) n F_r(1,1,-n)",
        lambda r, n: P[r](n), lambda r, n: sgn(r) * n * F[r](1, 1, -n), max_r, max_n))
    report.checks.append(_pointwise(
        "Q_r(n) = (-2)^(r-1) n F_r(1/2,1,-n)",
        lambda r, n: Q[r](n), lambda r, n: (-2) ** (r - 1) * n * F[r](half, 1, -n), max_r, max_n))

    # constant term of P_r(n)/n is the n^1 coefficient of P_r
    report.checks.append(_pointwise(
        "[n^1] P_r = -G_2r",
        lambda r, n: P[r].coeff(1), lambda r, n: -gen[r], max_r, 1))
    report.checks.append(_pointwise(
        "[n^1] Q_r = -2^(r-1) G_2r / r",
        lambda r, n: Q[r].coeff(1), lambda r, n: Fraction(-(2 ** (r - 1)) * gen[r], r),
        max_r, 1, conjectural=True))
    return report
