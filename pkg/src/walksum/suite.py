"""The full verification sweep behind ``walksum verify``.

Sections run in a fixed order and each produces :class:`CheckResult` rows.
The overall verdict is True only if every check passes; conjectural checks
count too, but are labelled with the range they were verified over.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import reference
from .abssum import METHODS, applicable_methods, asymptotic_ratio
from .exactnum import binomial, factorial, odd_double_factorial
from .families import (
    CheckResult,
    family_dumont_foata,
    family_gandhi,
    family_P,
    family_Q,
    family_qtilde,
    gandhi_negative,
    verify_identities,
)
from .randwalk import exact_abs_moment, pmf_abs_moment
from .sequences import genocchi

SECTIONS = (
    "oracle equality",
    "table reproduction",
    "structural laws",
    "Genocchi laws",
    "Gandhi conjecture",
    "author's conjecture",
    "Dumont-Foata identities",
    "negative arguments",
    "walk moments",
    "asymptotic trend",
)

TREND_POINTS = (8, 16, 32, 64, 128)


@dataclass
class SuiteReport:
    max_r: int
    max_n: int
    sections: dict[str, list[CheckResult]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for checks in self.sections.values() for c in checks)

    def first_failure(self) -> tuple[str, CheckResult] | None:
        for name, checks in self.sections.items():
            for c in checks:
                if not c.passed:
                    return name, c
        return None

    def as_dict(self) -> dict:
        return {
            "max_r": self.max_r,
            "max_n": self.max_n,
            "passed": self.passed,
            "sections": {k: [c.as_dict() for c in v] for k, v in self.sections.items()},
        }

    def lines(self) -> list[str]:
        out = []
        for name, checks in self.sections.items():
            out.append(f"== {name}")
            for c in checks:
                out.append(f"  {c.status:<48} {c.name}")
                if c.counterexample:
                    out.append(f"      counterexample: {c.counterexample}")
        out.append(f"OVERALL: {'PASS' if self.passed else 'FAIL'}")
        return out


def _scan(name, cells, check, **kw) -> CheckResult:
    """Run ``check(*cell)`` over cells in order; stop at the first failure."""
    count = 0
    for cell in cells:
        count += 1
        ok, info = check(*cell)
        if not ok:
            return CheckResult(name, False, count, info, **kw)
    return CheckResult(name, True, count, None, **kw)


def oracle_checks(max_r: int, max_n: int) -> list[CheckResult]:
    def agree(r, n):
        values = {m: METHODS[m](r, n) for m in applicable_methods(r)}
        if len(set(values.values())) == 1:
            return True, None
        return False, {"r": r, "n": n, **{m: str(v) for m, v in values.items()}}

    def bruckman(n, _):
        lhs = {m: METHODS[m](3, n) for m in applicable_methods(3)}
        rhs = n * n * binomial(2 * n, n)
        return all(v == rhs for v in lhs.values()), {"n": n, "expected": str(rhs)}

    cells = [(r, n) for r in range(max_r + 1) for n in range(max_n + 1)]
    scope = f"r <= {max_r}, n <= {max_n}"
    return [
        _scan("all S_r(n) routes agree", cells, agree, scope=scope),
        _scan("S_3(n) = n^2 C(2n,n)", [(n, 0) for n in range(1, max_n + 1)], bruckman,
              proved=True, scope=f"n <= {max_n}"),
    ]


def _match_rows(name, generated: dict[int, list[int]], expected: dict[int, list[int]]) -> CheckResult:
    for r in sorted(expected):
        if generated.get(r) != expected[r]:
            return CheckResult(name, False, r, {"r": r, "generated": generated.get(r),
                                                "expected": expected[r]})
    return CheckResult(name, True, len(expected))


def table_checks() -> list[CheckResult]:
    P, Q = family_P(5), family_Q(5)
    G, QT = family_gandhi(6), family_qtilde(6)
    return [
        _match_rows("P_0..P_5 coefficients", {r: p.int_coeffs() for r, p in P.items()},
                    reference.family_rows_low_to_high(reference.P_ROWS)),
        _match_rows("Q_0..Q_5 coefficients", {r: q.int_coeffs() for r, q in Q.items()},
                    reference.family_rows_low_to_high(reference.Q_ROWS)),
        _match_rows("Gandhi polynomial triangle, rows 1..6",
                    {r: g.int_coeffs()[::-1] for r, g in G.items()},
                    dict(enumerate(reference.GANDHI_ROWS, start=1))),
        _match_rows("Q~ polynomial triangle, rows 1..6",
                    {r: q.int_coeffs()[::-1] for r, q in QT.items()},
                    dict(enumerate(reference.QTILDE_ROWS, start=1))),
    ]


def structural_checks(max_r: int) -> list[CheckResult]:
    P, Q = family_P(max_r), family_Q(max_r)
    rs = [(r,) for r in range(max_r + 1)]
    rs1 = [(r,) for r in range(1, max_r + 1)]

    def info(r, got, want):
        return {"r": r, "got": str(got), "expected": str(want)}

    def laws(name, cells, f, want):
        return _scan(name, cells, lambda r: (f(r) == want(r), info(r, f(r), want(r))),
                     scope=f"r <= {max_r}")

    return [
        laws("deg P_r = r", rs, lambda r: P[r].degree, lambda r: r),
        laws("deg Q_r = r", rs, lambda r: Q[r].degree, lambda r: r),
        laws("lead P_r = r!", rs, lambda r: P[r].lead(), factorial),
        laws("lead Q_r = (2r)!/(2^r r!)", rs, lambda r: Q[r].lead(), odd_double_factorial),
        laws("P_r(1) = 1", rs, lambda r: P[r](1), lambda r: 1),
        laws("Q_r(1) = 2^(r-1)", rs1, lambda r: Q[r](1), lambda r: 2 ** (r - 1)),
        laws("P_r, Q_r integral with zero constant term", rs1,
             lambda r: (P[r].is_integral(), Q[r].is_integral(), P[r].coeff(0), Q[r].coeff(0)),
             lambda r: (True, True, 0, 0)),
    ]


def genocchi_checks(max_r: int, max_n: int) -> list[CheckResult]:
    listed = reference.GENOCCHI
    g = genocchi(max(max_r, len(listed)))
    listed_check = _match_rows(
        "G_2r = 2(1-4^r) B_2r reproduces -1, 1, -3, 17, -155, 2073",
        {0: list(g.values[: len(listed)])}, {0: listed},
    )
    laws = [c for c in verify_identities(max_r, 1).checks if c.name.startswith("[n^1]")]
    return [listed_check, *laws]


def gandhi_conjecture_checks(max_r: int) -> list[CheckResult]:
    G, g = family_gandhi(max_r), genocchi(max_r)

    def check(r):
        lhs, rhs = g[r], (-1) ** r * G[r](0)
        return lhs == rhs, {"r": r, "G_2r": str(lhs), "(-1)^r P~_r(0)": str(rhs)}

    return [_scan("G_2r = (-1)^r P~_r(0)", [(r,) for r in range(1, max_r + 1)], check,
                  proved=True, scope=f"r <= {max_r}")]


def author_conjecture_checks(max_r: int) -> list[CheckResult]:
    F, g = family_dumont_foata(max_r), genocchi(max_r)
    half = Fraction(1, 2)

    def check(r):
        lhs, rhs = F[r](half, 1, 0), Fraction((-1) ** r * g[r], r)
        return lhs == rhs, {"r": r, "F_r(1/2,1,0)": str(lhs), "(-1)^r G_2r / r": str(rhs)}

    return [_scan("F_r(1/2,1,0) = (-1)^r G_2r / r", [(r,) for r in range(1, max_r + 1)], check,
                  conjectural=True, scope=f"r <= {max_r}")]


def dumont_foata_checks(max_r: int, max_n: int) -> list[CheckResult]:
    F, G, QT = family_dumont_foata(max_r), family_gandhi(max_r), family_qtilde(max_r)
    cells = [(r,) for r in range(1, max_r + 1)]
    half = Fraction(1, 2)

    def spec_gandhi(r):
        return F[r].specialize_z(1, 1) == G[r], {"r": r}

    def spec_qtilde(r):
        return F[r].specialize_z(half, 1) * 2 ** (r - 1) == QT[r], {"r": r}

    def symmetric(r):
        return F[r].swap_xy() == F[r], {"r": r}

    def degree(r):
        got = (F[r].total_degree, F[r].degree_in("z"))
        return got == (2 * (r - 1), r - 1), {"r": r, "total_degree": got[0], "z_degree": got[1]}

    scope = f"r <= {max_r}"
    out = [
        _scan("F_r(1,1,z) = P~_r(z)", cells, spec_gandhi, scope=scope),
        _scan("2^(r-1) F_r(1/2,1,z) = Q~_r(z)", cells, spec_qtilde, scope=scope),
        _scan("F_r(x,y,z) = F_r(y,x,z)", cells, symmetric, scope=scope),
        _scan("F_r has total degree 2(r-1) and z-degree r-1", cells, degree, scope=scope),
    ]
    out += [c for c in verify_identities(max_r, max_n).checks if not c.name.startswith("[n^1]")]
    return out


def negative_argument_checks(max_r: int, max_n: int) -> list[CheckResult]:
    G = family_gandhi(max_r)
    rs = [(r,) for r in range(1, max_r + 1)]

    def at1(r):
        v = gandhi_negative(r, 1)
        return v == (-1) ** (r - 1), {"r": r, "value": str(v)}

    def at2(r):
        v, want = gandhi_negative(r, 2), Fraction((-1) ** (r - 1) * (2 ** (2 * r - 1) + 1), 3)
        return v == want, {"r": r, "value": str(v), "expected": str(want)}

    def direct(r, n):
        v, want = gandhi_negative(r, n), G[r](-n)
        return v == want, {"r": r, "n": n, "sum": str(v), "polynomial": str(want)}

    scope = f"r <= {max_r}"
    return [
        _scan("P~_r(-1) = (-1)^(r-1)", rs, at1, scope=scope),
        _scan("P~_r(-2) = (-1)^(r-1)(2^(2r-1)+1)/3", rs, at2, scope=scope),
        _scan("moment-sum formula equals P~_r(-n)",
              [(r, n) for r in range(1, max_r + 1) for n in range(1, max_n + 1)], direct,
              scope=f"{scope}, n <= {max_n}"),
    ]


def moment_checks(max_r: int, max_n: int) -> list[CheckResult]:
    n_hi = min(max_n, 12)

    def check(n, r):
        a, b = pmf_abs_moment(n, r), exact_abs_moment(n, r)
        return a == b, {"n": n, "r": r, "pmf": str(a), "exact": str(b)}

    def even_integral(n, r):
        v = exact_abs_moment(n, 2 * r)
        return v.denominator == 1, {"n": n, "r": 2 * r, "value": str(v)}

    return [
        _scan("E|Y_2n|^r: pmf sum = 2^(r-2n) S_r(n) = P/Q form",
              [(n, r) for n in range(1, n_hi + 1) for r in range(max_r + 1)], check,
              scope=f"r <= {max_r}, n <= {n_hi}"),
        _scan("even moments are integers",
              [(n, r) for n in range(1, n_hi + 1) for r in range(max_r // 2 + 1)], even_integral,
              scope=f"r <= {max_r}, n <= {n_hi}"),
    ]


def asymptotic_checks(max_r: int) -> list[CheckResult]:
    r_hi = min(max_r, 9)

    def bounded(r, n):
        v = asymptotic_ratio(r, n)
        return 0 < v < 1.05, {"r": r, "n": n, "ratio": v}

    def trend(r):
        gaps = [abs(asymptotic_ratio(r, n) - 1) for n in TREND_POINTS]
        ok = all(b <= a for a, b in zip(gaps, gaps[1:]))
        return ok, {"r": r, "gaps": gaps}

    return [
        _scan("0 < S_r(n) / leading term < 1.05 (n >= 4)",
              [(r, n) for r in range(r_hi + 1) for n in (4, 8, 16, 32, 64, 128)], bounded,
              scope=f"r <= {r_hi}"),
        _scan("|ratio - 1| non-increasing over n = 8..128", [(r,) for r in range(r_hi + 1)], trend,
              scope=f"r <= {r_hi}"),
    ]


def run_suite(max_r: int, max_n: int) -> SuiteReport:
    if max_r < 1 or max_n < 1:
        raise ValueError("run_suite needs max_r >= 1 and max_n >= 1")
    report = SuiteReport(max_r, max_n)
    report.sections["oracle equality"] = oracle_checks(max_r, max_n)
    report.sections["table reproduction"] = table_checks()
    report.sections["structural laws"] = structural_checks(max_r)
    report.sections["Genocchi laws"] = genocchi_checks(max_r, max_n)
    report.sections["Gandhi conjecture"] = gandhi_conjecture_checks(max_r)
    report.sections["author's conjecture"] = author_conjecture_checks(max_r)
    report.sections["Dumont-Foata identities"] = dumont_foata_checks(max_r, max_n)
    report.sections["negative arguments"] = negative_argument_checks(max_r, max_n)
    report.sections["walk moments"] = moment_checks(max_r, max_n)
    report.sections["asymptotic trend"] = asymptotic_checks(max_r)
    return report
