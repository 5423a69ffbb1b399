"""Distance to the origin of a symmetric Bernoulli walk after 2n steps.

Exact side: the law P(Y = 2k) = C(2n, n-k) / 4^n and the absolute moments
E|Y|^r = 2^(r-2n) S_r(n), cross-checked against the polynomial forms

    E|Y|^(2j)   = 2^j Q_j(n)
    E|Y|^(2j+1) = C(2n, n) 2^(2(j-n)+1) n P_j(n).

Simulation side: walks are generated step by step from a fixed, fully
specified generator so that reports are reproducible bit for bit.

Random stream
-------------
All arithmetic is modulo 2^64.

* ``splitmix64(s, i)``: ``z = s + (i+1) * 0x9E3779B97F4A7C15``, then
  ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``,
  ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``, ``z ^ (z >> 31)``.
* Shard ``s`` of ``shards`` gets seed ``splitmix64(seed, s)`` and the
  samples ``[s*q + min(s, m), ...)`` where ``samples = q*shards + m``
  (the first ``m`` shards take one extra sample).
* Walk ``i`` within a shard starts an xorshift64* generator at
  ``splitmix64(shard_seed, i)`` (a zero state is replaced by the golden
  gamma).  Each step: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27``, output
  ``x * 0x2545F4914F6CDD1D``; the output's top bit set means step +1,
  otherwise -1.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .abssum import halfnormal_constant, sum_recursive
from .exactnum import RouteMismatchError, binomial, format_exact, pow2
from .families import family_P, family_Q

__all__ = [
    "WalkLaw",
    "WalkMomentReport",
    "walk_law",
    "exact_abs_moment",
    "pmf_abs_moment",
    "halfnormal_moment",
    "simulate_abs_moment",
    "splitmix64",
    "shard_seeds",
    "simulate_distances",
]

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_SM_MUL1 = 0xBF58476D1CE4E5B9
_SM_MUL2 = 0x94D049BB133111EB
_XS_MUL = 0x2545F4914F6CDD1D


@dataclass(frozen=True)
class WalkLaw:
    """Exact distribution of Y_{2n}: ``pmf[2k] = C(2n, n-k) / 4^n``."""

    n: int
    pmf: dict[int, Fraction]

    def total(self) -> Fraction:
        return sum(self.pmf.values(), Fraction(0))

    def expect(self, f) -> Fraction:
        return sum((p * f(y) for y, p in self.pmf.items()), Fraction(0))


def walk_law(n: int) -> WalkLaw:
    if n < 1:
        raise ValueError(f"walk_law needs n >= 1, got {n}")
    denom = 4**n
    return WalkLaw(n, {2 * k: Fraction(binomial(2 * n, n - k), denom) for k in range(-n, n + 1)})


def pmf_abs_moment(n: int, r: int) -> Fraction:
    """E|Y_{2n}|^r summed directly over the distribution."""
    return walk_law(n).expect(lambda y: Fraction(abs(y)) ** r)


def _closed_moment(n: int, r: int) -> Fraction:
    j = r // 2
    if r % 2 == 0:
        return Fraction(2**j) * family_Q(j)[j](n)
    return binomial(2 * n, n) * pow2(2 * (j - n) + 1) * n * family_P(j)[j](n)


def exact_abs_moment(n: int, r: int) -> Fraction:
    """E|Y_{2n}|^r, computed from S_r(n) and from the P/Q forms; both must agree."""
    if n < 1 or r < 0:
        raise ValueError(f"exact_abs_moment needs n >= 1 and r >= 0, got n={n}, r={r}")
    if r == 0:
        return Fraction(1)
    via_sum = pow2(r - 2 * n) * sum_recursive(r, n)
    via_poly = _closed_moment(n, r)
    if via_sum != via_poly:
        raise RouteMismatchError(
            f"E|Y_{2 * n}|^{r}: 2^(r-2n) S_r(n) = {via_sum} but polynomial form gives {via_poly}"
        )
    return via_sum


def halfnormal_moment(n: int, r: int) -> float:
    """Gamma((r+1)/2)/Gamma(1/2) * 2^r * n^(r/2), the limiting value of E|Y_{2n}|^r."""
    if n < 1:
        raise ValueError(f"halfnormal_moment needs n >= 1, got {n}")
    c, sqrt_pi = halfnormal_constant(r)
    exact_part = c * 2**r * n ** (r // 2)
    value = float(exact_part)
    if r % 2:
        value *= math.sqrt(n)
    if sqrt_pi:
        value /= math.sqrt(math.pi)
    return value


# -- generator ----------------------------------------------------------------

def splitmix64(seed: int, index: int) -> int:
    z = (seed + (index + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * _SM_MUL1) & MASK64
    z = ((z ^ (z >> 27)) * _SM_MUL2) & MASK64
    return z ^ (z >> 31)


def _splitmix64_lanes(seed: int, count: int) -> np.ndarray:
    u = np.uint64
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = idx * u(GOLDEN_GAMMA) + u(seed & MASK64)
        z = (z ^ (z >> u(30))) * u(_SM_MUL1)
        z = (z ^ (z >> u(27))) * u(_SM_MUL2)
        z = z ^ (z >> u(31))
    z[z == 0] = u(GOLDEN_GAMMA)
    return z


def shard_seeds(seed: int, shards: int) -> list[int]:
    return [splitmix64(seed & MASK64, s) for s in range(shards)]


def _shard_sizes(samples: int, shards: int) -> list[int]:
    q, m = divmod(samples, shards)
    return [q + (1 if s < m else 0) for s in range(shards)]


def _walk_positions(shard_seed: int, count: int, steps: int) -> np.ndarray:
    u = np.uint64
    x = _splitmix64_lanes(shard_seed, count)
    pos = np.zeros(count, dtype=np.int64)
    with np.errstate(over="ignore"):
        for _ in range(steps):
            x ^= x >> u(12)
            x ^= x << u(25)
            x ^= x >> u(27)
            heads = ((x * u(_XS_MUL)) >> u(63)).astype(np.int64)
            pos += 2 * heads - 1
    return pos


def simulate_distances(n: int, samples: int, seed: int, shards: int = 1) -> np.ndarray:
    """|Y_{2n}| for ``samples`` independent walks, shards concatenated in order."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if samples < 1 or shards < 1 or shards > samples:
        raise ValueError(f"need 1 <= shards <= samples, got samples={samples}, shards={shards}")
    parts = [
        _walk_positions(s_seed, size, 2 * n)
        for s_seed, size in zip(shard_seeds(seed, shards), _shard_sizes(samples, shards))
    ]
    return np.abs(np.concatenate(parts))


@dataclass(frozen=True)
class WalkMomentReport:
    n: int
    r: int
    exact: Fraction
    mc_estimate: float
    mc_stderr: float
    asymptotic: float
    samples: int
    seed: int
    shards: int = 1

    @property
    def z_score(self) -> float:
        diff = self.mc_estimate - float(self.exact)
        if self.mc_stderr == 0:
            return 0.0 if diff == 0 else math.inf
        return abs(diff) / self.mc_stderr

    def within(self, k_sigma: float) -> bool:
        return self.z_score <= k_sigma

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "exact": format_exact(self.exact),
            "mc_estimate": self.mc_estimate,
            "mc_stderr": self.mc_stderr,
            "asymptotic": self.asymptotic,
            "samples": self.samples,
            "seed": self.seed,
            "shards": self.shards,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def simulate_abs_moment(n: int, r: int, samples: int, seed: int, shards: int = 1) -> WalkMomentReport:
    """Monte Carlo estimate of E|Y_{2n}|^r with its standard error."""
    if samples < 2:
        raise ValueError(f"samples must be >= 2, got {samples}")
    if r < 0:
        raise ValueError(f"r must be nonnegative, got {r}")
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    if r == 0:
        est, err = 1.0, 0.0
    else:
        vals = simulate_distances(n, samples, seed, shards).astype(np.float64) ** r
        est = float(vals.mean())
        err = float(vals.std(ddof=1) / math.sqrt(samples))
    return WalkMomentReport(
        n=n,
        r=r,
        exact=exact_abs_moment(n, r),
        mc_estimate=est,
        mc_stderr=err,
        asymptotic=halfnormal_moment(n, r),
        samples=samples,
        seed=seed,
        shards=shards,
    )
