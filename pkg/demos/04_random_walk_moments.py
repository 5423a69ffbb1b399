"""
Moments of a random walk's distance from the origin
===================================================

After ``2n`` fair +-1 steps, ``E|Y|^r = 2^(r-2n) S_r(n)``.  Compare the exact
moments with a seeded Monte Carlo estimate and with the half-normal limit.
"""

from walksum.exactnum import format_exact
from walksum.randwalk import exact_abs_moment, halfnormal_moment, simulate_abs_moment, walk_law

law = walk_law(3)
print("law of Y_6:", {y: format_exact(p) for y, p in sorted(law.pmf.items())})

###############################################################################
# Exact vs simulated vs asymptotic for a 32-step walk.

n = 16
print("\n r  exact              MC (+- stderr)          half-normal")
for r in range(1, 7):
    rep = simulate_abs_moment(n, r, samples=100_000, seed=2024)
    print(
        f" {r}  {float(rep.exact):<18.6f} {rep.mc_estimate:>12.4f} +- {rep.mc_stderr:<8.4f}"
        f" {rep.asymptotic:.4f}"
    )

###############################################################################
# The half-normal value approaches the exact moment as the walk lengthens.

for r in (1, 3, 5):
    gaps = [halfnormal_moment(m, r) / float(exact_abs_moment(m, r)) for m in (4, 16, 64, 256)]
    print(f"r={r}: half-normal / exact =", " ".join(f"{v:.5f}" for v in gaps))
