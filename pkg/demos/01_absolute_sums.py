"""
Absolute binomial sums, five ways
=================================

``S_r(n) = sum_k C(2n, k) |n - k|^r`` can be computed by brute force, by
folding the sum around its centre, by a two-step recursion in ``r``, through
the ``P_r`` / ``Q_r`` polynomials, and (for even ``r``) from the Taylor
series of ``2^n (1 + cosh t)^n``.  All five agree exactly.
"""

from walksum.abssum import METHODS, applicable_methods, asymptotic_ratio
from walksum.exactnum import binomial

###############################################################################
# A single value by every route.  ``S_3(n)`` is ``n^2 C(2n, n)``.

r, n = 3, 5
for method in applicable_methods(r):
    print(f"{method:>9}: S_{r}({n}) = {METHODS[method](r, n)}")
print("  n^2 C(2n,n) =", n * n * binomial(2 * n, n))

###############################################################################
# Even orders also admit the generating-function route.

for method in applicable_methods(6):
    print(f"{method:>9}: S_6(10) = {METHODS[method](6, 10)}")

###############################################################################
# Values grow like ``4^n n^(r/2)``; dividing by the leading term gives a
# ratio that creeps up to 1.

print("\n  r   n=8      n=32     n=128")
for r in range(7):
    row = "  ".join(f"{asymptotic_ratio(r, n):.5f}" for n in (8, 32, 128))
    print(f"  {r}   {row}")
