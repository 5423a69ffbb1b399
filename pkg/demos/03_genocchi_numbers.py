"""
Genocchi numbers from three directions
======================================

``G_2r = 2 (1 - 4^r) B_2r`` from the Bernoulli numbers, ``(-1)^r P~_r(0)``
from the Gandhi polynomials, and ``(-1)^r r F_r(1/2, 1, 0)`` from the
Dumont-Foata polynomials.  The last one is only conjectured, so it is
checked over a finite range.
"""

from fractions import Fraction

from walksum.families import family_dumont_foata, family_gandhi
from walksum.sequences import bernoulli, bfile_lines, genocchi, genocchi_scaled

R = 12
b = bernoulli(2 * R)
g = genocchi(R)
G = family_gandhi(R)
F = family_dumont_foata(R)

print(" r  B_2r                 G_2r          (-1)^r P~_r(0)  (-1)^r r F_r(1/2,1,0)")
for r in range(1, R + 1):
    gandhi = (-1) ** r * G[r](0)
    df = (-1) ** r * r * F[r](Fraction(1, 2), 1, 0)
    print(f"{r:2d}  {str(b[2 * r]):<20} {g[r]:<13} {str(gandhi):<15} {df}")

###############################################################################
# The scaled sequence 2^(r-1) G_2r / r is integral.

print("\nscaled:", [int(v) for v in genocchi_scaled(R)])

###############################################################################
# b-file output, as written by ``walksum oeis``.

print()
print("\n".join(bfile_lines("genocchi", 8)))
