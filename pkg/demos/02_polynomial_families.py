"""
Polynomial families
===================

The odd and even sums factor as ``S_{2r+1}(n) = P_r(n) n C(2n, n)`` and
``S_{2r}(n) = Q_r(n) 2^(2n-r)``.  Reflecting ``n -> -z`` turns ``P_r`` into
the Gandhi polynomials and ``Q_r`` into a companion family; both are
specialisations of the trivariate Dumont-Foata polynomials.
"""

from fractions import Fraction

from walksum.families import (
    family_dumont_foata,
    family_gandhi,
    family_P,
    family_Q,
    family_qtilde,
    verify_identities,
)
from walksum.polyring import render_descending, render_factored

P, Q = family_P(5), family_Q(5)
for r in range(6):
    print(f"P_{r}(n) = {render_factored(P[r])}")
for r in range(6):
    print(f"Q_{r}(n) = {render_factored(Q[r])}")

###############################################################################
# Gandhi polynomials and Q~, printed as coefficient triangles.

for fam in (family_gandhi(6), family_qtilde(6)):
    print()
    rows = [" ".join(str(c) for c in p.int_coeffs()[::-1]) for p in fam]
    width = len(rows[-1])
    for row in rows:
        print(row.center(width))

###############################################################################
# The Dumont-Foata polynomial F_3 and its two specialisations.

F = family_dumont_foata(6)
print("\nF_3 =", F[3])
print("F_3(1, 1, z)      =", render_descending(F[3].specialize_z(1, 1)))
print("4 F_3(1/2, 1, z)  =", render_descending(F[3].specialize_z(Fraction(1, 2), 1) * 4))

###############################################################################
# Machine check of all links between the families.

report = verify_identities(8, 20)
for check in report.checks:
    print(f"{check.status:<44} {check.name}")
