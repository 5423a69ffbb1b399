"""Exact absolute binomial sums, their polynomial families and random-walk moments."""
from .abssum import (
    asymptotic_ratio,
    sum_bruteforce,
    sum_closed_form,
    sum_genfunc_even,
    sum_recursive,
    sum_symmetric,
)
from .exactnum import binomial, factorial, odd_double_factorial
from .families import (
    family_dumont_foata,
    family_gandhi,
    family_P,
    family_Q,
    family_qtilde,
    gandhi_negative,
    verify_identities,
)
from .polyring import TriPoly, UniPoly
from .randwalk import exact_abs_moment, halfnormal_moment, simulate_abs_moment, walk_law
from .sequences import bernoulli, genocchi, genocchi_scaled

__version__ = "0.1.0"
