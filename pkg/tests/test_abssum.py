import math
from concurrent.futures import ThreadPoolExecutor

import pytest
from hypothesis import given
from hypothesis import strategies as st

from walksum.abssum import (
    METHODS,
    SumQuery,
    applicable_methods,
    asymptotic_ratio,
    compute,
    sum_bruteforce,
    sum_closed_form,
    sum_genfunc_even,
    sum_recursive,
    sum_symmetric,
)
from walksum.exactnum import binomial


def test_bruteforce_examples():
    assert sum_bruteforce(3, 2) == 24 == 8 + 4 + 0 + 4 + 8
    assert sum_bruteforce(0, 3) == 64
    assert sum_bruteforce(1, 3) == 60 == 3 * binomial(6, 3)


def test_symmetric_examples():
    assert sum_symmetric(0, 2) == 16
    assert sum_symmetric(2, 1) == 2
    assert sum_symmetric(5, 1) == 2


def test_recursive_examples():
    assert sum_recursive(2, 2) == 4 * 16 - 2 * 2 * 3 * 4 == 16
    assert sum_recursive(3, 3) == sum_bruteforce(3, 3) == 180
    assert sum_recursive(0, 5) == 1024


def test_closed_form_examples():
    assert sum_closed_form(3, 4) == 1120 == 16 * binomial(8, 4)
    assert sum_closed_form(4, 2) == 40 == sum_bruteforce(4, 2)
    assert sum_closed_form(1, 1) == 2


def test_genfunc_examples():
    assert sum_genfunc_even(1, 1) == 2 == sum_bruteforce(2, 1)
    assert sum_genfunc_even(2, 2) == 40
    for n in range(6):
        assert sum_genfunc_even(0, n) == 4**n


def test_empty_walk_conventions():
    for method in METHODS:
        assert compute(0, 0, method) == 1
        for r in range(2, 9, 2):
            assert compute(r, 0, method) == 0
    for method in applicable_methods(1):
        assert compute(1, 0, method) == 0


def test_invalid_queries():
    with pytest.raises(ValueError):
        sum_bruteforce(-1, 2)
    with pytest.raises(ValueError):
        SumQuery(2, -1).validate()
    with pytest.raises(ValueError):
        compute(3, 2, "genfunc")
    with pytest.raises(ValueError):
        compute(3, 2, "fourier")


@given(st.integers(0, 14), st.integers(0, 25))
def test_all_routes_agree(r, n):
    values = {m: compute(r, n, m) for m in applicable_methods(r)}
    assert len(set(values.values())) == 1


def test_base_rows():
    for n in range(41):
        assert sum_bruteforce(0, n) == 4**n
        assert sum_bruteforce(1, n) == n * binomial(2 * n, n)


def test_concurrent_queries_match_sequential():
    cells = [(r, n) for r in range(13) for n in range(0, 41, 3)]
    sequential = [sum_recursive(r, n) for r, n in cells]
    with ThreadPoolExecutor(max_workers=8) as pool:
        parallel = list(pool.map(lambda c: sum_recursive(*c), cells))
    assert parallel == sequential


def test_asymptotic_ratio_examples():
    for n in (1, 5, 50):
        assert asymptotic_ratio(0, n) == 1.0
        assert asymptotic_ratio(2, n) == 1.0
    assert 0.95 < asymptotic_ratio(3, 64) < 1.0


def test_asymptotic_ratio_odd_against_stirling_free_form():
    # S_1(n) / (4^n sqrt(n/pi)) computed with lgamma as an independent float route
    for n in (4, 16, 100):
        c = math.exp(math.lgamma(2 * n + 1) - 2 * math.lgamma(n + 1) - 2 * n * math.log(2))
        assert asymptotic_ratio(1, n) == pytest.approx(c * math.sqrt(math.pi * n), rel=1e-12)


def test_asymptotic_ratio_bounds_and_trend():
    for r in range(10):
        for n in (4, 8, 16, 64, 128):
            assert 0 < asymptotic_ratio(r, n) < 1.05
        gaps = [abs(asymptotic_ratio(r, n) - 1) for n in (8, 16, 32, 64, 128)]
        assert all(b <= a for a, b in zip(gaps, gaps[1:]))


def test_asymptotic_ratio_large_n_does_not_overflow():
    assert 0.99 < asymptotic_ratio(5, 2000) < 1.0
