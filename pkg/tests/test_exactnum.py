"""Exact arithmetic layer: Bernoulli families, pochhammer, power sums."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from projheat.exactnum import (
    bernoulli_number,
    bernoulli_polynomial,
    binomial_general,
    parse_rational,
    pochhammer,
    power_sum,
    rational_str,
    theta2_series_coefficient,
)


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """Independent Bernoulli oracle (second convention, B_1 = +1/2)."""
    a = [Fraction(0)] * (n + 1)
    out = []
    for m in range(n + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def test_bernoulli_against_akiyama_tanigawa():
    oracle = akiyama_tanigawa(40)
    for d in range(41):
        expected = -oracle[d] if d == 1 else oracle[d]
        assert bernoulli_number(d) == expected


def test_bernoulli_examples():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(3) == 0
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(4) == Fraction(-1, 30)
    assert bernoulli_number(1) == Fraction(-1, 2)


def test_bernoulli_polynomial_examples():
    assert bernoulli_polynomial(0, Fraction(7, 3)) == 1
    assert bernoulli_polynomial(1, Fraction(1, 2)) == 0
    assert bernoulli_polynomial(2, Fraction(1, 2)) == Fraction(-1, 12)


def test_bernoulli_polynomial_at_zero_recovers_numbers():
    for d in range(41):
        assert bernoulli_polynomial(d, 0) == bernoulli_number(d)


@given(st.integers(min_value=1, max_value=18),
       st.fractions(min_value=-3, max_value=3, max_denominator=6))
def test_bernoulli_polynomial_difference_equation(d, x):
    # B_d(x+1) - B_d(x) = d x^{d-1} pins the polynomial given B_d(0) = B_d
    assert bernoulli_polynomial(d, x + 1) - bernoulli_polynomial(d, x) == d * x ** (d - 1)


def test_theta2_series_coefficient_values():
    assert theta2_series_coefficient(0) == Fraction(1, 12)
    assert theta2_series_coefficient(1) == Fraction(7, 480)


def test_theta2_series_coefficient_is_not_bernoulli():
    # the two sequences share a symbol in the literature but differ
    assert theta2_series_coefficient(1) != bernoulli_number(1)
    assert theta2_series_coefficient(2) != bernoulli_number(2)


@pytest.mark.parametrize("d", range(21))
def test_half_argument_identity(d):
    lhs = bernoulli_polynomial(2 * d + 2, Fraction(1, 2))
    assert lhs == (-1) ** (d + 1) * (d + 1) * theta2_series_coefficient(d)


@pytest.mark.parametrize("d", range(41))
def test_half_argument_textbook(d):
    lhs = bernoulli_polynomial(d, Fraction(1, 2))
    assert lhs == -(1 - Fraction(2) ** (1 - d)) * bernoulli_number(d)


def test_pochhammer_examples():
    assert pochhammer(5, 0) == 1
    assert pochhammer(-3, 5) == 0
    assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)


@given(st.fractions(min_value=-4, max_value=4, max_denominator=4),
       st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_pochhammer_additivity(a, j, k):
    assert pochhammer(a, j + k) == pochhammer(a, j) * pochhammer(a + j, k)


def test_binomial_general_examples():
    assert binomial_general(4, 2) == 6
    assert binomial_general(Fraction(9, 7), 0) == 1
    assert binomial_general(Fraction(-1, 2), 2) == Fraction(3, 8)


@given(st.fractions(min_value=-5, max_value=5, max_denominator=6),
       st.integers(min_value=0, max_value=8))
def test_binomial_pochhammer_relation(a, k):
    assert binomial_general(a, k) == (-1) ** k * pochhammer(-a, k) / math.factorial(k)


def test_power_sum_examples():
    assert power_sum(0, 3, Fraction(1, 2)) == Fraction(1, 8)
    assert power_sum(3, 1, 0) == 6
    brute = sum(Fraction(k) + Fraction(1, 2) for k in range(5))
    assert power_sum(4, 1, Fraction(1, 2)) == brute
    brute5 = sum((Fraction(k) + Fraction(1, 2)) ** 5 for k in range(5))
    assert power_sum(4, 5, Fraction(1, 2)) == brute5


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2)])
def test_power_sum_brute_force_grid(a):
    for m in range(11):
        for q in range(1, 10):
            assert power_sum(m, q, a) == sum((k + a) ** q for k in range(m + 1))


def test_results_in_lowest_terms():
    for d in (2, 4, 12, 30):
        b = bernoulli_number(d)
        assert math.gcd(b.numerator, b.denominator) == 1
        assert b.denominator > 0


def test_rational_serialization_round_trip():
    for x in (Fraction(0), Fraction(-7, 480), Fraction(4), Fraction(11, 12)):
        s = rational_str(x)
        assert "/" in s
        assert parse_rational(s) == x
    assert rational_str(Fraction(0)) == "0/1"


def test_cache_safe_under_concurrent_growth():
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(bernoulli_number, [80] * 16))
    assert len(set(results)) == 1
    assert results[0] == bernoulli_number(80)
