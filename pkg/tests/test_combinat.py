import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zident.combinat import (binomial, stirling1, stirling2, bernoulli,
                             bernoulli_poly, partial_fraction_weights,
                             c_a_table, c_a_value, b_lambda_weights,
                             b_lambda_weights_matrix)
from zident.errors import DomainError


@given(st.integers(0, 200), st.integers(-5, 205))
def test_binomial_matches_math_comb(n, k):
    if 0 <= k <= n:
        assert binomial(n, k) == math.comb(n, k)
    else:
        assert binomial(n, k) == 0


@given(st.integers(1, 40), st.integers(-20, 20))
def test_stirling_first_kind_generates_falling_factorial(n, x):
    # x(x-1)...(x-n+1) = sum_k s(n,k) x^k
    falling = 1
    for i in range(n):
        falling *= (x - i)
    assert sum(stirling1(n, k) * x ** k for k in range(n + 1)) == falling


@given(st.integers(1, 40), st.integers(-20, 20))
def test_stirling_second_kind_expands_powers(n, x):
    # x^n = sum_k S(n,k) x(x-1)...(x-k+1)
    total = 0
    for k in range(n + 1):
        falling = 1
        for i in range(k):
            falling *= (x - i)
        total += stirling2(n, k) * falling
    assert total == x ** n


def test_stirling_known_values():
    assert stirling1(4, 2) == 11
    assert stirling1(5, 1) == 24
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25


def test_bernoulli_known_values():
    known = {0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6),
             4: Fraction(-1, 30), 6: Fraction(1, 42), 8: Fraction(-1, 30),
             10: Fraction(5, 66), 12: Fraction(-691, 2730)}
    for n, v in known.items():
        assert bernoulli(n) == v
    for n in range(3, 31, 2):
        assert bernoulli(n) == 0


def test_bernoulli_large_denominators_von_staudt_clausen():
    # denominator of B_2n is the product of primes p with (p-1) | 2n
    for n in (2, 4, 10, 20, 50):
        den = 1
        for p in range(2, n + 2):
            if all(p % d for d in range(2, p)) and n % (p - 1) == 0:
                den *= p
        assert bernoulli(n).denominator == den


@given(st.integers(1, 25), st.fractions(max_denominator=30))
def test_bernoulli_poly_difference_identity(n, x):
    # B_n(x+1) - B_n(x) = n x^(n-1)
    assert bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == n * x ** (n - 1)


def test_bernoulli_poly_special_points():
    for n in range(13):
        assert bernoulli_poly(n, Fraction(0)) == bernoulli(n)
        assert bernoulli_poly(n, Fraction(1, 2)) == \
            (Fraction(2) ** (1 - n) - 1) * bernoulli(n)


@given(st.integers(0, 12), st.fractions(max_denominator=50))
def test_partial_fraction_weights_identity(m, z):
    if any(z == l for l in range(m + 1)):
        return
    w = partial_fraction_weights(m)
    prod = Fraction(1)
    for l in range(m + 1):
        prod *= (z - l)
    assert sum(w[l] / (z - l) for l in range(m + 1)) == 1 / prod


@given(st.integers(0, 10), st.integers(0, 11), st.fractions(max_denominator=20))
def test_c_a_recurrence(lam, j, a):
    # c_a(lam+1, j) = (a - j - 1) c_a(lam, j) + j c_a(lam, j-1)
    lhs = c_a_value(lam + 1, j, a)
    rhs = (a - j - 1) * c_a_value(lam, j, a) + j * c_a_value(lam, j - 1, a) \
        if j > 0 else (a - j - 1) * c_a_value(lam, j, a)
    assert lhs == rhs


def test_c_a_boundary_rows():
    t = c_a_table(8)
    for lam in range(9):
        # j = lam: lam!
        assert t[(lam, lam)] == (math.factorial(lam),)
        # j = 0: (a-1)^lam, i.e. binomial coefficients with alternating signs
        expect = tuple((-1) ** (lam - i) * binomial(lam, i)
                       for i in range(lam + 1))
        assert t[(lam, 0)] == expect


def test_c_a_value_agrees_with_table():
    t = c_a_table(6)
    a = Fraction(2, 7)
    for (lam, j), coeffs in t.items():
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * a + c
        assert c_a_value(lam, j, a) == acc


def test_b_lambda_closed_form_matches_linear_system():
    for Lam in range(1, 8):
        assert b_lambda_weights(Lam) == b_lambda_weights_matrix(Lam)


def test_domain_errors():
    with pytest.raises(DomainError):
        partial_fraction_weights(-1)
    with pytest.raises(DomainError):
        b_lambda_weights(0)
