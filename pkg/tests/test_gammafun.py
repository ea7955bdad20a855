import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zident.errors import PoleError
from zident.gammafun import (gamma_n, gamma_w, gamma_ref, euler_gamma,
                             euler_gamma_limit_oracle, digamma, trigamma,
                             pi_value)
from zident.mpnum import make_context

from helpers import assert_digits, relerr


def mpmath_gamma(z, digits):
    with mpmath.workdps(digits):
        return mpmath.mpf(mpmath.gamma(z)) if mpmath.im(z) == 0 \
            else mpmath.mpc(mpmath.gamma(z))


def test_gamma_integer_factorials():
    ctx = make_context(30)
    for n in (1, 2, 5, 10):
        r = gamma_n(n, ctx=ctx)
        assert_digits(ctx, r.value, math.factorial(n - 1), 29, "Gamma(%d)" % n)
        assert r.converged


def test_gamma_half_integer_squares_to_pi():
    ctx = make_context(40)
    r = gamma_n(ctx.mpf("0.5"), ctx=ctx)
    assert_digits(ctx, r.value * r.value, pi_value(ctx), 38)


def test_gamma_against_external_oracle():
    ctx = make_context(35)
    for z in ("0.5", "2.5", "7.25", "0.1"):
        r = gamma_n(ctx.mpf(z), ctx=ctx)
        assert_digits(ctx, r.value, mpmath_gamma(z, 60), 33, "Gamma(%s)" % z)


def test_gamma_complex_argument():
    ctx = make_context(30)
    r = gamma_n(ctx.mpc(2, 3), ctx=ctx)
    with mpmath.workdps(60):
        ref = mpmath.gamma(mpmath.mpc(2, 3))
    assert_digits(ctx, r.value, ctx.mpc(ref.real, ref.imag), 27)


def test_gamma_pole_reporting():
    ctx = make_context(20)
    for z in (0, -3):
        with pytest.raises(PoleError) as exc:
            gamma_n(z, ctx=ctx)
        assert exc.value.location == z


def test_gamma_reflection():
    ctx = make_context(30)
    s = ctx.mpf("0.3")
    lhs = gamma_ref(s, ctx) * gamma_ref(1 - s, ctx)
    rhs = pi_value(ctx) / ctx.mp.sin(pi_value(ctx) * s)
    assert_digits(ctx, lhs, rhs, 28)


def test_gamma_ref_recurrence():
    ctx = make_context(30)
    for z in ("-2.5", "0.25", "31.5"):
        zv = ctx.mpf(z)
        assert_digits(ctx, gamma_ref(zv + 1, ctx), zv * gamma_ref(zv, ctx), 28)


def test_gamma_w_matches_integer_route():
    # ratio decay is ~ k^(-w), so only moderately large w reaches full
    # precision within the automatic truncation
    ctx = make_context(30)
    base = gamma_n(ctx.mpf("2.5"), ctx=ctx).value
    for w in (20, ctx.mpf("15.5")):
        r = gamma_w(ctx.mpf("2.5"), w, ctx=ctx)
        assert_digits(ctx, r.value, base, 26, "gamma_w(w=%s)" % w)


def test_gamma_w_collapses_at_one():
    # alpha_k(1) = 0 for k >= 1: the series is the single k=0 term
    ctx = make_context(30)
    r = gamma_w(1, 3, ctx=ctx)
    assert_digits(ctx, r.value, 1, 28)


def test_gamma_w_small_w_reports_nonconvergence():
    ctx = make_context(30)
    r = gamma_w(ctx.mpf("2.5"), 1, ctx=ctx)
    assert not r.converged
    # ... but the tail bound honestly covers the actual error
    base = gamma_n(ctx.mpf("2.5"), ctx=ctx).value
    assert abs(r.value - base) <= r.tail_bound * 2


def test_digamma_special_values():
    ctx = make_context(35)
    g = euler_gamma(ctx).value
    assert_digits(ctx, digamma(1, ctx), -g, 33)
    assert_digits(ctx, digamma(ctx.mpf("0.5"), ctx),
                  -g - 2 * ctx.mp.log(2), 33)


def test_trigamma_special_values():
    ctx = make_context(35)
    pi = pi_value(ctx)
    assert_digits(ctx, trigamma(1, ctx), pi * pi / 6, 33)
    assert_digits(ctx, trigamma(ctx.mpf("0.5"), ctx), pi * pi / 2, 33)


@settings(deadline=None, max_examples=20)
@given(st.fractions(min_value=Fraction(1, 10), max_value=30,
                    max_denominator=16))
def test_digamma_recurrence(z):
    ctx = make_context(25)
    zv = ctx.mpf(z)
    lhs = digamma(zv + 1, ctx)
    rhs = digamma(zv, ctx) + 1 / zv
    assert relerr(ctx, lhs, rhs) <= 1e-23 * max(1.0, float(abs(1 / zv)))


def test_polygamma_pole():
    ctx = make_context(20)
    with pytest.raises(PoleError):
        digamma(-2, ctx)
    with pytest.raises(PoleError):
        trigamma(0, ctx)


def test_euler_gamma_vs_limit_oracle():
    ctx = make_context(30)
    r = euler_gamma(ctx)
    ref = euler_gamma_limit_oracle(10 ** 5, make_context(40), em_terms=4)
    assert_digits(ctx, r.value, ref, 29)
    assert r.converged


def test_pi_value_cross_precision():
    lo = make_context(30)
    hi = make_context(60)
    p30 = pi_value(lo)
    p60 = pi_value(hi)
    assert_digits(hi, p30, p60, 29)
    with mpmath.workdps(80):
        assert_digits(hi, p60, mpmath.mpf(mpmath.pi), 58)
