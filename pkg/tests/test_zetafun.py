from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zident.combinat import bernoulli, bernoulli_poly
from zident.errors import PoleError
from zident.gammafun import pi_value
from zident.mpnum import make_context
from zident.zetafun import (riemann_zeta, hurwitz_zeta, hurwitz_shifted,
                            zeta_shifted, zeta_trigamma, zeta_linear_combo,
                            euler_maclaurin_zeta, euler_maclaurin_r2_bound,
                            remainder_tables)
from zident.combinat import b_lambda_weights

from helpers import assert_digits, relerr


def mpmath_zeta(s, digits, a=None):
    with mpmath.workdps(digits):
        if a is None:
            v = mpmath.zeta(s)
        else:
            av = mpmath.mpf(a.numerator) / a.denominator
            v = mpmath.zeta(s, av)
        return mpmath.mpf(v) if mpmath.im(v) == 0 else mpmath.mpc(v)


def test_zeta_two_is_pi_squared_over_six():
    ctx = make_context(40)
    r = riemann_zeta(2, ctx=ctx)
    assert_digits(ctx, r.value, pi_value(ctx) ** 2 / 6, 38)


def test_zeta_against_external_oracle():
    ctx = make_context(40)
    for s in (3, ctx.mpf("0.5"), ctx.mpf("-2.5"), ctx.mpf("1.8")):
        r = riemann_zeta(s, ctx=ctx)
        assert_digits(ctx, r.value, mpmath_zeta(s, 60), 38, "zeta(%s)" % s)


def test_zeta_complex_argument():
    ctx = make_context(35)
    r = riemann_zeta(ctx.mpc(2, 3), ctx=ctx)
    with mpmath.workdps(60):
        ref = mpmath.zeta(mpmath.mpc(2, 3))
    assert_digits(ctx, r.value, ctx.mpc(ref.real, ref.imag), 33)


def test_zeta_negative_integers_exact():
    ctx = make_context(100)
    for r in range(21):
        res = riemann_zeta(-r, ctx=ctx)
        want = Fraction(-1) ** r * bernoulli(r + 1) / (r + 1)
        assert res.flags.get("rational") == want
        assert_digits(ctx, res.value, ctx.convert(want), 99, "zeta(-%d)" % r)


def test_zeta_pole():
    ctx = make_context(20)
    with pytest.raises(PoleError) as exc:
        riemann_zeta(1, ctx=ctx)
    assert exc.value.residue == 1


def test_hurwitz_reduces_to_riemann_at_a_one():
    ctx = make_context(35)
    for s in (3, ctx.mpf("0.5")):
        h = hurwitz_zeta(s, 1, ctx=ctx)
        z = riemann_zeta(s, ctx=ctx)
        assert_digits(ctx, h.value, z.value, 33)


def test_hurwitz_against_external_oracle():
    ctx = make_context(35)
    for s, a in ((3, Fraction(1, 3)), (ctx.mpf("0.5"), Fraction(2, 5)),
                 (ctx.mpf("-1.5"), Fraction(1, 2))):
        h = hurwitz_zeta(s, a, ctx=ctx)
        ref = mpmath_zeta(s, 55, a=a)
        assert_digits(ctx, h.value, ref, 32, "hurwitz(%s,%s)" % (s, a))


def test_hurwitz_negative_integers_bernoulli_polynomials():
    ctx = make_context(40)
    for r in range(8):
        for a in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)):
            h = hurwitz_zeta(-r, a, ctx=ctx)
            want = -bernoulli_poly(r + 1, a) / (r + 1)
            assert_digits(ctx, h.value, ctx.convert(want), 38)


def test_shifted_routes_hit_the_same_point():
    ctx = make_context(35)
    z3 = riemann_zeta(3, ctx=ctx).value
    assert_digits(ctx, zeta_shifted(5, 2, ctx=ctx).value, z3, 33)
    assert_digits(ctx, hurwitz_shifted(5, 2, Fraction(1, 2), ctx=ctx).value,
                  hurwitz_zeta(3, Fraction(1, 2), ctx=ctx).value, 33)
    # the trigamma-kernel series evaluates zeta at s+1
    assert_digits(ctx, zeta_trigamma(3, ctx=ctx).value,
                  riemann_zeta(4, ctx=ctx).value, 33)


def test_shifted_pole_detection():
    ctx = make_context(20)
    with pytest.raises(PoleError):
        zeta_shifted(3, 2, ctx=ctx)   # targets zeta(1)
    with pytest.raises(PoleError):
        zeta_linear_combo(3, 2, ctx=ctx)


def test_linear_combo_both_sides_agree():
    ctx = make_context(35)
    for Lam in (2, 3):
        lhs, rhs = zeta_linear_combo(6, Lam, ctx=ctx)
        assert_digits(ctx, lhs.value, rhs.value, 32, "Lambda=%d" % Lam)


def test_linear_combo_against_external_oracle():
    ctx = make_context(35)
    Lam = 3
    _, rhs = zeta_linear_combo(6, Lam, ctx=ctx)
    w = b_lambda_weights(Lam)
    ref = sum(ctx.convert(w[l - 1]) * mpmath_zeta(6 - l, 50)
              for l in range(1, Lam + 1))
    assert_digits(ctx, rhs.value, ref, 32)


def test_euler_maclaurin_in_convergent_regime():
    ctx = make_context(40)
    ref = riemann_zeta(3, ctx=ctx).value
    for N, K in ((10, 20), (20, 30), (100, 8)):
        em = euler_maclaurin_zeta(3, N, K, ctx)
        err = abs(em.value - ref)
        bound = euler_maclaurin_r2_bound(3, N, K, ctx)
        assert err <= bound * 2, "N=%d K=%d err %s bound %s" % (N, K, err, bound)


def test_remainder_tables_spot_cells():
    # small custom grids; reference values from the full-precision run
    ctx = make_context(60)
    ta = remainder_tables("alpha", ctx, K_grid=(0, 8), N_grid=(1, 20))
    assert set(ta) == {(0, 1), (0, 20), (8, 1), (8, 20)}
    assert relerr(ctx, ta[(0, 1)], ctx.mpf("0.09876701304")) < 5e-10
    assert relerr(ctx, ta[(8, 20)], ctx.mpf("3.577149365e-10")) < 5e-10
    tb = remainder_tables("em", ctx, K_grid=(16,), N_grid=(1,))
    assert relerr(ctx, tb[(16, 1)], ctx.mpf("43.97791945")) < 5e-10
