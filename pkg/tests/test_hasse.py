import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zident.combinat import binomial, bernoulli, stirling1
from zident.dirichlet import enumerate_characters, l_function
from zident.errors import DomainError, ValidityError
from zident.hasse import (DifferenceTable, finite_differences, newton_forward,
                          WeightProvider, summation_transform,
                          eta_hasse, eta_amore, amore_factorial_jsum,
                          amore_factorial_estimate, alt_hurwitz_hasse,
                          l_hasse, l_interpolation_q_le_5,
                          j_sum_and_estimate, chi_sum_estimate)
from zident.hasse import _ShiftedStirlingWeights
from zident.mpnum import make_context

from helpers import assert_digits, relerr


def eta_ref(s, digits=50):
    with mpmath.workdps(digits):
        v = (1 - 2 ** (1 - mpmath.mpmathify(s))) * mpmath.zeta(mpmath.mpmathify(s))
        return mpmath.mpf(v) if mpmath.im(v) == 0 else mpmath.mpc(v)


def zstar_ref(s, a, digits=50):
    # sum_(n>=1) (-1)^(n-1) (n+a-1)^(-s) = 2^-s (zeta(s,a/2) - zeta(s,(a+1)/2))
    with mpmath.workdps(digits):
        af = mpmath.mpf(a.numerator) / a.denominator
        sv = mpmath.mpmathify(s)
        return 2 ** (-sv) * (mpmath.zeta(sv, af / 2) - mpmath.zeta(sv, (af + 1) / 2))


rational_lists = st.lists(st.fractions(min_value=-50, max_value=50,
                                       max_denominator=40),
                          min_size=11, max_size=14)


# ---------------------------------------------------------------- engine

@settings(deadline=None, max_examples=40)
@given(rational_lists)
def test_alternating_binomial_sum_is_signed_forward_difference(h):
    # sum_j (-1)^j C(m,j) h(j+1) = (-1)^m Delta^m h(1), exactly
    table = DifferenceTable(h, 10)
    for m in range(11):
        direct = sum((-1) ** j * binomial(m, j) * h[j] for j in range(m + 1))
        assert direct == (-1) ** m * table.delta(m, 0)


@settings(deadline=None, max_examples=30)
@given(rational_lists, st.integers(0, 10))
def test_newton_forward_reconstructs_samples(h, N):
    assert newton_forward(h, N) == h[N]


@settings(deadline=None, max_examples=25)
@given(rational_lists, st.integers(1, 11))
def test_point_mass_weights_recover_single_value(h, N):
    # g concentrated at n = N turns the double sum back into h(N)
    w = WeightProvider.point_mass(N)
    table = DifferenceTable(h, len(h) - 1)
    r = summation_transform(w, table, len(h) - 1, make_context(20))
    assert r.value == h[N - 1]
    assert r.flags.get("exact") or r.tail_bound == 0


def test_geometric_weights_values():
    w = WeightProvider.geometric()
    for m in range(20):
        assert w.weight(m) == Fraction(1, 2 ** (m + 1))


def test_geometric_transform_sums_log_two():
    # h(n) = 1/n: sum (-1)^(n-1)/n = log 2, at ~0.30 digits per term
    ctx = make_context(15)
    h = [Fraction(1, n) for n in range(1, 80)]
    table = DifferenceTable(h, 70)
    r = summation_transform(WeightProvider.geometric(), table, 70, ctx)
    with mpmath.workdps(30):
        ref = mpmath.log(2)
    assert relerr(ctx, r.value, ref) < 1e-15


def test_polynomial_kernels_are_annihilated():
    # Delta^m kills degree < m: expansion over a cubic stops after 4 terms
    ctx = make_context(20)
    h = [Fraction(n ** 3 - 2 * n, 1) for n in range(1, 30)]
    table = DifferenceTable(h, 25)
    r = summation_transform(WeightProvider.geometric(), table, 25, ctx)
    assert r.flags.get("exact")
    # direct evaluation of the closed form: sum w_m (-1)^m Delta^m h(1)
    want = sum(Fraction(1, 2 ** (m + 1)) * (-1) ** m * table.delta(m, 0)
               for m in range(4))
    assert r.value == want


def test_validity_gate_raises():
    bad = WeightProvider("broken", lambda m: 0, 0.1, valid=False,
                         reason="outside validity region")
    table = DifferenceTable([Fraction(1)] * 5, 4)
    with pytest.raises(ValidityError):
        summation_transform(bad, table, 4, make_context(15))


# ---------------------------------------------------------------- eta

def test_eta_base_expansion_matches_reference():
    ctx = make_context(20)
    for s in (-2, 0, Fraction(1, 2), 2, None):
        sv = ctx.mpc(3, 4) if s is None else s
        r = eta_hasse(sv, 0, m_max=120, ctx=ctx)
        ref = eta_ref(3 + 4j if s is None else (Fraction(s) if not
                      isinstance(s, Fraction) else s))
        here = ctx.convert(complex(ref)) if s is None else ctx.convert(ref)
        assert relerr(ctx, r.value, here) < 1e-19, "s=%s" % (sv,)


def test_eta_exact_at_negative_two():
    # the kernel (j+1)^2 is a polynomial: finite exact expansion, eta(-2)=1/4
    ctx = make_context(30)
    r = eta_hasse(-2, 0, ctx=ctx)
    assert relerr(ctx, r.value, Fraction(1, 4)) < 1e-28


def test_eta_branches_agree_on_eta_three():
    ctx = make_context(20)
    ref = ctx.convert(eta_ref(3))
    ri = eta_hasse(ctx.mpf("2.25"), ctx.mpf("0.75"), ctx=ctx)   # integral
    rs = eta_hasse(2, 1, ctx=ctx, method="stirling")            # stirling
    assert ri.flags["branch"] == "integral"
    assert rs.flags["branch"] == "stirling"
    assert relerr(ctx, ri.value, ref) < 1e-18
    assert relerr(ctx, rs.value, ref) < 1e-18


def test_eta_deep_negative_shift():
    # Stirling branch reaches s0 deep in the left half plane
    ctx = make_context(15)
    r = eta_hasse(5, -3, ctx=ctx, method="stirling")
    assert relerr(ctx, r.value, eta_ref(2)) < 1e-13


def test_eta_integral_branch_rejects_left_of_minus_one():
    with pytest.raises(ValidityError):
        eta_hasse(3, -2, ctx=make_context(15), method="integral")
    with pytest.raises(DomainError):
        eta_hasse(3, 0, ctx=make_context(15), method="nope")


# ---------------------------------------------------------------- alt hurwitz

def test_alt_hurwitz_half_gives_four_catalan():
    ctx = make_context(25)
    r = alt_hurwitz_hasse(2, 0, Fraction(1, 2), ctx=ctx)
    with mpmath.workdps(40):
        ref = 4 * mpmath.mpf(mpmath.catalan)
    assert relerr(ctx, r.value, ref) < 1e-23


def test_alt_hurwitz_integral_branch():
    ctx = make_context(15)
    a = Fraction(1, 3)
    r = alt_hurwitz_hasse(ctx.mpf("1.5"), ctx.mpf("0.75"), a, ctx=ctx,
                          method="integral")
    assert relerr(ctx, r.value, zstar_ref("2.25", a)) < 1e-13


def test_alt_hurwitz_shifted_stirling_integer_shift():
    ctx = make_context(15)
    a = Fraction(1, 3)
    r = alt_hurwitz_hasse(ctx.mpf("1.5"), 2, a, ctx=ctx, method="stirling")
    assert relerr(ctx, r.value, zstar_ref("3.5", a)) < 1e-13


def test_shifted_stirling_weights_collapse_at_zero_shift():
    # at s0 = 0 the interpolation telescopes to the geometric weights exactly
    ctx = make_context(20)
    sw = _ShiftedStirlingWeights(0, Fraction(1, 3),
                                 lambda l, ectx: ectx.convert(0), 12, ctx)
    for m in range(13):
        w = sw.weight(m)
        assert abs(w - Fraction(1, 2 ** (m + 1))) == 0


def test_alt_hurwitz_integer_kernel():
    ctx = make_context(30)
    r = alt_hurwitz_hasse(3, 0, 3, ctx=ctx, integer_kernel=True)
    assert relerr(ctx, r.value, zstar_ref(3, Fraction(3))) < 1e-27


def test_alt_hurwitz_domain_checks():
    ctx = make_context(15)
    with pytest.raises(ValidityError):
        alt_hurwitz_hasse(2, 0, Fraction(1, 2), ctx=ctx, integer_kernel=True)
    with pytest.raises(DomainError):
        alt_hurwitz_hasse(2, 0, Fraction(-1, 2), ctx=ctx)


# ---------------------------------------------------------------- amore

def test_amore_geometric_matches_eta():
    ctx = make_context(15)
    for lam in (1, 3):
        r = eta_amore(2, lam, ctx=ctx)
        assert relerr(ctx, r.value, eta_ref(2)) < 1e-13, "lam=%d" % lam


def test_amore_geometric_slow_lambda_reports_honest_tail():
    # lam=20 converges at ~0.02 digits/term: far from done after 80 terms,
    # and the tail bound must say so
    ctx = make_context(25)
    r = eta_amore(2, 20, m_max=80, ctx=ctx)
    err = abs(r.value - ctx.convert(eta_ref(2)))
    assert not r.converged
    assert err <= r.tail_bound * 2


def test_amore_factorial_plateau():
    ctx = make_context(25)
    r = eta_amore(2, 20, m_max=80, ctx=ctx, variant="factorial")
    assert relerr(ctx, r.value, eta_ref(2)) < 1e-15


def test_amore_factorial_term_asymptotics():
    ctx = make_context(20)
    j = amore_factorial_jsum(200, 5, 2, ctx)
    e = amore_factorial_estimate(200, 5, 2, ctx)
    assert 0.9 <= float(j / e) <= 1.1


def test_amore_input_checks():
    ctx = make_context(15)
    with pytest.raises(DomainError):
        eta_amore(2, 0, ctx=ctx)
    with pytest.raises(ValidityError):
        eta_amore(-1, 5, ctx=ctx, variant="factorial")


# ---------------------------------------------------------------- L-functions

@pytest.mark.parametrize("q", [3, 4, 5, 8])
def test_l_hasse_matches_l_function(q):
    ctx = make_context(18)
    for chi in enumerate_characters(q)[1:]:
        r = l_hasse(2, 0, chi, ctx=ctx)
        ref = l_function(2, chi, ctx=make_context(25)).value
        assert relerr(ctx, r.value, ref) < 1e-16, chi.label


def test_l_hasse_left_of_critical_strip():
    ctx = make_context(15)
    chi = enumerate_characters(3)[1]
    r = l_hasse(-1, 0, chi, ctx=ctx)
    ref = l_function(-1, chi, ctx=make_context(25)).value
    assert abs(r.value - ctx.convert(ref)) < 1e-13


def test_l_interpolation_small_moduli():
    for q, (s, s0) in ((3, (2, 0)), (5, (3, 1)), (4, (2, 0))):
        ctx = make_context(15)
        for chi in enumerate_characters(q)[1:]:
            r = l_interpolation_q_le_5(s, s0, chi, ctx=ctx)
            ref = l_function(s + s0, chi, ctx=make_context(25)).value
            assert relerr(ctx, r.value, ref) < 1e-12, chi.label


def test_l_interpolation_refuses_large_modulus():
    ctx = make_context(15)
    chi = enumerate_characters(7)[1]
    with pytest.raises(ValidityError):
        l_interpolation_q_le_5(2, 0, chi, ctx=ctx)


# ---------------------------------------------------------------- asymptotics

def test_j_sum_exact_zero_for_small_negative_integer_s():
    ctx = make_context(20)
    for s in (0, -1, -2):
        ex, est = j_sum_and_estimate(abs(s) + 3, Fraction(1, 2), s, ctx)
        assert ex == 0
        assert est == 0


def test_j_sum_exact_rational_path():
    ctx = make_context(20)
    ex, _ = j_sum_and_estimate(2, Fraction(1, 2), -2, ctx)
    # sum_j (-1)^j C(2,j) (j+1/2)^2 = 1/4 - 2*9/4 + 25/4 = -2... exact
    want = Fraction(1, 4) - 2 * Fraction(9, 4) + Fraction(25, 4)
    assert ex == want


def test_j_sum_ratio_approaches_one():
    ctx = make_context(20)
    ex, est = j_sum_and_estimate(2000, Fraction(1, 2), 2, ctx)
    assert abs(float(ex / est) - 1) < 0.3


def test_chi_sum_even_character_vanishing():
    # mod 4: the class sums vanish whenever the binomial column sums align
    ctx = make_context(20)
    chi = enumerate_characters(4)[1]
    zeros = [m for m in range(40) if chi_sum_estimate(m, chi, ctx)["exact_is_zero"]]
    assert zeros, "expected exact zeros for the odd character mod 4"
    for m in zeros:
        assert chi_sum_estimate(m, chi, ctx)["exact"] == 0


def test_chi_sum_main_term_tracks_exact():
    ctx = make_context(20)
    for q in (3, 5):
        chi = enumerate_characters(q)[1]
        d = chi_sum_estimate(60, chi, ctx)
        if d["exact_is_zero"]:
            continue
        assert relerr(ctx, d["exact"], d["main_term"]) < 1e-6, q


def test_chi_sum_bound_holds_past_the_first_terms():
    ctx = make_context(20)
    for q in (3, 4, 5, 7, 8):
        for chi in enumerate_characters(q)[1:]:
            for m in (6, 25, 90):
                d = chi_sum_estimate(m, chi, ctx)
                assert abs(d["exact"]) <= d["bound"] * (1 + 1e-3), \
                    (q, chi.label, m)


# ---------------------------------------------------------------- identities

def test_stirling_bernoulli_weight_identity():
    # sum_l (-1)^(l-1)(1-2^l) s(m+1,l) B_l / l = (-1)^m m!/2^(m+1)
    for m in range(13):
        acc = Fraction(0)
        for l in range(1, m + 2):
            acc += (-1) ** (l - 1) * (1 - Fraction(2) ** l) \
                * stirling1(m + 1, l) * bernoulli(l) / l
        assert acc == Fraction((-1) ** m * math.factorial(m), 2 ** (m + 1))
