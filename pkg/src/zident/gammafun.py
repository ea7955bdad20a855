"""Gamma and polygamma machinery built on the alpha-coefficient series.

The only Gamma implementation in the package is the integer-w series

  Gamma(s) = (N+1)^s N! sum_k alpha_k(s) / ((s+k)(s+k+1)...(s+k+N)),

bootstrapped from nothing but exp/log and the alpha table.  gamma_w
demonstrates the general complex-w form on top of a bootstrap ratio.
Digamma/trigamma use the classical asymptotic series with upward shifting.
"""

import math
from fractions import Fraction

from .alpha import alpha_table, alpha_bound, kcap_estimate
from .combinat import bernoulli
from .errors import DomainError, PoleError
from .mpnum import SeriesResult

__all__ = ["gamma_n", "gamma_w", "gamma_ref", "euler_gamma",
           "euler_gamma_limit_oracle", "digamma", "trigamma", "pi_value"]

_gamma_cache = {}
_pi_cache = {}


def _as_number(ctx, z):
    return ctx.convert(z)


def _check_pole(ctx, s):
    mp = ctx.mp
    sv = _as_number(ctx, s)
    re = sv.real if hasattr(sv, "real") else sv
    im = getattr(sv, "imag", 0)
    if im == 0 and re <= 0 and re == mp.floor(re):
        r = int(-re)
        raise PoleError("gamma pole at s=%s" % (-r,), location=-r,
                        residue=Fraction((-1) ** r, math.factorial(r)))
    return sv


def _auto_N(ctx):
    wd = ctx.working_digits
    return max(24, math.ceil(wd / 0.58))


def gamma_n(s, N=None, K=None, ctx=None):
    """Gamma via the integer-w series; w = N+1.  Returns a SeriesResult."""
    mp = ctx.mp
    sv = _check_pole(ctx, s)
    if N is None:
        N = _auto_N(ctx)
    auto_k = K is None
    if K is not None:
        kmax = K
    else:
        sig0 = sv.real if hasattr(sv, "real") else sv
        sc = max(float(sig0), 0.5)
        kmax = kcap_estimate(sc, N + 1,
                             math.lgamma(sc + N + 1) - math.lgamma(sc),
                             ctx.working_digits)
    alphas = alpha_table(sv, kmax, ctx)

    nfac = mp.mpf(math.factorial(N))
    # P_k = (s+k)(s+k+1)...(s+k+N); run the reciprocal
    P0 = mp.mpf(1)
    for i in range(N + 1):
        P0 *= sv + i
    if P0 == 0:
        raise DomainError("denominator vanishes at s=%s, N=%d" % (s, N))
    inv_p = 1 / P0
    total = mp.mpf(0)
    eps = ctx.working_eps
    terms = 0
    last = mp.mpf(0)
    for k in range(kmax + 1):
        t = alphas[k] * inv_p
        total += t
        terms = k + 1
        last = abs(t)
        if auto_k and k > 8 and last < eps * abs(total):
            break
        if k < kmax:
            inv_p *= (sv + k) / (sv + k + N + 1)
    # tail estimate: telescoping bound on sum_{k>K} N!/((k+sig)...(k+sig+N))
    sig = sv.real if hasattr(sv, "real") else sv
    flags = {}
    kk = terms - 1
    if sig + kk + 1 > 0:
        prod = mp.mpf(1)
        for i in range(N):
            prod *= sig + kk + 1 + i
        # abs(pref) below already carries the N! factor
        tail = alpha_bound(sv, kk + 1, ctx) / (N * prod)
        if hasattr(sv, "imag") and sv.imag != 0:
            flags["heuristic_tail"] = True
    else:
        tail = last * (kk + 1)
        flags["heuristic_tail"] = True
    pref = mp.power(mp.mpf(N + 1), sv) * nfac
    value = pref * total
    tail = abs(pref) * tail
    flags["converged"] = bool(tail < abs(value) * ctx.eps)
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags=flags)


def gamma_ref(z, ctx):
    """Full working-precision Gamma value (cached)."""
    mp = ctx.mp
    zv = _as_number(ctx, z)
    key = (repr(zv), mp.prec)
    got = _gamma_cache.get(key)
    if got is None:
        # move the series argument into Re in [1, 24): small arguments shift
        # up, large ones shift down (the alpha envelope grows like 2^|s|, so
        # the raw series loses digits for big arguments)
        re = zv.real if hasattr(zv, "real") else zv
        up = 0
        while re + up < 1:
            up += 1
        down = 0
        if up == 0:
            while re - down >= 24:
                down += 1
        wctx = ctx.elevated(14 + 2 * up.bit_length() + 2 * down.bit_length())
        wz = wctx.convert(zv)
        val = gamma_n(wz + up - down, ctx=wctx).value
        for i in range(up - 1, -1, -1):
            val /= wz + i
        for i in range(1, down + 1):
            val *= wz - i
        got = mp.mpf(val) if ctx.is_real(zv) else mp.mpc(val)
        _gamma_cache[key] = got
    return got


def gamma_w(s, w, K=None, ctx=None):
    """Gamma(s) = w^s Gamma(w) sum_k alpha_k(s) Gamma(s+k)/Gamma(s+k+w).

    Valid for Re w > 0.  The Gamma ratio runs by recurrence from a bootstrap
    ratio Gamma(s)/Gamma(s+w) evaluated with the integer-w series.
    """
    mp = ctx.mp
    wv = _as_number(ctx, w)
    sv = _check_pole(ctx, s)
    wre = wv.real if hasattr(wv, "real") else wv
    if not wre > 0:
        raise DomainError("gamma_w needs Re w > 0, got %s" % (w,))
    auto_k = K is None
    kmax = K if K is not None else 8 * ctx.working_digits + 64
    alphas = alpha_table(sv, kmax, ctx)
    gw = gamma_ref(wv, ctx)
    ratio = gamma_ref(sv, ctx) / gamma_ref(sv + wv, ctx)
    total = mp.mpf(0)
    eps = ctx.working_eps
    terms = 0
    for k in range(kmax + 1):
        t = alphas[k] * ratio
        total += t
        terms = k + 1
        if auto_k and k > 8 and abs(t) < eps * abs(total):
            break
        if k < kmax:
            ratio *= (sv + k) / (sv + k + wv)
    value = mp.power(wv, sv) * gw * total
    tail = abs(mp.power(wv, sv) * gw) * abs(t) * (terms + 1)
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags={"heuristic_tail": True,
                               "converged": bool(tail < abs(value) * ctx.eps)})


def euler_gamma(ctx, N=None, K=None):
    """gamma = H_N - log(N+1) - N! sum_{k>=1} alpha_k(0)/(k(k+1)...(k+N))."""
    mp = ctx.mp
    if N is None:
        N = max(20, math.ceil(0.9 * ctx.working_digits))
    auto_k = K is None
    kmax = K if K is not None else 40 * ctx.working_digits + 200
    alphas = alpha_table(mp.mpf(0), kmax, ctx)
    harm = mp.mpf(0)
    for m in range(1, N + 1):
        harm += mp.mpf(1) / m
    # t_k = N!/(k(k+1)...(k+N)) = N!(k-1)!/(k+N)!
    t = mp.mpf(1)
    for i in range(1, N + 1):
        t *= mp.mpf(i) / (1 + i)   # t_1 = N!/ (1*2*...*(N+1)) = 1/(N+1)
    total = mp.mpf(0)
    eps = ctx.working_eps
    terms = 0
    for k in range(1, kmax + 1):
        u = alphas[k] * t
        total += u
        terms = k
        if auto_k and k > 8 and abs(u) < eps * max(abs(total), mp.mpf(1)):
            break
        t *= mp.mpf(k) / (k + N + 1)
    value = harm - mp.log(N + 1) - total
    tail = abs(t) * alpha_bound(0, terms + 1, ctx) * (terms + N + 1) / N
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags={"converged": bool(tail < ctx.eps)})


def euler_gamma_limit_oracle(N, ctx, em_terms=3):
    """Limit-formula oracle: H_N - log N - 1/(2N) + sum B_2k/(2k N^2k)."""
    mp = ctx.mp
    harm = mp.mpf(0)
    one = mp.mpf(1)
    for m in range(1, N + 1):
        harm += one / m
    corr = -mp.log(N) - 1 / (2 * mp.mpf(N))
    for k in range(1, em_terms + 1):
        corr += ctx.mpf(bernoulli(2 * k)) / (2 * k * mp.mpf(N) ** (2 * k))
    return harm + corr


def _polygamma_shift(ctx, z):
    mp = ctx.mp
    zv = _as_number(ctx, z)
    re = zv.real if hasattr(zv, "real") else zv
    im = getattr(zv, "imag", 0)
    if im == 0 and re <= 0 and re == mp.floor(re):
        raise PoleError("polygamma pole at %s" % (z,), location=int(re))
    T = max(20, math.ceil(0.38 * ctx.working_digits))
    n = 0
    if abs(zv) < T or re < 1:
        n = int(max(0, math.ceil(T - re))) + 1
    return zv, n


def digamma(z, ctx):
    """psi(z) by upward recurrence + asymptotic series."""
    mp = ctx.mp
    zv, n = _polygamma_shift(ctx, z)
    acc = mp.mpf(0)
    for i in range(n):
        acc -= 1 / (zv + i)
    w = zv + n
    val = mp.log(w) - 1 / (2 * w)
    w2 = 1 / (w * w)
    p = mp.mpf(1)
    eps = ctx.working_eps
    prev = None
    for k in range(1, 4 * ctx.working_digits):
        p *= w2
        term = ctx.mpf(bernoulli(2 * k)) / (2 * k) * p
        if prev is not None and abs(term) > prev:
            break
        val -= term
        prev = abs(term)
        if prev < eps:
            break
    return val + acc


def trigamma(z, ctx):
    """psi'(z) by upward recurrence + asymptotic series."""
    mp = ctx.mp
    zv, n = _polygamma_shift(ctx, z)
    acc = mp.mpf(0)
    for i in range(n):
        acc += 1 / ((zv + i) * (zv + i))
    w = zv + n
    val = 1 / w + 1 / (2 * w * w)
    w2 = 1 / (w * w)
    p = 1 / w
    eps = ctx.working_eps
    prev = None
    for k in range(1, 4 * ctx.working_digits):
        p *= w2
        term = ctx.mpf(bernoulli(2 * k)) * p
        if prev is not None and abs(term) > prev:
            break
        val += term
        prev = abs(term)
        if prev < eps:
            break
    return val + acc


def pi_value(ctx):
    """pi as Gamma(1/2)^2, from the package's own Gamma series."""
    key = ctx.mp.prec
    got = _pi_cache.get(key)
    if got is None:
        g = gamma_ref(ctx.mpf(Fraction(1, 2)), ctx)
        got = g * g
        _pi_cache[key] = got
    return got
