"""Hurwitz and Riemann zeta through the alpha-coefficient expansions.

All evaluators share one engine: a weighted series

    (1/Gamma(s)) sum_k alpha_k(s) sum_j w_j Gamma(s+k-j-1) Gamma(a) / Gamma(s+k+a-j-1)

with per-j running Gamma ratios.  Convergence goes like k^-(a-j), so every
public operation accelerates itself by splitting off a partial Dirichlet sum
and evaluating the same series at an integer-shifted second argument; shift 0
recovers the plain expansions verbatim.

At non-positive integer s the prefactor 1/Gamma(s) vanishes and only finitely
many terms survive as exact rational limits; those paths use exact alpha
values, which is what makes the trivial-zero/Bernoulli identities exact.
"""

import math
from fractions import Fraction

from .alpha import alpha_table, alpha_table_exact, alpha_bound, kcap_estimate
from .combinat import bernoulli, binomial, b_lambda_weights, c_a_value
from .errors import DomainError, PoleError
from .gammafun import gamma_ref, pi_value, trigamma
from .mpnum import SeriesResult, make_context

_BOUND_CTX = make_context(10)  # tail bounds never need real precision

__all__ = [
    "riemann_zeta", "hurwitz_zeta", "hurwitz_shifted", "zeta_shifted",
    "zeta_trigamma", "zeta_linear_combo", "euler_maclaurin_zeta",
    "euler_maclaurin_r2_bound", "remainder_tables", "zeta_ref",
]


# --------------------------------------------------------------------- helpers

def _num(ctx, z):
    return ctx.convert(z)


def _re(z):
    return z.real if hasattr(z, "real") else z


def _im(z):
    return getattr(z, "imag", 0)


def _is_nonpos_int(ctx, z):
    return _im(z) == 0 and _re(z) <= 0 and _re(z) == ctx.mp.floor(_re(z))


def _is_real(z):
    return _im(z) == 0


def _recip_gamma(z, ctx):
    """1/Gamma(z); exactly 0 at non-positive integers."""
    if _is_nonpos_int(ctx, z):
        return ctx.mp.mpf(0)
    return 1 / gamma_ref(z, ctx)


def _shift_ratio(sv, m, ctx):
    """Gamma(s+m)/Gamma(s) as an explicit rational product (finite always)."""
    mp = ctx.mp
    p = mp.mpf(1)
    if m >= 0:
        for i in range(m):
            p *= sv + i
        return p
    for i in range(m, 0):
        p /= sv + i
    return p


def _auto_len(ctx):
    # series length / shifted-argument size giving ~4^-L tail at L terms
    return max(24, math.ceil(ctx.working_digits / 0.58))


_kcap_estimate = kcap_estimate


def _pow(ctx, base, expo):
    return ctx.mp.power(base, expo)


# --------------------------------------------------------- the weighted engine

def _weighted_series(sv, a_val, weights, ctx, K=None, decay_j=None):
    """sum_k alpha_k(s) sum_j w_j G(k,j) with
    G(k,j) = [Gamma(s+k-j-1)/Gamma(s)] * [Gamma(a)/Gamma(s+k+a-j-1)].

    weights: dict j -> weight (mp numbers).  Returns (value, terms, tail, flags).
    The 1/Gamma(s) factor is already inside G via the shift ratio.
    """
    mp = ctx.mp
    auto_k = K is None
    js = sorted(weights)
    if K is not None:
        kcap = K
    else:
        wmax = max(float(abs(weights[j])) for j in js) or 1.0
        are = float(_re(a_val))
        kcap = _kcap_estimate(float(_re(sv)) - js[-1] - 1, are,
                              math.lgamma(are) + math.log(wmax + 1e-300),
                              ctx.working_digits)
    alphas = alpha_table(sv, kcap, ctx)
    ga = gamma_ref(a_val, ctx)
    # running G(k,j); ratio in k: (s+k-j-1)/(s+k+a-j-1)
    G = {}
    for j in js:
        G[j] = _shift_ratio(sv, -j - 1, ctx) * ga * _recip_gamma(sv + a_val - j - 1, ctx)
    total = mp.mpf(0)
    eps = ctx.working_eps
    terms = 0
    jmax = js[-1]
    real_cert = _is_real(sv) and _is_real(a_val)
    last_row = mp.mpf(0)
    for k in range(kcap + 1):
        row = mp.mpf(0)
        for j in js:
            row += weights[j] * G[j]
        t = alphas[k] * row
        total += t
        terms = k + 1
        last_row = row
        for j in js:
            G[j] *= (sv + k - j - 1) / (sv + k + a_val - j - 1)
        if auto_k and k > 8 and abs(t) * (k + 2) < eps * max(abs(total), eps):
            break
    # tail bound: G decays like k^-(a-j); crude ratio bound on the slowest
    # component (largest j), scaled by the alpha envelope
    flags = {}
    kk = terms - 1
    are = _re(a_val)
    c = are - jmax
    gsum = sum(abs(weights[j]) * abs(G[j]) for j in js)
    if c > 1:
        tail = alpha_bound(sv, kk + 1, ctx) * gsum * (kk + c) / (c - 1)
        if not real_cert:
            flags["heuristic_tail"] = True
    else:
        tail = alpha_bound(sv, kk + 1, ctx) * gsum * (kk + 2)
        flags["heuristic_tail"] = True
    return total, terms, tail, flags


# ------------------------------------------------------------------- Riemann

def _riemann_nonpos_int(r, N, ctx):
    """zeta(-r) continuation: only k with r+1-k in [0, N] survive."""
    mp = ctx.mp
    al = alpha_table_exact(Fraction(-r), r + 1)
    acc = Fraction(0)
    for k in range(max(0, r + 1 - N), r + 2):
        i0 = r + 1 - k
        prod = Fraction(1)
        ok = True
        for i in range(N + 1):
            if i == i0:
                continue
            f = -r + k - 1 + i
            if f == 0:
                ok = False
                break
            prod *= f
        if not ok:
            continue
        acc += al[k] * Fraction((-1) ** r * math.factorial(r) * math.factorial(N)) / prod
    partial = sum(Fraction(n) ** r for n in range(1, N + 1))
    return SeriesResult(value=ctx.mpf(partial + acc), terms_used=r + 2,
                        tail_bound=mp.mpf(0), flags={"exact": True,
                                                     "converged": True,
                                                     "rational": partial + acc})


def riemann_zeta(s, N=None, K=None, ctx=None):
    """zeta(s) = sum_{n<=N} n^-s + (N!/Gamma(s)) sum_k alpha_k(s) /
    ((s+k-1)(s+k)...(s+k-1+N))."""
    mp = ctx.mp
    sv = _num(ctx, s)
    if sv == 1:
        raise PoleError("zeta has a simple pole at s=1", location=1, residue=1)
    if _is_nonpos_int(ctx, sv):
        return _riemann_nonpos_int(int(-_re(sv)), N if N is not None else 0, ctx)
    if N is None:
        N = _auto_len(ctx)
    auto_k = K is None
    kcap = K if K is not None else _kcap_estimate(
        float(_re(sv)) - 1, N + 1, math.lgamma(N + 1), ctx.working_digits)
    alphas = alpha_table(sv, kcap, ctx)
    nfac = mp.mpf(math.factorial(N))
    # t_k = (N!/Gamma(s)) / ((s+k-1)(s+k)...(s+k-1+N)); running ratio
    den = sv - 1
    for i in range(N):
        den *= sv + i
    t = nfac / (den * gamma_ref(sv, ctx))
    total = t * alphas[0]
    eps = ctx.working_eps
    terms = 1
    last_t = total
    for k in range(1, kcap + 1):
        t *= (sv + k - 2) / (sv + k - 1 + N)
        u = alphas[k] * t
        total += u
        terms = k + 1
        last_t = u
        if auto_k and k > 8 and abs(u) * (k + 2) < eps * max(abs(total), eps):
            break
    partial = mp.mpf(0)
    for n in range(1, N + 1):
        partial += _pow(ctx, mp.mpf(n), -sv)
    kk = terms - 1
    sig = _re(sv)
    flags = {}
    if sig + kk > 1:
        # sum_{k>K} Gamma(sig+k-1)/Gamma(sig+k+N) telescopes to
        # Gamma(sig+K)/(N Gamma(sig+K+N)); low precision is plenty here
        b = _BOUND_CTX
        g = gamma_ref(b.mpf(float(sig + kk)), b) \
            / gamma_ref(b.mpf(float(sig + kk + N)), b)
        tail = alpha_bound(sv, kk + 1, b) * nfac * g \
            / (N * abs(gamma_ref(sv, ctx)))
        if not _is_real(sv):
            flags["heuristic_tail"] = True
    else:
        tail = abs(last_t) * (kk + 2)
        flags["heuristic_tail"] = True
    value = partial + total
    flags["converged"] = bool(tail < ctx.eps * max(abs(value), mp.mpf(1)))
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags=flags)


def zeta_ref(s, ctx):
    """Reference zeta at full working precision (alpha method, big N)."""
    return riemann_zeta(s, ctx=ctx).value


# -------------------------------------------------------------------- Hurwitz

def _hurwitz_nonpos_int(r, a, ctx):
    """zeta(-r, a): finite sum of exact limits, k = 0..r+1."""
    mp = ctx.mp
    av = _num(ctx, a)
    al = alpha_table_exact(Fraction(-r), r + 1)
    acc = mp.mpf(0)
    for k in range(r + 2):
        m = k - 1
        # Gamma(s+k-1)/Gamma(s) at s=-r: polynomial/rational product
        sr = _shift_ratio(mp.mpf(-r), m, ctx)
        if sr == 0:
            continue
        g2 = gamma_ref(av, ctx) * _recip_gamma(av + (-r + k - 1), ctx)
        acc += ctx.mpf(al[k]) * sr * g2
    return SeriesResult(value=acc, terms_used=r + 2, tail_bound=mp.mpf(0),
                        flags={"exact": True, "converged": True})


def hurwitz_zeta(s, a, K=None, ctx=None, shift=None):
    """zeta(s, a) = (1/Gamma(s)) sum_k alpha_k(s) Gamma(s+k-1) Gamma(a) /
    Gamma(s+k+a-1), accelerated by an integer shift of a."""
    mp = ctx.mp
    sv = _num(ctx, s)
    av = _num(ctx, a)
    if not _re(av) > 0:
        raise DomainError("hurwitz_zeta needs Re a > 0")
    if sv == 1:
        raise PoleError("zeta(s,a) has a simple pole at s=1", location=1,
                        residue=1)
    if _is_nonpos_int(ctx, sv):
        return _hurwitz_nonpos_int(int(-_re(sv)), av, ctx)
    if shift is None:
        shift = max(0, _auto_len(ctx) - int(_re(av)))
    partial = mp.mpf(0)
    for n in range(shift):
        partial += _pow(ctx, av + n, -sv)
    a2 = av + shift
    val, terms, tail, flags = _weighted_series(sv, a2, {0: mp.mpf(1)}, ctx, K=K)
    value = partial + val
    flags["converged"] = bool(tail < ctx.eps * max(abs(value), mp.mpf(1)))
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags=flags)


def hurwitz_shifted(s, lam, a, K=None, ctx=None, shift=None):
    """zeta(s - lambda, a) through the c_a(lambda, j) weighted expansion."""
    mp = ctx.mp
    sv = _num(ctx, s)
    av = _num(ctx, a)
    lam = int(lam)
    if lam < 0:
        raise DomainError("lambda must be >= 0")
    if not _re(av) > 0:
        raise DomainError("hurwitz_shifted needs Re a > 0")
    if sv - lam == 1:
        raise PoleError("zeta(s-lambda, a) pole at s-lambda=1",
                        location=lam + 1, residue=1)
    if _is_nonpos_int(ctx, sv):
        # s - lambda is then also a non-positive integer; finite path
        return _hurwitz_nonpos_int(int(-_re(sv)) + lam, av, ctx)
    if shift is None:
        shift = max(0, _auto_len(ctx) + 2 * lam - int(_re(av)))
    partial = mp.mpf(0)
    for n in range(shift):
        partial += _pow(ctx, av + n, -(sv - lam))
    a2 = av + shift
    a2_exact = None
    if isinstance(a, (int, Fraction)):
        a2_exact = Fraction(a) + shift
    weights = {}
    for j in range(lam + 1):
        w = c_a_value(lam, j, a2_exact if a2_exact is not None else a2)
        if w != 0:
            weights[j] = ctx.mpf(w) if isinstance(w, (int, Fraction)) else w
    if not weights:
        weights = {0: mp.mpf(0)}
    val, terms, tail, flags = _weighted_series(sv, a2, weights, ctx, K=K)
    value = partial + val
    flags["converged"] = bool(tail < ctx.eps * max(abs(value), mp.mpf(1)))
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags=flags)


def zeta_shifted(s, lam, K=None, ctx=None, N=None):
    """zeta(s - lambda) via the Stirling-2 weighted expansion.

    N = 0 is the plain form (weights (-1)^(lambda+j) j! S(lambda,j), i.e.
    c_1(lambda, j)); the default N splits off sum_{n<=N} n^(lambda-s).
    """
    return hurwitz_shifted(s, lam, 1, K=K, ctx=ctx, shift=N)


# ------------------------------------------------------------------- trigamma

def zeta_trigamma(s, K=None, ctx=None, N=None):
    """zeta(s+1) = (1/Gamma(s)) sum_k alpha_k(s) Psi_1(s+k), accelerated by
    subtracting sum_{n<=N} B(s+k, n)/n (exactly the head of Psi_1)."""
    sv0 = _num(ctx, s)
    if sv0 == 0:
        raise PoleError("zeta(s+1) pole at s=0", location=0, residue=1)
    if _is_nonpos_int(ctx, sv0):
        raise DomainError("zeta_trigamma: termwise limits diverge at "
                          "non-positive integer s")
    if N is None:
        N = 0 if sv0 == 1 else _auto_len(ctx)
    # cancellation in Psi_1 - head reaches ~log10 C(K+N, N); elevate
    extra = int((math.lgamma(4 * N + 1) - 2 * math.lgamma(2 * N + 1))
                / math.log(10)) + 10 if N else 0
    wctx = ctx.elevated(extra)
    mp = wctx.mp
    sv = _num(wctx, s)
    auto_k = K is None
    if K is not None:
        kcap = K
    elif N > 0:
        kcap = _kcap_estimate(float(_re(sv)), N + 1, math.lgamma(N + 1),
                              wctx.working_digits)
    else:
        kcap = 8 * wctx.working_digits
    alphas = alpha_table(sv, kcap, wctx)
    rg = _recip_gamma(sv, wctx)
    eps = mp.mpf(10) ** (-(ctx.working_digits + 5))
    total = mp.mpf(0)
    terms = 0
    last = mp.mpf(0)
    for k in range(kcap + 1):
        z = sv + k
        if alphas[k] == 0 and k > 0:
            # alpha vanishes identically at s=1; nothing more comes
            if _re(sv) == 1 and _im(sv) == 0:
                break
        if k >= N and N > 0:
            # direct tail: V_k = sum_{n>N} B(z, n)/n
            b = gamma_ref(z, wctx) * gamma_ref(mp.mpf(N + 1), wctx) \
                / gamma_ref(z + N + 1, wctx)
            v = mp.mpf(0)
            n = N + 1
            t = b / n
            while True:
                v += t
                t *= (mp.mpf(n) / (z + n)) * (mp.mpf(n) / (n + 1))
                n += 1
                if abs(t) < eps * max(abs(v), eps) or n > N + 80 * wctx.working_digits:
                    break
            bracket = v
        else:
            head = mp.mpf(0)
            if N:
                b = 1 / z  # B(z,1)
                for n in range(1, N + 1):
                    head += b / n
                    b *= n / (z + n)
            bracket = trigamma(z, wctx) - head
        t = alphas[k] * bracket
        total += t
        terms = k + 1
        last = abs(t)
        if auto_k and k > 8 and last * (k + 2) < eps * max(abs(total), eps):
            break
    partial = mp.mpf(0)
    for n in range(1, N + 1):
        partial += _pow(wctx, mp.mpf(n), -(sv + 1))
    value = partial + rg * total
    tail = abs(rg) * last * (terms + 1)
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags={"heuristic_tail": True,
                               "converged": bool(tail < ctx.eps * max(abs(value), mp.mpf(1)))})


# --------------------------------------------------------------- linear combo

def zeta_linear_combo(s, Lambda, K=None, ctx=None, N=None):
    """(lhs, rhs): lhs = sum b_lambda zeta(s-lambda) via riemann_zeta;
    rhs = the collapsed single series with product denominators
    1/((s+k-2)...(s+k-Lambda-1)) (N=0) or its shift-accelerated form."""
    mp = ctx.mp
    sv = _num(ctx, s)
    Lambda = int(Lambda)
    if Lambda < 1:
        raise DomainError("Lambda must be >= 1")
    for lam in range(1, Lambda + 1):
        if sv - lam == 1:
            raise PoleError("zeta(s-lambda) pole for lambda=%d" % lam,
                            location=lam + 1, residue=1)
    b = b_lambda_weights(Lambda)
    lhs = mp.mpf(0) if _is_real(sv) else mp.mpc(0)
    worst = None
    for lam in range(1, Lambda + 1):
        r = riemann_zeta(sv - lam, ctx=ctx)
        lhs += ctx.mpf(b[lam - 1]) * r.value
        if worst is None or r.tail_bound > worst:
            worst = r.tail_bound
    if N is None:
        N = _auto_len(ctx) + 2 * Lambda
    partial = mp.mpf(0)
    for lam in range(1, Lambda + 1):
        blam = ctx.mpf(b[lam - 1])
        for n in range(1, N + 1):
            partial += blam * _pow(ctx, mp.mpf(n), -(sv - lam))
    a2 = Fraction(N + 1)
    weights = {}
    for j in range(Lambda + 1):
        w = Fraction(0)
        for lam in range(max(1, j), Lambda + 1):
            w += b[lam - 1] * c_a_value(lam, j, a2)
        if w != 0:
            weights[j] = ctx.mpf(w)
    val, terms, tail, flags = _weighted_series(sv, ctx.mpf(a2), weights, ctx,
                                               K=K)
    rhs_value = partial + val
    flags["converged"] = bool(tail < ctx.eps * max(abs(rhs_value), mp.mpf(1)))
    rhs = SeriesResult(value=rhs_value, terms_used=terms, tail_bound=tail,
                       flags=flags)
    lhs_res = SeriesResult(value=lhs, terms_used=Lambda, tail_bound=worst,
                           flags={"converged": True})
    return lhs_res, rhs


# ------------------------------------------------------------ Euler-Maclaurin

def euler_maclaurin_zeta(s, N, K, ctx):
    """Classical comparator:
    sum_{n<=N} n^-s + N^(1-s)/(s-1) + sum_{k=1}^K C(s+k-2,k-1)(B_k/k)N^(1-s-k).
    """
    mp = ctx.mp
    sv = _num(ctx, s)
    if sv == 1:
        raise PoleError("zeta pole at s=1", location=1, residue=1)
    if N < 1:
        raise DomainError("euler_maclaurin_zeta needs N >= 1")
    total = mp.mpf(0)
    for n in range(1, N + 1):
        total += _pow(ctx, mp.mpf(n), -sv)
    total += _pow(ctx, mp.mpf(N), 1 - sv) / (sv - 1)
    # c_k = C(s+k-2, k-1), running
    c = mp.mpf(1)
    npow = _pow(ctx, mp.mpf(N), -sv)  # N^(1-s-k) at k=1
    last = mp.mpf(0)
    for k in range(1, K + 1):
        if k == 1 or k % 2 == 0:
            bk = ctx.mpf(bernoulli(k))
            last = c * bk / k * npow
            total += last
        c *= (sv + k - 1) / k
        npow /= N
    tail = euler_maclaurin_r2_bound(sv, N, K, ctx)
    flags = {} if tail is not None else {"heuristic_tail": True}
    if tail is None:
        tail = abs(last)
    return SeriesResult(value=total, terms_used=K, tail_bound=tail, flags=flags)


def euler_maclaurin_r2_bound(s, N, K, ctx):
    """|R_2| <= 2 zeta(K) N^(1-sigma) |s+K-1|/(sigma+K-1) *
    |Gamma(s+K-1)| / (|Gamma(s)| (2 pi N)^K); None when outside validity.

    Evaluated at low precision; it is an error envelope, not a value."""
    b = _BOUND_CTX
    mp = b.mp
    sv = b.convert(s)
    sig = _re(sv)
    if K < 2 or sig + K - 1 <= 1:
        return None
    # zeta(K) <= 1 + 2^(1-K) for K >= 2; cheap and safe for a bound
    zk = 1 + mp.mpf(2) ** (1 - K)
    g1 = gamma_ref(sv + K - 1, b)
    g2 = gamma_ref(sv, b)
    tp = 2 * pi_value(b) * N
    return 2 * zk * _pow(b, mp.mpf(N), 1 - sig) * abs(sv + K - 1) \
        / (sig + K - 1) * abs(g1) / (abs(g2) * _pow(b, tp, mp.mpf(K)))


# ------------------------------------------------------------ remainder grids

DEFAULT_K_GRID = (0, 1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024, 2048)
DEFAULT_N_GRID = (1, 5, 20, 100)


_table_ref_cache = {}


def _zeta_ref_for_tables(s, ctx):
    """alpha-method reference with certified-tiny tail (big N, elevated prec)."""
    ref_ctx = ctx.elevated(ctx.working_digits + 80)
    key = (repr(s), ref_ctx.working_digits)
    got = _table_ref_cache.get(key)
    if got is None:
        got = riemann_zeta(_num(ref_ctx, s), N=260, ctx=ref_ctx).value
        _table_ref_cache[key] = got
    return got, ref_ctx


def remainder_tables(kind, ctx, s=3, K_grid=DEFAULT_K_GRID,
                     N_grid=DEFAULT_N_GRID):
    """Relative remainder grids.

    kind='alpha': R(K,N,s)/zeta(s) for the partial-sum alpha expansion;
    kind='em':    R_2(K,N,s)/zeta(s) for the Euler-Maclaurin comparator.
    Returns {(K, N): mpf}.
    """
    if kind not in ("alpha", "em"):
        raise DomainError("kind must be 'alpha' or 'em'")
    zref, ref_ctx = _zeta_ref_for_tables(s, ctx)
    out = {}
    for N in N_grid:
        for Kv in K_grid:
            out[(Kv, N)] = _remainder_cell(kind, s, N, Kv, zref, ref_ctx, ctx)
    return out


def _cell_magnitude_log10(kind, s, N, Kv):
    """Rough log10 of the relative remainder: the first omitted term."""
    sig = float(s.real if hasattr(s, "real") else s)
    ln10 = math.log(10)
    if kind == "alpha":
        return (math.lgamma(N + 1) + math.lgamma(sig + Kv)
                - math.lgamma(sig + Kv + N + 1) - math.lgamma(sig)) / ln10
    # first omitted even Bernoulli term of the Euler-Maclaurin sum
    k2 = Kv + 1 if (Kv + 1) % 2 == 0 else Kv + 2
    lb = math.lgamma(k2 + 1) - k2 * math.log(2 * math.pi) + math.log(2)
    lc = math.lgamma(sig + k2 - 1) - math.lgamma(k2) - math.lgamma(sig)
    return (lb + lc + (1 - sig - k2) * math.log(N)) / ln10


def _remainder_cell(kind, s, N, Kv, zref, ref_ctx, ctx):
    prec_ctx = ref_ctx
    est = _cell_magnitude_log10(kind, s, N, Kv)
    need = int(-est) + ctx.target_digits + 40
    if need > prec_ctx.working_digits:
        prec_ctx = ctx.elevated(need - ctx.working_digits)
    for _round in range(4):
        if kind == "alpha":
            row = riemann_zeta(_num(prec_ctx, s), N=N, K=Kv, ctx=prec_ctx).value
        else:
            row = euler_maclaurin_zeta(_num(prec_ctx, s), N, Kv, prec_ctx).value
        zv = zref if prec_ctx is ref_ctx else \
            _zeta_ref_for_tables(s, prec_ctx)[0]
        diff = (zv - row) / zv
        if diff == 0 or abs(diff) > prec_ctx.mp.mpf(10) ** (
                -(prec_ctx.working_digits - ctx.target_digits - 8)):
            return diff
        prec_ctx = prec_ctx.elevated(prec_ctx.working_digits)
    return diff
