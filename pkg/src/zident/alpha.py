"""Taylor coefficients alpha_k(s) of ((-log(1-t))/t)^(s-1) and friends.

alpha_0 = 1, alpha_1 = (s-1)/2, and for k >= 1

  alpha_{k+1}(s) = 1/(k(k+1)(k+2)) * sum_{j=1}^{k}
        alpha_j(s) * j * (k + k^2 + s(2k+2-j)) / ((k-j+1)(k-j+2)).

The recursion is evaluated left-to-right; numerically it runs over scaled
integers (fixed point) so the O(K^2) inner loop stays cheap.  For very large K
the coefficients instead come from the generating function as
exp((s-1) log A), A(t) = -log(1-t)/t, through the Kronecker-packed series
engine, cross-checked against a recursion prefix on every use.
"""

import math
from fractions import Fraction

from . import fastseries
from .errors import DomainError

__all__ = ["alpha_table", "alpha_bound", "alpha_prime_at_1",
           "alpha_prime_integral", "alpha_table_exact"]

# threshold above which the generating-function fast path takes over
FAST_PATH_K = 8192
_CROSS_CHECK_LEN = 512

_numeric_cache = {}   # (s_key, prec_bits) -> list of mpf/mpc
_exact_cache = {}     # Fraction s -> list of Fraction
_prime_cache = [Fraction(0), Fraction(1, 2)]


def _recursion_fixed(sr, si, K, S):
    """Fixed-point recursion; sr, si are s scaled by 2^S.  Returns int lists."""
    import gmpy2
    one = 1 << S
    sr = gmpy2.mpz(sr)
    si = gmpy2.mpz(si)
    ar = [gmpy2.mpz(one), (sr - one) // 2]
    ai = [gmpy2.mpz(0), si // 2]
    complex_s = si != 0
    for k in range(1, K):
        A2 = (k + k * k) << S
        # W_j = (k + k^2) 2^S + sr (2k+2-j); start at j=1
        W = A2 + sr * (2 * k + 1)
        V = si * (2 * k + 1)
        tot_r = 0
        tot_i = 0
        if complex_s:
            for j in range(1, k + 1):
                d = (k - j + 1) * (k - j + 2)
                x = ar[j]
                y = ai[j]
                tot_r += (x * W - y * V) * j // d
                tot_i += (x * V + y * W) * j // d
                W -= sr
                V -= si
        else:
            for j in range(1, k + 1):
                tot_r += ar[j] * W * j // ((k - j + 1) * (k - j + 2))
                W -= sr
        den = k * (k + 1) * (k + 2)
        ar.append((tot_r // den + (1 << (S - 1))) >> S)
        ai.append((tot_i // den + (1 << (S - 1))) >> S if complex_s else 0)
    return ar, ai


def _fast_path(sr, si, K, S):
    """Coefficients of ((-log(1-t))/t)^(s-1) via the series engine."""
    n = K + 1
    one = 1 << S
    A = [one // (k + 1) for k in range(n)]
    # pick a short route for rational exponents
    er = sr - one   # s - 1, fixed point
    ei = si
    if ei == 0:
        for den in (1, 2):
            num = er * den
            if num % one == 0 and abs(num // one) <= 64:
                res = fastseries.series_pow(A, num // one, den, n, S)
                return res, [0] * n
        res, ims = fastseries.series_pow(A, None, None, n, S,
                                         e_complex=(er, 0))
        return res, ims if isinstance(ims, list) else [0] * n
    re, im = fastseries.series_pow(A, None, None, n, S, e_complex=(er, ei))
    return re, im


def _s_key(ctx, s):
    return repr(ctx.convert(s))


def alpha_table(s, K, ctx, exact=False):
    """alpha_k(s) for k = 0..K.

    exact=True requires s to be an int/Fraction and returns Fractions.
    Numeric results are mpf (real s) or mpc, cached per (s, precision).
    """
    if exact:
        if not isinstance(s, (int, Fraction)):
            raise DomainError("exact alpha_table needs a rational s")
        return alpha_table_exact(Fraction(s), K)

    mp = ctx.mp
    sv = ctx.convert(s)
    key = (_s_key(ctx, s), mp.prec)
    cached = _numeric_cache.get(key)
    if cached is not None and len(cached) > K:
        return cached[:K + 1]

    S = mp.prec + K.bit_length() + 28
    sr = int(mp.floor(sv.real * (1 << S) + mp.mpf("0.5"))) if hasattr(sv, "real") \
        else int(mp.floor(sv * (1 << S) + mp.mpf("0.5")))
    si = int(mp.floor(sv.imag * (1 << S) + mp.mpf("0.5"))) if hasattr(sv, "imag") \
        else 0

    if K + 1 > FAST_PATH_K:
        ar, ai = _fast_path(sr, si, K, S)
        # cross-check a prefix against the recursion
        ncheck = min(_CROSS_CHECK_LEN, K)
        cr, ci = _recursion_fixed(sr, si, ncheck, S)
        tol = 1 << (K.bit_length() + 20)
        for k in range(ncheck):
            if abs(ar[k] - cr[k]) > tol or abs(ai[k] - ci[k]) > tol:
                raise ArithmeticError(
                    "fast alpha path disagrees with recursion at k=%d" % k)
    else:
        ar, ai = _recursion_fixed(sr, si, K, S)

    scale = mp.mpf(2) ** (-S)
    if si == 0:
        out = [mp.mpf(int(x)) * scale for x in ar[:K + 1]]
    else:
        out = [mp.mpc(mp.mpf(int(x)) * scale, mp.mpf(int(y)) * scale)
               for x, y in zip(ar[:K + 1], ai[:K + 1])]
    if cached is None or len(cached) <= K:
        _numeric_cache[key] = out
    return out


def alpha_table_exact(s, K):
    s = Fraction(s)
    cached = _exact_cache.get(s)
    if cached is not None and len(cached) > K:
        return cached[:K + 1]
    a = [Fraction(1), Fraction(s - 1, 2)]
    for k in range(1, K):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += a[j] * j * (k + k * k + s * (2 * k + 2 - j)) \
                / ((k - j + 1) * (k - j + 2))
        a.append(acc / (k * (k + 1) * (k + 2)))
    _exact_cache[s] = a
    return a[:K + 1]


def kcap_estimate(sig, gap, const_log, wd):
    """Smallest k with const_log + lgamma(sig+k) - lgamma(sig+k+gap) below
    -wd log 10, padded 25%.  Series terms here all decay like a Gamma ratio
    with a fixed gap, so this prices truncation points cheaply."""
    import math as _m
    target = -wd * _m.log(10) - 5

    def f(k):
        return const_log + _m.lgamma(sig + k) - _m.lgamma(sig + k + gap)

    lo = max(4.0, 2.0 - sig)
    hi = lo
    while f(hi) > target:
        hi *= 2
        if hi > 5e6:
            return int(5e6)
    while hi - lo > 1:
        mid = (lo + hi) / 2
        if f(mid) > target:
            lo = mid
        else:
            hi = mid
    return int(hi * 1.25) + 48


def alpha_bound(s, k, ctx):
    """Proved envelope: |alpha_k(s)| <= c_s (1+log(k+1))^(|s|+1) / (k+1)."""
    mp = ctx.mp
    sv = ctx.convert(s)
    sa = abs(sv)
    c_s = abs(sv - 1) / (sa + 1) * (sa + 2) * mp.mpf(2) ** (sa + 1)
    return c_s * (1 + mp.log(k + 1)) ** (sa + 1) / (k + 1)


def alpha_prime_at_1(K):
    """d/ds alpha_k(s) at s=1 for k=0..K, exact Fractions.

    alpha'_{k+1}(1) = 1/(k+2) - (1/(k+1)) sum_{j=1}^k (j/(k-j+2)) alpha'_j(1).
    """
    a = _prime_cache
    for k in range(len(a) - 1, K):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += Fraction(j, k - j + 2) * a[j]
        a.append(Fraction(1, k + 2) - acc / (k + 1))
    return a[:K + 1]


def alpha_prime_integral(k):
    """Independent closed form: alpha'_k(1) = (1/(k k!)) int_0^1 (x)_k dx.

    (x)_k is the rising factorial; the integral is evaluated exactly through
    unsigned Stirling numbers of the first kind.
    """
    if k == 0:
        return Fraction(0)
    from .combinat import stirling1
    acc = Fraction(0)
    for l in range(k + 1):
        c = stirling1(k, l) * (-1) ** (k - l)  # |s(k,l)|
        acc += Fraction(c, l + 1)
    return acc / (k * math.factorial(k))
