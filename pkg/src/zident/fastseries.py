"""Fixed-point truncated power series with quasi-linear multiplication.

Coefficients are Python ints scaled by 2^S.  Multiplication packs both
operands into one huge integer each (Kronecker substitution) and lets GMP's
FFT do the work, which is what makes K ~ 1e5 coefficient tables tractable.
Newton iteration gives inverse, log, exp, sqrt-inverse on top of that.

Real series are plain lists; complex series are (re, im) list pairs.
"""

import gmpy2

__all__ = ["mullow", "cmullow", "inv", "log", "exp", "invsqrt",
           "cinv", "clog", "cexp", "scalar_mul", "series_pow"]

_MPZ = gmpy2.mpz


def _pack(coeffs, slot_bytes):
    nb = len(coeffs) * slot_bytes
    pos = bytearray(nb)
    neg = bytearray(nb)
    off = 0
    for c in coeffs:
        if c > 0:
            pos[off:off + slot_bytes] = c.to_bytes(slot_bytes, "little")
        elif c < 0:
            neg[off:off + slot_bytes] = (-c).to_bytes(slot_bytes, "little")
        off += slot_bytes
    return _MPZ(int.from_bytes(bytes(pos), "little")) - \
        _MPZ(int.from_bytes(bytes(neg), "little"))


def _unpack(x, n, slot_bytes):
    sign = 1
    if x < 0:
        sign = -1
        x = -x
    nb = n * slot_bytes + 16
    x = x & ((1 << (8 * nb)) - 1)  # only the first n slots are wanted
    raw = int(x).to_bytes(nb, "little")
    L = slot_bytes * 8
    half = 1 << (L - 1)
    full = 1 << L
    out = [0] * n
    carry = 0
    for i in range(n):
        u = int.from_bytes(raw[i * slot_bytes:(i + 1) * slot_bytes], "little") \
            + carry
        if u >= half:
            u -= full
            carry = 1
        else:
            carry = 0
        out[i] = sign * u
    return out


def _maxabs(a):
    return max((abs(c) for c in a), default=0)


def mullow(a, b, n, S):
    """Truncated product of fixed-point series a*b mod t^n, rescaled by 2^-S."""
    na, nb = min(len(a), n), min(len(b), n)
    if na == 0 or nb == 0:
        return [0] * n
    bits = (_maxabs(a[:na]).bit_length() + _maxabs(b[:nb]).bit_length()
            + n.bit_length() + 3)
    slot_bytes = (bits + 7) // 8
    x = _pack(a[:na], slot_bytes) * _pack(b[:nb], slot_bytes)
    conv = _unpack(x, n, slot_bytes)
    half = 1 << (S - 1)
    return [(c + half) >> S for c in conv]


def scalar_mul(a, c, S):
    """Multiply a fixed-point series by a fixed-point scalar c (scale 2^S)."""
    half = 1 << (S - 1)
    return [(x * c + half) >> S for x in a]


def _add(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    return [a[i] + (b[i] if i < len(b) else 0) for i in range(n)]


def _neg(a):
    return [-x for x in a]


def _deriv(a):
    return [a[i] * i for i in range(1, len(a))]


def _integ(a, n):
    out = [0] * n
    for i in range(1, min(n, len(a) + 1)):
        c = a[i - 1]
        out[i] = (c + (i // 2 if c >= 0 else -(i // 2))) // i
    return out


def inv(a, n, S):
    """Reciprocal series; requires a[0] = 2^S (i.e. constant term 1)."""
    one = 1 << S
    y = [one]
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        e = mullow(a, y, m2, S)
        e = _neg(e)
        e[0] += 2 * one
        y = mullow(y, e, m2, S)
        m = m2
    return y[:n]


def log(a, n, S):
    """log of a series with constant term 1."""
    if n <= 1:
        return [0] * n
    q = mullow(_deriv(a[:n]), inv(a, n - 1, S), n - 1, S)
    return _integ(q, n)


def exp(c, n, S):
    """exp of a series with zero constant term.

    Newton iteration with a running reciprocal, so each doubling costs four
    truncated multiplications instead of a from-scratch inversion.
    """
    one = 1 << S

    def _refine(z, y, m2):
        e = mullow(y, z, m2, S)
        e = _neg(e)
        e[0] += 2 * one
        return mullow(z, e, m2, S)

    y = [one]
    z = [one]  # y^-1 mod t^m at loop entry
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        yp = y + [0] * (m2 - len(y))
        z = _refine(z, yp, m2)
        # log y mod t^m2 via y'/y
        q = mullow(_deriv(yp), z, m2 - 1, S)
        l = _integ(q, m2)
        delta = [(c[i] if i < len(c) else 0) - l[i] for i in range(m2)]
        y = _add(yp, mullow(yp, delta, m2, S))[:m2]
        if m2 < n:
            z = _refine(z, y, m2)
        m = m2
    return y[:n]


def invsqrt(a, n, S):
    """a^(-1/2) for a series with constant term 1."""
    one = 1 << S
    y = [one]
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        t = mullow(y, y, m2, S)
        t = mullow(t, a, m2, S)
        t = _neg(t)
        t[0] += 3 * one
        y = mullow(y, t, m2, S)
        y = [(x + 1) >> 1 for x in y]
        m = m2
    return y[:n]


# -- complex variants: series are (re, im) pairs -----------------------------

def cmullow(a, b, n, S):
    ar, ai = a
    br, bi = b
    t1 = mullow(ar, br, n, S)
    t2 = mullow(ai, bi, n, S)
    t3 = mullow(_add(ar, ai), _add(br, bi), n, S)
    re = [t1[i] - t2[i] for i in range(n)]
    im = [t3[i] - t1[i] - t2[i] for i in range(n)]
    return re, im


def _cadd(a, b):
    return _add(a[0], b[0]), _add(a[1], b[1])


def _cneg(a):
    return _neg(a[0]), _neg(a[1])


def cinv(a, n, S):
    one = 1 << S
    y = ([one], [0])
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        e = cmullow(a, y, m2, S)
        e = _cneg(e)
        e[0][0] += 2 * one
        y = cmullow(y, e, m2, S)
        m = m2
    return y[0][:n], y[1][:n]


def clog(a, n, S):
    if n <= 1:
        return [0] * n, [0] * n
    da = (_deriv(a[0][:n]), _deriv(a[1][:n]))
    q = cmullow(da, cinv(a, n - 1, S), n - 1, S)
    return _integ(q[0], n), _integ(q[1], n)


def cexp(c, n, S):
    one = 1 << S

    def _refine(z, y, m2):
        e = cmullow(y, z, m2, S)
        e = _cneg(e)
        e[0][0] += 2 * one
        return cmullow(z, e, m2, S)

    y = ([one], [0])
    z = ([one], [0])  # y^-1 mod t^m at loop entry
    m = 1
    while m < n:
        m2 = min(2 * m, n)
        yp = (y[0] + [0] * (m2 - len(y[0])), y[1] + [0] * (m2 - len(y[1])))
        z = _refine(z, yp, m2)
        dy = (_deriv(yp[0]), _deriv(yp[1]))
        q = cmullow(dy, z, m2 - 1, S)
        lr, li = _integ(q[0], m2), _integ(q[1], m2)
        dr = [(c[0][i] if i < len(c[0]) else 0) - lr[i] for i in range(m2)]
        di = [(c[1][i] if i < len(c[1]) else 0) - li[i] for i in range(m2)]
        u = cmullow(yp, (dr, di), m2, S)
        y = _cadd(yp, u)
        if m2 < n:
            z = _refine(z, y, m2)
        m = m2
    return y[0][:n], y[1][:n]


def _ipow(base, p, n, S):
    # integer power by binary exponentiation, p >= 1
    result = None
    acc = base
    while p:
        if p & 1:
            result = acc if result is None else mullow(result, acc, n, S)
        p >>= 1
        if p:
            acc = mullow(acc, acc, n, S)
    return result


def series_pow(a, e_num, e_den, n, S, e_complex=None):
    """a^e for a series with constant term 1.

    e = e_num/e_den for rational exponents with e_den in {1, 2} (fast paths),
    or pass e_complex = (re_fixed, im_fixed) scaled by 2^S for the general
    complex exponent via exp(e * log a).
    """
    if e_complex is not None:
        la = log(a, n, S)
        er, ei = e_complex
        c = (scalar_mul(la, er, S), scalar_mul(la, ei, S))
        re, im = cexp(c, n, S)
        return re, im
    if e_den == 1:
        if e_num == 0:
            return [1 << S] + [0] * (n - 1)
        if e_num > 0:
            return _ipow(a, e_num, n, S)
        return _ipow(inv(a, n, S), -e_num, n, S)
    if e_den == 2:
        y = invsqrt(a, n, S)          # a^(-1/2)
        if e_num == -1:
            return y
        if e_num > 0:
            half = mullow(a, y, n, S)  # a^(1/2)
            base = half
            p = e_num
        else:
            base = y
            p = -e_num
        return _ipow(base, p, n, S)
    raise ValueError("series_pow supports e_den in {1,2} or complex exponent")
