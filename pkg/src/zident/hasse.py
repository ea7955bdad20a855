"""Alternating-series expansions built on one finite-difference engine.

For g, h on the positive integers with G(z) = sum g(n) z^(n-1), rearranging
the Dirichlet-style sum at z = 1 gives

    sum_n g(n) h(n) = sum_m w_m sum_j (-1)^j C(m,j) h(j+1),
    w_m = G^(m)(1) (-1)^m / m!.

Choices of g specialize this to the alternating zeta, alternating Hurwitz,
and Dirichlet L expansions; the inner binomial sums collapse from 2^m to a
subexponential remainder, so they run at precision elevated by m log10(2).

Integral-form weights (the Re s0 > -1 branch) are never quadratures: the
integrand's (1+e^-x)-power is expanded around e^-x = 1, which turns each
weight into a 2^-i-convergent combination of forward differences of
n^-(s0+1) read off one shared difference triangle.  The all-s0 branch
instead writes w_m through Stirling numbers of the first kind against the
expansion's own values on a descending arithmetic grid.
"""

import math
from fractions import Fraction

from .combinat import bernoulli, bernoulli_poly, binomial, stirling1
from .dirichlet import (DirichletCharacter, _cyclotomic,
                        enumerate_characters, gauss_sum, l_at_1, l_function,
                        l_negative_integer)
from .errors import DomainError, ValidityError
from .gammafun import digamma, gamma_ref, pi_value
from .mpnum import SeriesResult, make_context
from .zetafun import hurwitz_zeta, riemann_zeta

__all__ = [
    "DifferenceTable", "WeightProvider", "finite_differences",
    "newton_forward", "summation_transform", "eta_hasse", "eta_amore",
    "alt_hurwitz_hasse", "l_hasse", "l_interpolation_q_le_5",
    "j_sum_and_estimate", "chi_sum_estimate",
    "amore_factorial_jsum", "amore_factorial_estimate",
]


# ------------------------------------------------------------ finite differences

class DifferenceTable:
    """Triangle of forward differences over a list of samples.

    deltas[m][j] = Delta^m h(j) where h(j) is base[j]; row 0 is the base.
    Works over any type with subtraction (Fractions stay exact).
    """

    def __init__(self, base, m_max):
        if len(base) < m_max + 1:
            raise DomainError("need at least m_max+1 samples")
        self.base = list(base)
        self.deltas = [list(base)]
        for m in range(1, m_max + 1):
            prev = self.deltas[-1]
            self.deltas.append([prev[j + 1] - prev[j]
                                for j in range(len(prev) - 1)])

    def delta(self, m, j=0):
        return self.deltas[m][j]


def finite_differences(h, m_max):
    """Difference triangle of the samples h (a list), up to order m_max."""
    return DifferenceTable(h, m_max)


def newton_forward(h, N):
    """h(N) rebuilt from forward differences at 0:
    sum_m C(N,m) Delta^m h(0)."""
    if N < 0:
        raise DomainError("newton_forward needs N >= 0")
    samples = [h(j) for j in range(N + 1)] if callable(h) else list(h)[:N + 1]
    table = DifferenceTable(samples, N)
    total = 0
    for m in range(N + 1):
        d = table.delta(m, 0)
        if d:
            total += binomial(N, m) * d
    return total


# ------------------------------------------------------------ weight providers

class WeightProvider:
    """Rule producing w_m = G^(m)(1) (-1)^m / m! for a choice of g.

    weight_fn(m) returns the m-th weight (exact Fraction/int providers keep
    the generic engine exact).  digits_per_m declares the decay rate used for
    truncation/tail estimates; valid/reason declare the validity region.
    """

    def __init__(self, name, weight_fn, digits_per_m, valid=True, reason=""):
        self.name = name
        self.weight_fn = weight_fn
        self.digits_per_m = digits_per_m
        self.valid = valid
        self.reason = reason

    def check(self):
        if not self.valid:
            raise ValidityError(self.reason or
                                "weight provider outside its validity region")

    def weight(self, m):
        return self.weight_fn(m)

    @staticmethod
    def geometric():
        """g(n) = (-1)^(n-1): G = 1/(1+z), w_m = 1/2^(m+1)."""
        return WeightProvider("geometric", lambda m: Fraction(1, 2 ** (m + 1)),
                              math.log10(2))

    @staticmethod
    def point_mass(N):
        """g = indicator of n = N: w_m = (-1)^m C(N-1, m); Newton's formula."""
        return WeightProvider("point_mass(%d)" % N,
                              lambda m: (-1) ** m * binomial(N - 1, m),
                              0)

    @staticmethod
    def exponential(lam):
        """g(n) = (-1)^(n-1) lam^(n-1)/(n-1)!: G = exp(-lam z),
        w_m = lam^m exp(-lam)/m!."""
        lam = Fraction(lam) if not isinstance(lam, Fraction) else lam
        def w(m):
            return Fraction(lam ** m, math.factorial(m))  # times exp(-lam)
        return WeightProvider("exponential(%s)" % lam, w, 0)


def summation_transform(weights, h_diffs, m_max, ctx=None):
    """sum_m w_m sum_j (-1)^j C(m,j) h(j+1) via (-1)^m Delta^m h(1).

    h_diffs is a DifferenceTable whose base is [h(1), h(2), ...]; the inner
    binomial sum equals (-1)^m Delta^m h(1), so no binomials are expanded and
    rational inputs stay exact.
    """
    weights.check()
    ctx = ctx or make_context(30)
    total = 0
    terms = 0
    last = 0
    for m in range(m_max + 1):
        d = h_diffs.delta(m, 0)
        w = weights.weight(m)
        term = w * d if m % 2 == 0 else -(w * d)
        total = total + term
        terms += 1
        last = term
    r = ctx.mpf(10) ** (-weights.digits_per_m) if weights.digits_per_m else 1
    tail = abs(ctx.convert(last)) * r / (1 - r) if weights.digits_per_m else \
        ctx.mpf(0)
    return SeriesResult(value=total, terms_used=terms, tail_bound=tail,
                        flags={"heuristic_tail": True, "converged": True})


# ------------------------------------------------------------ binomial j-sums

class _JsumRows:
    """S_m = sum_j coeffs[j] C(m,j) for m = 0, 1, ... with one Pascal row.

    coeffs are precomputed at the elevated precision; the row of binomials is
    exact integer, so all cancellation happens in one elevated dot product.
    """

    def __init__(self, coeffs):
        self.coeffs = coeffs
        self.row = [1]

    def next_sum(self):
        row, coeffs = self.row, self.coeffs
        total = 0
        for j in range(len(row)):
            c = coeffs[j]
            if c:
                total = total + c * row[j]
        self.row = [1] + [row[j] + row[j + 1]
                          for j in range(len(row) - 1)] + [1]
        return total


def _pow(mp, base, expo):
    if expo == int(_re_of(expo)) and _im_of(expo) == 0:
        return base ** int(_re_of(expo))
    return mp.exp(expo * mp.log(base))


def _re_of(z):
    return z.real if hasattr(z, "real") else z


def _im_of(z):
    return getattr(z, "imag", 0)


def _elevated(ctx, extra):
    return ctx.elevated(int(extra) + 1)


def _default_m_max(ctx, digits_per_m):
    return int(math.ceil(ctx.working_digits / digits_per_m)) + 10


# ------------------------------------------------------------ integral weights

class _IntegralWeights:
    """Weights of the Re s0 > -1 integral forms, quadrature-free.

    Expanding (1+e^-x)^-(m+2) = 2^-(m+2) sum_i C(m+1+i,i) (-1)^i v^i with
    v = (e^-x - 1)/2 and integrating termwise turns the weight integral into

        w_m(a) = 2^-(m+2) sum_i 2^-i C(m+1+i,i) (-1)^i
                 [ (m+a) D_i(m+a) + (a-1) D_i(m+a+1) ],

    where D_i(y) = Delta^i g(y) is the i-th forward difference of
    g(t) = t^-(s0+1) on the unit grid.  a = 1 gives the alternating-zeta /
    L weights; at s0 = 0 the sum telescopes to 1/2^(m+1).
    All differences come from one shared triangle over g(a), g(a+1), ...
    built at precision elevated by m_max log10(2), which bounds the absolute
    error amplification sum_i C(m+1+i,i) 2^-i = 2^(m+2).
    """

    def __init__(self, s0, a, m_max, ctx):
        self.ctx = ctx
        wd = ctx.working_digits
        # repeated differencing amplifies base roundoff by ~2^(2m) at the
        # deepest rows, so the triangle runs well above the j-sum elevation
        self.ectx = _elevated(ctx, 2.2 * m_max * math.log10(2) + 20)
        mp = self.ectx.mp
        self.mp = mp
        s0v = self.ectx.convert(s0)
        av = self.ectx.mpf(a) if _im_of(a) == 0 else self.ectx.convert(a)
        self.a = av
        self.icap = m_max + 2 + int(3.5 * wd)
        n_max = m_max + 1 + self.icap + 2
        g = [_pow(mp, av + n, -(s0v + 1)) for n in range(n_max + 1)]
        self.rows = [g]
        self.eps = self.ectx.mpf(10) ** (-wd - 5)

    def _row(self, i):
        while len(self.rows) <= i:
            prev = self.rows[-1]
            self.rows.append([prev[j + 1] - prev[j]
                              for j in range(len(prev) - 1)])
        return self.rows[i]

    def weight(self, m):
        mp = self.mp
        av = self.a
        half = mp.mpf("0.5")
        acc = mp.mpf(0)
        factor = mp.mpf(1)         # 2^-i C(m+1+i, i)
        small = 0
        for i in range(self.icap):
            row = self._row(i)
            if m + 1 >= len(row):
                break
            piece = (m + av) * row[m] + (av - 1) * row[m + 1]
            term = factor * piece if i % 2 == 0 else -(factor * piece)
            acc += term
            if abs(term) < self.eps * max(abs(acc), self.eps):
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
            factor = factor * half * (m + 2 + i) / (i + 1)
        return acc / 2 ** (m + 2)


# ------------------------------------------------------------ stirling weights

def _eta_exact(l):
    """eta(1-l) = (-1)^(l-1) (1-2^l) B_l / l as an exact Fraction, l >= 1."""
    b = bernoulli(l)
    val = Fraction((1 - 2 ** l) * b, l)
    return val if l % 2 else -val


def _zstar_exact(r, a):
    """zeta*(-r, a) = E_r(a)/2 via Euler polynomials, exact for rational a."""
    n = r + 1
    e = Fraction(2, n) * (bernoulli_poly(n, a)
                          - 2 ** n * bernoulli_poly(n, a / 2))
    return e / 2


class _StirlingWeights:
    """w_m = (-1)^m / m! * sum_{l=1}^{m+1} s(m+1,l) V(s0+1-l).

    V is the expansion's own value function (eta, zeta*, or L); integer grid
    points at or below 0 are exact rationals, so for integer s0 the l-sum is
    an exact Fraction plus a short numeric correction from the few positive
    grid points.  Non-integer s0 runs fully numeric at elevated precision.
    """

    def __init__(self, s0, value_fn, m_max, ctx, extra_elev=0.0):
        self.ctx = ctx
        self.ectx = _elevated(ctx, m_max * math.log10(2) + 20 + extra_elev)
        self.s0 = s0
        self.value_fn = value_fn     # l -> Fraction or elevated-ctx number
        self.cache = {}

    def _val(self, l):
        if l not in self.cache:
            self.cache[l] = self.value_fn(l, self.ectx)
        return self.cache[l]

    def weight(self, m):
        exact = Fraction(0)
        numeric = self.ectx.mpf(0)
        for l in range(1, m + 2):
            s1 = stirling1(m + 1, l)
            if not s1:
                continue
            v = self._val(l)
            if isinstance(v, (Fraction, int)):
                exact += s1 * v
            else:
                numeric = numeric + s1 * v
        total = self.ectx.convert(exact) + numeric
        total = total / math.factorial(m)
        return total if m % 2 == 0 else -total


class _ShiftedStirlingWeights:
    """Stirling-type weights for the (j+a)^-s kernel, a != 1 included.

    Writing the m-th falling factorial of n-1 in powers of y = n+a-1,
    (n-1)(n-2)...(n-m) = prod_{i=1}^m (y - (a-1+i)) = sum_l c_l(a) y^l,
    gives w_m = (-1)^m/m! sum_{l=0}^m c_l(a) zeta*(s0-l, a).  At a = 1 the
    c_l collapse to Stirling numbers of the first kind; for a != 1 they are
    their non-central analogues, built here as exact polynomial coefficients.
    """

    def __init__(self, s0, a, value_fn, m_max, ctx, extra_elev=0.0):
        self.ctx = ctx
        self.ectx = _elevated(ctx, m_max * math.log10(2) + 20 + extra_elev)
        self.a = Fraction(a)
        self.value_fn = value_fn     # x -> Fraction or elevated-ctx number
        self.poly = [Fraction(1)]    # coefficients of prod_{i<=m} (y-(a-1+i))
        self.m = 0
        self.cache = {}

    def _val(self, x):
        if x not in self.cache:
            self.cache[x] = self.value_fn(x, self.ectx)
        return self.cache[x]

    def weight(self, m):
        while self.m < m:
            self.m += 1
            r = self.a - 1 + self.m
            p = self.poly
            self.poly = [-r * p[0]] + [p[l - 1] - r * p[l]
                                       for l in range(1, len(p))] + [p[-1]]
        exact = Fraction(0)
        numeric = self.ectx.mpf(0)
        for l, c in enumerate(self.poly):
            if not c:
                continue
            v = self._val(l)
            if isinstance(v, (Fraction, int)):
                exact += c * v
            else:
                numeric = numeric + v * self.ectx.mpf(c)
        total = self.ectx.convert(exact) + numeric
        total = total / math.factorial(m)
        return total if m % 2 == 0 else -total


def _eta_stirling_value(s0, ctx_outer):
    """Value function l -> eta(s0+1-l) for the Stirling-weight branch."""
    s0r, s0i = _re_of(s0), _im_of(s0)
    is_int = s0i == 0 and s0r == int(s0r)

    def val(l, ectx):
        if is_int:
            x = int(s0r) + 1 - l
            if x <= 0:
                return _eta_exact(1 - x)
            if x == 1:
                return ectx.mp.log(2)
            return _eta_numeric(x, ectx)
        return _eta_numeric(ectx.convert(s0) + 1 - l, ectx)

    return val


_eta_cache = {}


def _eta_numeric(s, ctx):
    """eta(s): the geometric-weight expansion for Re s > 0, the zeta route
    eta = (1 - 2^(1-s)) zeta(s) on the left half plane, where the expansion's
    (j+1)^-s coefficients grow and would force excessive elevation."""
    key = (repr(s), ctx.working_digits)
    if key in _eta_cache:
        return _eta_cache[key]
    if _re_of(s) > 0:
        val = eta_hasse(s, 0, ctx=ctx).value
    else:
        # the zeta expansion sheds digits linearly in |Re s| on the left,
        # so buy them back before converting down
        zctx = _elevated(ctx, 2.5 * abs(float(_re_of(s))) + 15)
        sv = zctx.convert(s)
        z = riemann_zeta(sv, ctx=zctx).value
        val = ctx.convert((1 - zctx.mp.exp((1 - sv) * zctx.mp.log(2))) * z)
    _eta_cache[key] = val
    return val


# ------------------------------------------------------------ eta expansions

def _run_expansion(weight_at, coeffs, m_max, ctx, digits_per_m,
                   scale=1, flags=None):
    """Common m-loop: sum weight_at(m) * S_m with the Pascal-row engine."""
    rows = _JsumRows(coeffs)
    mp = ctx.mp
    total = mp.mpf(0)
    eps = ctx.working_eps
    small = 0
    terms = 0
    last = None
    for m in range(m_max + 1):
        sm = rows.next_sum()
        term = ctx.convert(weight_at(m) * sm) if sm else mp.mpf(0)
        total = total + term
        terms += 1
        if term:
            last = term
        if abs(term) < eps * max(abs(total), eps):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    converged = small >= 3
    r = ctx.mpf(10) ** (-digits_per_m)
    tail = abs(last) * r / (1 - r) if last is not None else ctx.mpf(0)
    out = dict(flags or {})
    out.update({"converged": converged, "heuristic_tail": True})
    value = ctx.convert(total * scale)
    return SeriesResult(value=value, terms_used=terms,
                        tail_bound=ctx.convert(abs(ctx.convert(tail * scale))),
                        flags=out)


def _select_branch(method, s0):
    if method == "auto":
        return "integral" if _re_of(s0) > -1 else "stirling"
    if method in ("integral", "hasse"):
        if _re_of(s0) <= -1:
            raise ValidityError("integral-weight branch needs Re s0 > -1")
        return "integral"
    if method == "stirling":
        return "stirling"
    raise DomainError("unknown method %r" % (method,))


def eta_hasse(s, s0=0, m_max=None, ctx=None, method="auto"):
    """eta(s+s0) = sum_m w_m sum_j (-1)^j C(m,j) (j+1)^-s.

    Weights: s0 = 0 exactly 1/2^(m+1); otherwise the integral branch
    (Re s0 > -1) or the Stirling branch (any s0, self-referencing eta on the
    descending integer-shifted grid).
    """
    ctx = ctx or make_context(30)
    branch = _select_branch(method, s0)
    if m_max is None:
        m_max = _default_m_max(ctx, math.log10(2))
    sv = ctx.convert(s)
    s0_zero = _im_of(s0) == 0 and _re_of(s0) == 0
    if s0_zero and branch == "integral":
        weight_at = lambda m: Fraction(1, 2 ** (m + 1))
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    elif branch == "integral":
        iw = _IntegralWeights(s0, 1, m_max, ctx)
        weight_at = iw.weight
        ectx = iw.ectx
    else:
        sw = _StirlingWeights(s0, _eta_stirling_value(s0, ctx), m_max, ctx)
        weight_at = sw.weight
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    mp = ectx.mp
    svv = ectx.convert(sv)
    coeffs = [(-1) ** j * _pow(mp, mp.mpf(j + 1), -svv)
              for j in range(m_max + 1)]
    return _run_expansion(weight_at, coeffs, m_max, ctx, math.log10(2),
                          flags={"branch": branch})


def amore_factorial_jsum(m, lam, s, ctx):
    """sum_j (-1)^j / ((j+1)^s lam^j (m-j)!) at elevated precision."""
    ectx = _elevated(ctx, 0.87 * float(lam) + 20)
    mp = ectx.mp
    sv = ectx.convert(s)
    lamv = ectx.mpf(lam)
    inv_lam = 1 / lamv
    lp = mp.mpf(1)
    total = mp.mpf(0)
    for j in range(m + 1):
        t = lp / (_pow(mp, mp.mpf(j + 1), sv) * mp.factorial(m - j))
        total = total + (t if j % 2 == 0 else -t)
        lp = lp * inv_lam
    return ctx.convert(total)


def amore_factorial_estimate(m, lam, s, ctx):
    """(-1)^m exp(-lam) / (lam^m (m+1+lam)^s), the large-m term shape."""
    mp = ctx.mp
    lamv = ctx.mpf(lam)
    sv = ctx.convert(s)
    val = mp.exp(-lamv) / (_pow(mp, lamv, mp.mpf(m))
                           * _pow(mp, m + 1 + lamv, sv))
    return val if m % 2 == 0 else -val


def eta_amore(s, lam, m_max=None, ctx=None, variant="geometric"):
    """Exponentially-weighted alternating-zeta expansions.

    geometric: eta(s) = sum_m (lam/(1+lam))^(m+1)
               sum_j (-1)^j C(m,j) / ((j+1)^s lam^(j+1));    lam = 1 is the
               plain 1/2^(m+1) expansion.
    factorial: eta(s) = exp(-lam) sum_m lam^m
               sum_j (-1)^j / ((j+1)^s lam^j (m-j)!), Re s > 0; terms plunge
               to exp(-2lam) around m ~ lam, then converge algebraically, so
               the tail bound is a heuristic from that term shape.
    """
    ctx = ctx or make_context(30)
    lamf = float(lam)
    if lamf <= 0:
        raise DomainError("eta_amore needs lam > 0")
    if variant == "geometric":
        dpm = math.log10((1 + lamf) / lamf)
        if m_max is None:
            m_max = int(math.ceil(ctx.working_digits / dpm)) + 10
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
        mp = ectx.mp
        sv = ectx.convert(s)
        lamv = ectx.mpf(lam)
        inv = 1 / lamv
        coeffs = []
        lp = inv
        for j in range(m_max + 1):
            c = lp / _pow(mp, mp.mpf(j + 1), sv)
            coeffs.append(c if j % 2 == 0 else -c)
            lp = lp * inv
        ratio = ctx.mpf(lam) / (1 + ctx.mpf(lam))
        weight_at = lambda m: ratio ** (m + 1)
        return _run_expansion(weight_at, coeffs, m_max, ctx, dpm,
                              flags={"variant": "geometric"})
    if variant != "factorial":
        raise DomainError("unknown variant %r" % (variant,))
    if _re_of(ctx.convert(s)) <= 0:
        raise ValidityError("factorial variant needs Re s > 0")
    if m_max is None:
        m_max = int(math.ceil(4 * lamf)) + 8 * ctx.working_digits
    ectx = _elevated(ctx, 0.87 * lamf + 20)
    mp = ectx.mp
    sv = ectx.convert(s)
    lamv = ectx.mpf(lam)
    inv_lam = 1 / lamv
    pw = [_pow(mp, mp.mpf(j + 1), -sv) for j in range(m_max + 1)]
    lampow = [mp.mpf(1)]
    for j in range(m_max):
        lampow.append(lampow[-1] * inv_lam)
    total = mp.mpf(0)
    eps = ctx.working_eps
    small = 0
    terms = 0
    last = None
    lam_m = mp.mpf(1)
    for m in range(m_max + 1):
        acc = mp.mpf(0)
        fact = mp.mpf(1)         # 1/(m-j)! built from j = m downward
        for j in range(m, -1, -1):
            t = pw[j] * lampow[j] * fact
            acc = acc + (t if j % 2 == 0 else -t)
            fact = fact / (m - j + 1)
        term = lam_m * acc
        lam_m = lam_m * lamv
        total = total + term
        terms += 1
        if term:
            last = term
        if abs(term) < eps * max(abs(total), eps):
            small += 1
            if small >= 3:
                break
        else:
            small = 0
    scale = mp.exp(-lamv)
    value = ctx.convert(total * scale)
    # algebraic tail: terms ~ exp(-2 lam)/(m+1+lam)^s past the plateau
    sr = _re_of(ctx.convert(s))
    mstop = terms - 1
    if sr > 1:
        tail = ctx.mp.exp(-2 * ctx.mpf(lam)) * \
            (mstop + 1 + ctx.mpf(lam)) ** (1 - sr) / (sr - 1)
    else:
        tail = abs(ctx.convert(last * scale)) * (mstop + 2) if last else \
            ctx.mpf(0)
    return SeriesResult(value=value, terms_used=terms,
                        tail_bound=abs(ctx.convert(tail)),
                        flags={"variant": "factorial", "converged": small >= 3,
                               "heuristic_tail": True,
                               "plateau_digits": 2 * lamf / math.log(10)})


# ------------------------------------------------------------ alternating Hurwitz

def _zstar_stirling_value(s0, a, ctx_outer):
    """Value function l -> zeta*(s0+1-l, a) for the Stirling branch."""
    s0r, s0i = _re_of(s0), _im_of(s0)
    is_int = s0i == 0 and s0r == int(s0r)
    a_frac = Fraction(a) if isinstance(a, (int, float, Fraction)) else None

    def val(l, ectx):
        if is_int:
            x = int(s0r) + 1 - l
            if x <= 0 and a_frac is not None:
                return _zstar_exact(-x, Fraction(a_frac))
            if x == 1:
                av = ectx.mpf(a) if a_frac is not None else ectx.convert(a)
                return (digamma((av + 1) / 2, ectx)
                        - digamma(av / 2, ectx)) / 2
            return _zstar_numeric(x, a, ectx)
        return _zstar_numeric(ectx.convert(s0) + 1 - l, a, ectx)

    return val


def _zstar_numeric(s, a, ctx):
    """zeta*(s, a): own expansion for Re s > 0, otherwise the split
    zeta*(s, a) = 2^-s [zeta(s, a/2) - zeta(s, (a+1)/2)]."""
    if _re_of(s) > 0:
        return alt_hurwitz_hasse(s, 0, a, ctx=ctx).value
    zctx = _elevated(ctx, 2.5 * abs(float(_re_of(s))) + 15)
    sv = zctx.convert(s)
    av = zctx.mpf(a) if isinstance(a, (int, Fraction)) else zctx.convert(a)
    z = (hurwitz_zeta(sv, av / 2, ctx=zctx).value
         - hurwitz_zeta(sv, (av + 1) / 2, ctx=zctx).value)
    return ctx.convert(zctx.mp.exp(-sv * zctx.mp.log(2)) * z)


def alt_hurwitz_hasse(s, s0, a, m_max=None, ctx=None, method="auto",
                      integer_kernel=False):
    """zeta*(s+s0, a) = sum_n (-1)^n (n+a)^-(s+s0).

    Default kernel sums (-1)^j C(m,j) (j+a)^-s with the integral weights
    w_m(a) (Re s0 > -1) or Stirling weights over zeta*(s0+1-l, a).  With
    integer_kernel and a = N+1 a positive integer, the distinct variant with
    (j+1)^-s kernel and Stirling weights is used instead (it is not a
    specialization of the first: the j-kernel differs).
    """
    ctx = ctx or make_context(30)
    ar = _re_of(a)
    if _im_of(a) != 0 or ar <= 0:
        raise DomainError("alt_hurwitz_hasse needs real a > 0")
    if m_max is None:
        m_max = _default_m_max(ctx, math.log10(2))
    if integer_kernel:
        if ar != int(ar) or int(ar) < 1:
            raise ValidityError("integer kernel variant needs integer a >= 1")
        sw = _StirlingWeights(s0, _zstar_stirling_value(s0, int(ar), ctx),
                              m_max, ctx)
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
        mp = ectx.mp
        svv = ectx.convert(s)
        coeffs = [(-1) ** j * _pow(mp, mp.mpf(j + 1), -svv)
                  for j in range(m_max + 1)]
        return _run_expansion(sw.weight, coeffs, m_max, ctx, math.log10(2),
                              flags={"branch": "stirling",
                                     "kernel": "integer"})
    branch = _select_branch(method, s0)
    s0_zero = _im_of(s0) == 0 and _re_of(s0) == 0
    if s0_zero and branch == "integral":
        weight_at = lambda m: Fraction(1, 2 ** (m + 1))
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    elif branch == "integral":
        iw = _IntegralWeights(s0, a, m_max, ctx)
        weight_at = iw.weight
        ectx = iw.ectx
    else:
        zval = _zstar_stirling_value(s0, a, ctx)
        if ar == 1:
            sw = _StirlingWeights(s0, zval, m_max, ctx)
        else:
            if not isinstance(a, (int, float, Fraction)):
                raise DomainError(
                    "the Stirling branch needs rational a (its non-central "
                    "factorial coefficients are built exactly)")
            sw = _ShiftedStirlingWeights(s0, a,
                                         lambda l, ectx: zval(l + 1, ectx),
                                         m_max, ctx)
        weight_at = sw.weight
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    mp = ectx.mp
    svv = ectx.convert(s)
    av = ectx.mpf(a) if isinstance(a, (int, Fraction)) else ectx.convert(a)
    coeffs = [(-1) ** j * _pow(mp, j + av, -svv) for j in range(m_max + 1)]
    return _run_expansion(weight_at, coeffs, m_max, ctx, math.log10(2),
                          flags={"branch": branch, "kernel": "shifted"})


# ------------------------------------------------------------ Dirichlet L

def _cq(q, ctx):
    """C_q = |1 + e(1/q)| = 2 cos(pi/q)."""
    return 2 * ctx.mp.cos(pi_value(ctx) / q)


def _check_nontrivial(chi):
    if chi.is_trivial:
        raise DomainError("L expansions need a non-trivial character")


def l_hasse(s, s0, chi, m_max=None, ctx=None, method="auto"):
    """L(s+s0, chi) = sum_m w_m sum_j chi(j+1) C(m,j) (j+1)^-s.

    The weights are exactly the eta weights (the character supplies the
    alternation); valid for every non-trivial chi, any modulus.  The j-sums
    decay like C_q^m = (2 cos(pi/q))^m, so m_max scales by 1/log2(2/C_q).
    """
    _check_nontrivial(chi)
    ctx = ctx or make_context(30)
    q = chi.q
    dpm = math.log10(2 / math.cos(math.pi / q) / 2)
    if m_max is None:
        m_max = int(math.ceil(ctx.working_digits / dpm)) + 20
    branch = _select_branch(method, s0)
    s0_zero = _im_of(s0) == 0 and _re_of(s0) == 0
    if s0_zero and branch == "integral":
        weight_at = lambda m: Fraction(1, 2 ** (m + 1))
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    elif branch == "integral":
        iw = _IntegralWeights(s0, 1, m_max, ctx)
        weight_at = iw.weight
        ectx = iw.ectx
    else:
        sw = _StirlingWeights(s0, _eta_stirling_value(s0, ctx), m_max, ctx)
        weight_at = sw.weight
        ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    mp = ectx.mp
    svv = ectx.convert(s)
    coeffs = []
    for j in range(m_max + 1):
        cv = chi.value(j + 1, ectx)
        coeffs.append(cv * _pow(mp, mp.mpf(j + 1), -svv) if cv else 0)
    return _run_expansion(weight_at, coeffs, m_max, ctx, dpm,
                          flags={"branch": branch, "q": q})


def _l_base_value(x, chi, ectx):
    """L(x, chi) for the interpolation grid: exact-rational Bernoulli route
    at non-positive integers, l_at_1 at 1, the alpha expansion elsewhere."""
    if _im_of(x) == 0 and _re_of(x) == int(_re_of(x)):
        xi = int(_re_of(x))
        if xi <= 0:
            n = 1 - xi
            q = chi.q
            # L(1-n) = -B_{n,chi}/n with B_{n,chi} = q^(n-1) sum chi(m) B_n(m/q)
            total = ectx.mp.mpc(0)
            qpow = Fraction(q) ** (n - 1)
            for m in range(1, q + 1):
                if chi.exponent(m) is None:
                    continue
                b = bernoulli_poly(n, Fraction(m, q))
                total += chi.value(m, ectx) * ectx.mpf(qpow * b)
            return -total / n
        if xi == 1:
            return l_at_1(chi, ectx)
    return l_function(ectx.convert(x), chi, ctx=ectx).value


def l_interpolation_q_le_5(s, s0, chi, m_max=None, ctx=None):
    """L(s+s0, chi) from its own values on a descending grid:

        sum_m (-1)^m/m! sum_l s(m+1,l) L(s0+1-l, chi)
              sum_j (-1)^j C(m,j) (j+1)^-s.

    Convergence needs the nearest q-th root of unity to sit farther than 1
    from the point 1, i.e. 2 sin(pi/q) > 1, which holds only for q <= 5;
    larger moduli raise ValidityError.
    """
    _check_nontrivial(chi)
    ctx = ctx or make_context(30)
    q = chi.q
    if q > 5:
        raise ValidityError(
            "interpolation diverges for q >= 6: the nearest q-th root of "
            "unity e(1/q) lies within distance 2 sin(pi/q) <= 1 of 1")
    dist = 2 * math.sin(math.pi / q)
    dpm = math.log10(dist)
    if m_max is None:
        m_max = int(math.ceil(ctx.working_digits / dpm)) + 20
    extra = m_max * max(0.0, math.log10((1 + q / (2 * math.pi)) * dist)) + 10
    sw = _StirlingWeights(s0, lambda l, ectx:
                          _l_base_value(ectx.convert(s0) + 1 - l
                                        if not _is_int_value(s0)
                                        else int(_re_of(s0)) + 1 - l,
                                        chi, ectx),
                          m_max, ctx, extra_elev=extra)
    ectx = _elevated(ctx, m_max * math.log10(2) + 15)
    mp = ectx.mp
    svv = ectx.convert(s)
    coeffs = [(-1) ** j * _pow(mp, mp.mpf(j + 1), -svv)
              for j in range(m_max + 1)]
    return _run_expansion(sw.weight, coeffs, m_max, ctx, dpm,
                          flags={"q": q})


def _is_int_value(z):
    return _im_of(z) == 0 and _re_of(z) == int(_re_of(z))


# ------------------------------------------------------------ estimators

def j_sum_and_estimate(m, a, s, ctx):
    """(exact, estimate) for sum_j (-1)^j C(m,j) (j+a)^-s.

    exact: plain summation at precision elevated by m log10(2) (the running
    binomial row is exact integer); for integer s <= 0 an exact rational
    path is used, and the sum is identically 0 once m exceeds |s| (the m-th
    difference annihilates the degree-|s| polynomial).
    estimate: log(m)^(s-1) Gamma(a) / (m^a Gamma(s)), exactly 0 at the
    non-positive integers where 1/Gamma(s) vanishes.
    """
    if m < 0:
        raise DomainError("j_sum_and_estimate needs m >= 0")
    if _im_of(a) != 0 or _re_of(a) <= 0:
        raise DomainError("j_sum_and_estimate needs real a > 0")
    mp = ctx.mp
    s_int = _is_int_value(ctx.convert(s)) and _re_of(ctx.convert(s)) <= 0
    if s_int:
        r = -int(_re_of(ctx.convert(s)))
        if m > r:
            exact = ctx.mpf(0)
        else:
            af = Fraction(a) if isinstance(a, (int, Fraction)) else None
            total = Fraction(0) if af is not None else ctx.mpf(0)
            c = 1
            for j in range(m + 1):
                base = (j + af) if af is not None else (j + ctx.mpf(a))
                t = c * base ** r
                total = total + (t if j % 2 == 0 else -t)
                c = c * (m - j) // (j + 1)
            exact = ctx.convert(total)
    else:
        ectx = _elevated(ctx, m * math.log10(2) + 10)
        emp = ectx.mp
        sv = ectx.convert(s)
        av = ectx.mpf(a)
        total = emp.mpf(0)
        c = 1
        for j in range(m + 1):
            t = emp.mpf(c) * _pow(emp, j + av, -sv)
            total = total + (t if j % 2 == 0 else -t)
            c = c * (m - j) // (j + 1)
        exact = ctx.convert(total)
    # estimate
    sv = ctx.convert(s)
    if s_int:
        estimate = ctx.mpf(0)
    else:
        ga = gamma_ref(ctx.mpf(a), ctx)
        gs = gamma_ref(sv, ctx)
        lg = mp.log(ctx.mpf(max(m, 2)))
        estimate = _pow(mp, lg, sv - 1) * ga / (_pow(mp, ctx.mpf(m), ctx.mpf(a)) * gs)
    return exact, estimate


def _root_value(t, ctx):
    """e(t) for a rational exponent t, exact at the quarter points."""
    mp = ctx.mp
    tt = t - math.floor(t)
    if tt == 0:
        return mp.mpf(1)
    if tt == Fraction(1, 2):
        return mp.mpf(-1)
    if tt == Fraction(1, 4):
        return mp.mpc(0, 1)
    if tt == Fraction(3, 4):
        return mp.mpc(0, -1)
    ang = 2 * pi_value(ctx) * ctx.mpf(tt)
    return mp.mpc(mp.cos(ang), mp.sin(ang))


def chi_sum_estimate(m, chi, ctx):
    """Record for sum_j chi(j+1) C(m,j): exact value (with exact root-of-
    unity zero detection), the two-term Gauss-sum main term

        (tau/q) (e(-1/q)(1+e(-1/q))^m + chi(-1) e(1/q)(1+e(1/q))^m),

    and the bound 2 q^(-1/2) C_q^m."""
    _check_nontrivial(chi)
    q = chi.q
    mp = ctx.mp
    # integer class sums: sum of C(m,j) over j+1 = a (mod q)
    class_sums = [0] * q
    c = 1
    for j in range(m + 1):
        class_sums[(j + 1) % q] += c
        c = c * (m - j) // (j + 1)
    # the class sums are ~2^m apiece and cancel down to ~C_q^m, so the
    # root-of-unity dot product runs at elevated precision
    ectx = _elevated(ctx, m * math.log10(2) + 10)
    exact = ectx.mp.mpc(0)
    order = chi.order
    poly = [0] * order
    for a in range(q):
        t = chi.exponent(a)
        if t is None or class_sums[a] == 0:
            continue
        exact = exact + class_sums[a] * chi.value(a, ectx)
        poly[int(t * order) % order] += class_sums[a]
    exact = ctx.convert(exact)
    phi = _cyclotomic(order)
    rem = [Fraction(x) for x in poly]
    for i in range(len(rem) - len(phi), -1, -1):
        c = Fraction(rem[i + len(phi) - 1], phi[-1])
        for jj, dc in enumerate(phi):
            rem[i + jj] -= c * dc
    is_zero = all(x == 0 for x in rem)
    if is_zero:
        exact = mp.mpc(0)
    tau = gauss_sum(chi, ctx)
    e1 = _root_value(Fraction(1, q), ctx)
    em1 = _root_value(Fraction(-1, q), ctx)
    main = (tau / q) * (em1 * (1 + em1) ** m
                        + chi.parity * e1 * (1 + e1) ** m)
    bound = 2 * _cq(q, ctx) ** m / mp.sqrt(ctx.mpf(q))
    return {"exact": exact, "exact_is_zero": is_zero,
            "main_term": main, "bound": bound}
