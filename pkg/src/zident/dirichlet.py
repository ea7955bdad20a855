"""Dirichlet characters and L-functions via shifted Hurwitz expansions.

Characters keep their values as exact rational exponents t with chi(n) = e(t),
so Gauss sums and orthogonality can be tested at the root-of-unity level.
L(s, chi) = q^-s sum_m chi(m) zeta(s, m/q) reuses the weighted alpha engine
from zetafun; the closed forms at s = 1, s = -r and s = 1 - lambda are the
finite expressions with exact alpha data.
"""

import itertools
import math
from fractions import Fraction

from .alpha import alpha_table_exact, alpha_prime_at_1
from .combinat import bernoulli_poly, c_a_value
from .errors import DomainError
from .gammafun import digamma, pi_value
from .mpnum import SeriesResult
from .zetafun import _weighted_series, _auto_len, _num, _re, _im, _is_nonpos_int, _pow

__all__ = [
    "DirichletCharacter", "enumerate_characters", "gauss_sum", "l_function",
    "l_at_1", "l_shifted", "l_negative_integer", "l_one_minus_lambda",
    "generalized_bernoulli", "rootsum_is_zero",
]


# ----------------------------------------------------------- unit group / CRT

def _prime_power_split(q):
    out = []
    d = 2
    while d * d <= q:
        if q % d == 0:
            pe = 1
            while q % d == 0:
                pe *= d
                q //= d
            out.append(pe)
        d += 1
    if q > 1:
        out.append(q)
    return sorted(out)


def _component_generators(pe):
    """Generators (with orders) of (Z/pe)^*; at most two (for 2^e, e >= 3)."""
    if pe == 1 or pe == 2:
        return []
    if pe == 4:
        return [(3, 2)]
    if pe % 2 == 0:
        # 2^e with e >= 3: {-1} x <5>
        return [(pe - 1, 2), (5, pe // 4)]
    # odd prime power: cyclic of order phi
    p = 2
    while pe % p:
        p += 1
    phi = pe // p * (p - 1)
    for g in range(2, pe):
        if math.gcd(g, pe) != 1:
            continue
        ok = True
        for f in _prime_factors(phi):
            if pow(g, phi // f, pe) == 1:
                ok = False
                break
        if ok:
            return [(g, phi)]
    raise AssertionError("no generator found for %d" % pe)


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _group_data(q):
    """Generators of (Z/q)^* via CRT and the discrete-log table.

    Returns (gens, table) with gens a list of (g mod q, order) and table a dict
    n -> exponent tuple.
    """
    gens = []
    for pe in _prime_power_split(q):
        other = q // pe
        for g, d in _component_generators(pe):
            # lift: congruent to g mod pe, to 1 mod q/pe
            if other == 1:
                lifted = g % q
            else:
                inv = pow(other, -1, pe)
                lifted = (1 + other * ((g - 1) * inv % pe)) % q
            gens.append((lifted, d))
    table = {}
    orders = [d for _, d in gens]
    for exps in itertools.product(*(range(d) for d in orders)):
        n = 1
        for (g, _), e in zip(gens, exps):
            n = n * pow(g, e, q) % q
        table.setdefault(n, exps)
    return gens, table


class DirichletCharacter:
    """A Dirichlet character mod q with exact root-of-unity values.

    exps[n] is the rational t in [0,1) with chi(n) = e(t), or None when
    gcd(n, q) > 1.
    """

    def __init__(self, q, exps, label):
        self.q = q
        self.exps = tuple(exps)
        self.label = label
        dens = [t.denominator for t in self.exps if t is not None]
        self.order = math.lcm(*dens) if dens else 1
        self.is_trivial = all(t == 0 for t in self.exps if t is not None)
        if q <= 2:
            self.parity = 1
        else:
            self.parity = 1 if self.exps[q - 1] == 0 else -1
        self.is_primitive = self._conductor() == q

    def _conductor(self):
        for d in sorted(_divisors(self.q)):
            if all(self.exps[n % self.q] == 0
                   for n in range(1, self.q * 2)
                   if n % d == 1 % d and math.gcd(n, self.q) == 1):
                return d
        return self.q

    def exponent(self, n):
        return self.exps[n % self.q]

    def value(self, n, ctx):
        """chi(n) at working precision (exact for 4th roots of unity)."""
        t = self.exps[n % self.q]
        mp = ctx.mp
        if t is None:
            return mp.mpc(0)
        if t == 0:
            return mp.mpc(1)
        if 2 * t == 1:
            return mp.mpc(-1)
        if 4 * t == 1:
            return mp.mpc(0, 1)
        if 4 * t == 3:
            return mp.mpc(0, -1)
        ang = 2 * pi_value(ctx) * ctx.mpf(t)
        return mp.mpc(mp.cos(ang), mp.sin(ang))

    def conjugate(self):
        exps = [None if t is None else (-t) % 1 for t in self.exps]
        return DirichletCharacter(self.q, exps, self.label + "~")

    def __repr__(self):
        return "DirichletCharacter(%s, order=%d%s)" % (
            self.label, self.order, ", primitive" if self.is_primitive else "")


def _divisors(q):
    out = []
    for d in range(1, q + 1):
        if q % d == 0:
            out.append(d)
    return out


def enumerate_characters(q):
    """All phi(q) characters mod q, deterministically ordered and labeled q.j.

    The trivial character is always q.0; j runs over the lexicographic
    generator-exponent tuples of the CRT decomposition.
    """
    if q < 1:
        raise DomainError("modulus must be >= 1")
    if q == 1:
        return [DirichletCharacter(1, [Fraction(0)], "1.0")]
    gens, table = _group_data(q)
    orders = [d for _, d in gens]
    chars = []
    for j, ts in enumerate(itertools.product(*(range(d) for d in orders))):
        exps = [None] * q
        for n, xv in table.items():
            t = Fraction(0)
            for ti, di, xi in zip(ts, orders, xv):
                t += Fraction(ti * xi, di)
            exps[n] = t % 1
        chars.append(DirichletCharacter(q, exps, "%d.%d" % (q, j)))
    return chars


# --------------------------------------------------- exact root-of-unity sums

def _cyclotomic(n, _cache={}):
    """Coefficients of the n-th cyclotomic polynomial (exact ints)."""
    got = _cache.get(n)
    if got is not None:
        return got
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _polydiv(poly, _cyclotomic(d))
    _cache[n] = poly
    return poly


def _polydiv(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for jj, dc in enumerate(den):
            num[i + jj] -= c * dc
    return q


def rootsum_is_zero(exponents):
    """Exact test: does sum_t e(t) vanish?  exponents: rationals t (mod 1)."""
    ts = [Fraction(t) % 1 for t in exponents]
    if not ts:
        return True
    L = math.lcm(*(t.denominator for t in ts))
    counts = [0] * L
    for t in ts:
        counts[int(t * L)] += 1
    # zero iff the count polynomial is divisible by Phi_L in Q[x]
    phi = _cyclotomic(L)
    rem = list(counts)
    for i in range(len(rem) - len(phi), -1, -1):
        c = Fraction(rem[i + len(phi) - 1], phi[-1])
        for jj, dc in enumerate(phi):
            rem[i + jj] -= c * dc
    return all(x == 0 for x in rem)


def gauss_sum(chi, ctx):
    """tau(chi) = sum_j chi(j) e(j/q)."""
    mp = ctx.mp
    q = chi.q
    total = mp.mpc(0)
    for j in range(1, q + 1):
        t = chi.exponent(j)
        if t is None:
            continue
        u = (t + Fraction(j, q)) % 1
        ang = 2 * pi_value(ctx) * ctx.mpf(u)
        total += mp.mpc(mp.cos(ang), mp.sin(ang))
    return total


# ------------------------------------------------------------------ L(s, chi)

def _check_nontrivial(chi):
    if chi.is_trivial:
        raise DomainError("L-series operations need a non-trivial character")


def l_function(s, chi, K=None, ctx=None):
    """L(s, chi) = q^-s sum_m chi(m) zeta(s, m/q), each Hurwitz factor through
    the alpha series at the shifted argument m/q + N."""
    _check_nontrivial(chi)
    mp = ctx.mp
    sv = _num(ctx, s)
    q = chi.q
    if sv == 1:
        v = l_at_1(chi, ctx)
        return SeriesResult(value=v, terms_used=1, tail_bound=mp.mpf(0),
                            flags={"closed_form": True, "converged": True})
    if _is_nonpos_int(ctx, sv):
        v = l_negative_integer(int(-_re(sv)), chi, ctx)
        return SeriesResult(value=v, terms_used=1, tail_bound=mp.mpf(0),
                            flags={"exact": True, "converged": True})
    N = max(1, _auto_len(ctx))
    partial = mp.mpc(0)
    for n in range(1, q * N + 1):
        t = chi.exponent(n)
        if t is None:
            continue
        partial += chi.value(n, ctx) * _pow(ctx, mp.mpf(n), -sv)
    qs = _pow(ctx, mp.mpf(q), -sv)
    total = mp.mpc(0)
    tails = mp.mpf(0)
    terms = 0
    flags = {}
    for m in range(1, q):
        t = chi.exponent(m)
        if t is None:
            continue
        a_m = ctx.convert(Fraction(m, q) + N)
        val, tm, tail, fl = _weighted_series(sv, a_m, {0: mp.mpf(1)}, ctx, K=K)
        total += chi.value(m, ctx) * val
        tails += tail
        terms = max(terms, tm)
        flags.update(fl)
    value = partial + qs * total
    tail = abs(qs) * tails
    flags["converged"] = bool(tail < ctx.eps * max(abs(value), mp.mpf(1)))
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags=flags)


def l_at_1(chi, ctx):
    """L(1, chi) = -(1/q) sum_m chi(m) psi(m/q)."""
    _check_nontrivial(chi)
    mp = ctx.mp
    q = chi.q
    total = mp.mpc(0)
    for m in range(1, q):
        t = chi.exponent(m)
        if t is None:
            continue
        total += chi.value(m, ctx) * digamma(ctx.mpf(Fraction(m, q)), ctx)
    return -total / q


def l_shifted(s, lam, chi, K=None, ctx=None):
    """L(s - lambda, chi) with c_{m/q}(lambda, j) weights (shift-accelerated)."""
    _check_nontrivial(chi)
    lam = int(lam)
    if lam < 0:
        raise DomainError("lambda must be >= 0")
    if lam == 0:
        return l_function(s, chi, K=K, ctx=ctx)
    mp = ctx.mp
    sv = _num(ctx, s)
    q = chi.q
    if sv == 1:
        v = l_one_minus_lambda(lam, chi, ctx)
        return SeriesResult(value=v, terms_used=1, tail_bound=mp.mpf(0),
                            flags={"closed_form": True, "converged": True})
    if _is_nonpos_int(ctx, sv) or (_im(sv) == 0 and _re(sv) == int(_re(sv))
                                   and _re(sv) <= lam):
        v = l_negative_integer(int(lam - _re(sv)), chi, ctx)
        return SeriesResult(value=v, terms_used=1, tail_bound=mp.mpf(0),
                            flags={"exact": True, "converged": True})
    N = max(1, _auto_len(ctx) + 2 * lam)
    partial = mp.mpc(0)
    for n in range(1, q * N + 1):
        t = chi.exponent(n)
        if t is None:
            continue
        partial += chi.value(n, ctx) * _pow(ctx, mp.mpf(n), -(sv - lam))
    qs = _pow(ctx, mp.mpf(q), -(sv - lam))
    total = mp.mpc(0)
    tails = mp.mpf(0)
    terms = 0
    flags = {}
    for m in range(1, q):
        t = chi.exponent(m)
        if t is None:
            continue
        a_m = Fraction(m, q) + N
        weights = {}
        for j in range(lam + 1):
            w = c_a_value(lam, j, a_m)
            if w != 0:
                weights[j] = ctx.mpf(w)
        val, tm, tail, fl = _weighted_series(sv, ctx.convert(a_m), weights,
                                             ctx, K=K)
        total += chi.value(m, ctx) * val
        tails += tail
        terms = max(terms, tm)
        flags.update(fl)
    value = partial + qs * total
    tail = abs(qs) * tails
    flags["converged"] = bool(tail < ctx.eps * max(abs(value), mp.mpf(1)))
    return SeriesResult(value=value, terms_used=terms, tail_bound=tail,
                        flags=flags)


def l_negative_integer(r, chi, ctx):
    """L(-r, chi) = r! q^r sum_{k=0}^r ((-1)^(k-1) alpha_k(-r)/(r+1-k)!)
    * sum_m chi(m) (m/q - 1)...(m/q + k - r - 1), with exact alpha values."""
    _check_nontrivial(chi)
    r = int(r)
    if r < 0:
        raise DomainError("r must be >= 0")
    mp = ctx.mp
    q = chi.q
    al = alpha_table_exact(Fraction(-r), r)
    total = mp.mpc(0)
    for m in range(1, q):
        t = chi.exponent(m)
        if t is None:
            continue
        a = Fraction(m, q)
        coeff = Fraction(0)
        for k in range(r + 1):
            prod = Fraction(1)
            for i in range(1, r + 2 - k):
                prod *= a - i
            sign = -1 if k % 2 == 0 else 1
            coeff += Fraction(sign, math.factorial(r + 1 - k)) * al[k] * prod
        total += chi.value(m, ctx) * ctx.mpf(coeff)
    return total * math.factorial(r) * q ** r


def l_one_minus_lambda(lam, chi, ctx):
    """L(1-lambda, chi) from the alpha'(1) expansion:

    q^(lambda-1) sum_j sum_m chi(m) c_{m/q}(lambda, j)
      [ ((-1)^j/j!) P(j,0) + sum_{k=1}^j ((-1)^(j-k)/(j-k)!) alpha'_k(1) P(j,k) ]

    with P(j,k) = (m/q-1)...(m/q-j+k), empty product = 1 at k = j.  The
    k-dependent product binds inside the k-sum.  The k = 0 contribution is the
    finite part of the pole limit: its simple poles cancel across j (the sum
    of (-1)^j/j! c_a(lam,j) P(j,0) vanishes identically), and what survives is
    ((-1)^j/j!) P(j,0) (H_j + sum_{i<=j} 1/(a-i)) with H_j the harmonic
    number, which is rational in a = m/q.
    """
    _check_nontrivial(chi)
    lam = int(lam)
    if lam < 0:
        raise DomainError("lambda must be >= 0")
    if lam == 0:
        return l_at_1(chi, ctx)
    mp = ctx.mp
    q = chi.q
    ap = alpha_prime_at_1(lam)
    total = mp.mpc(0)
    for m in range(1, q):
        t = chi.exponent(m)
        if t is None:
            continue
        a = Fraction(m, q)
        acc = Fraction(0)
        for j in range(lam + 1):
            c = c_a_value(lam, j, a)
            if c == 0:
                continue
            prods = {}
            for k in range(j + 1):
                prod = Fraction(1)
                for i in range(1, j - k + 1):
                    prod *= a - i
                prods[k] = prod
            harm = sum((Fraction(1, i) for i in range(1, j + 1)), Fraction(0))
            harm += sum((1 / (a - i) for i in range(1, j + 1)), Fraction(0))
            inner = Fraction((-1) ** j, math.factorial(j)) * prods[0] * harm
            for k in range(1, j + 1):
                inner += Fraction((-1) ** (j - k), math.factorial(j - k)) \
                    * ap[k] * prods[k]
            acc += c * inner
        total += chi.value(m, ctx) * ctx.mpf(acc)
    return total * ctx.mpf(Fraction(q) ** (lam - 1))


def generalized_bernoulli(n, chi):
    """B_{n,chi} = q^(n-1) sum_{a=1}^q chi(a) B_n(a/q); returns the exact list
    of (exponent t, rational coefficient) pairs summed as sum c e(t)."""
    out = []
    q = chi.q
    for a in range(1, q + 1):
        t = chi.exponent(a)
        if t is None:
            continue
        out.append((t, Fraction(q) ** (n - 1) * bernoulli_poly(n, Fraction(a, q))))
    return out
