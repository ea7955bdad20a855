"""Exact combinatorial kernels: binomials, Stirling numbers, Bernoulli
numbers/polynomials, partial-fraction weights, the c_a(lambda, j) polynomial
family and the b_lambda weights.

Everything here is exact (ints / Fractions); floating point never enters.
"""

import math
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError

__all__ = [
    "binomial", "stirling2", "stirling1", "bernoulli", "bernoulli_poly",
    "partial_fraction_weights", "c_a_table", "c_a_value", "b_lambda_weights",
    "b_lambda_weights_matrix",
]


def binomial(n, k):
    """C(n, k) for integer n >= 0; 0 outside the triangle."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def _stirling2_row(n):
    if n == 0:
        return (1,)
    prev = _stirling2_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        row[k] = (prev[k - 1] if k - 1 < len(prev) else 0) + \
            k * (prev[k] if k < len(prev) else 0)
    return tuple(row)


def stirling2(n, k):
    """Stirling numbers of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise DomainError("stirling2 needs n, k >= 0")
    if k > n:
        return 0
    return _stirling2_row(n)[k]


@lru_cache(maxsize=None)
def _stirling1_row(n):
    # signed: x(x-1)...(x-n+1) = sum_k s(n,k) x^k
    if n == 0:
        return (1,)
    prev = _stirling1_row(n - 1)
    row = [0] * (n + 1)
    for k in range(n + 1):
        row[k] = (prev[k - 1] if 1 <= k else 0) - \
            (n - 1) * (prev[k] if k < len(prev) else 0)
    return tuple(row)


def stirling1(n, k):
    """Signed Stirling numbers of the first kind s(n, k)."""
    if n < 0 or k < 0:
        raise DomainError("stirling1 needs n, k >= 0")
    if k > n:
        return 0
    return _stirling1_row(n)[k]


# ---------------------------------------------------------------------------
# Bernoulli numbers.  B_1 = -1/2 convention.
#
# Even-index values come from tangent numbers T_1, T_3, ... computed by the
# integer-only triangle (no gcd churn), which stays fast out to n ~ 2100:
#   B_{2n} = (-1)^(n-1) * 2n * T_{2n-1} / (4^n (4^n - 1)).

_tangent_cache = [1]  # _tangent_cache[k] = T_{2k+1}


def _extend_tangent(upto):
    """Ensure T_{2k+1} is cached for k <= upto."""
    n = upto + 1
    if len(_tangent_cache) >= n:
        return
    # grow geometrically: the triangle rebuilds from scratch, so creeping
    # one index at a time would cost O(n^3) overall
    n = max(n, 2 * len(_tangent_cache))
    t = [0] * (n + 1)
    t[1] = 1
    for k in range(2, n + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    _tangent_cache[:] = t[1:]


def bernoulli(n):
    """Exact Bernoulli number B_n as a Fraction (B_1 = -1/2)."""
    if n < 0:
        raise DomainError("bernoulli needs n >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    m = n // 2
    _extend_tangent(m - 1)
    tang = _tangent_cache[m - 1]
    four = 1 << n  # 4^m
    val = Fraction(n * tang, four * (four - 1))
    return val if m % 2 else -val


def bernoulli_via_recurrence(nmax):
    """Classical recurrence sum_{k<=n} C(n+1,k) B_k = 0; cross-check oracle."""
    b = [Fraction(1)]
    for n in range(1, nmax + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += binomial(n + 1, k) * b[k]
        b.append(-acc / (n + 1))
    return b


def bernoulli_poly(n, x):
    """B_n(x) = sum_k C(n,k) B_k x^(n-k), exact when x is Fraction/int."""
    if n < 0:
        raise DomainError("bernoulli_poly needs n >= 0")
    if isinstance(x, int):
        x = Fraction(x)
    acc = 0
    xp = 1
    # accumulate highest power first: sum_k C(n,k) B_k x^(n-k)
    for k in range(n, -1, -1):
        acc += binomial(n, k) * bernoulli(k) * xp
        xp = xp * x
    return acc


def partial_fraction_weights(m):
    """Weights a_l with 1/((z)(z-1)...(z-m)) = sum_l a_l/(z-l).

    a_l = (-1)^(m-l) / (l! (m-l)!).
    """
    if m < 0:
        raise DomainError("partial_fraction_weights needs m >= 0")
    return [Fraction((-1) ** (m - l), math.factorial(l) * math.factorial(m - l))
            for l in range(m + 1)]


# ---------------------------------------------------------------------------
# c_a(lambda, j): integer-coefficient polynomials in a defined by
#   c_a(0,0) = 1,   c_a(lambda+1, j) = (a - j - 1) c_a(lambda, j) + j c_a(lambda, j-1)
# with c_a(lambda, j) = 0 outside 0 <= j <= lambda.  Stored as coefficient
# tuples in a, lowest degree first.

def _poly_add(p, q):
    n = max(len(p), len(q))
    return tuple((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n))


def _poly_scale(p, c):
    return tuple(c * x for x in p)


def _poly_shift_mul_a(p):
    # multiply by a
    return (0,) + tuple(p)


@lru_cache(maxsize=None)
def _c_a_rows(lmax):
    """rows[lam][j] -> coefficient tuple of c_a(lam, j)."""
    rows = [{0: (1,)}]
    for lam in range(lmax):
        prev = rows[lam]
        cur = {}
        for j in range(lam + 2):
            p = prev.get(j)
            q = prev.get(j - 1)
            acc = ()
            if p is not None:
                # (a - j - 1) * p
                acc = _poly_add(_poly_shift_mul_a(p), _poly_scale(p, -(j + 1)))
            if q is not None and j > 0:
                acc = _poly_add(acc, _poly_scale(q, j))
            if acc and any(acc):
                cur[j] = acc
        rows.append(cur)
    return rows


def c_a_table(lmax):
    """Polynomials c_a(lambda, j) for lambda <= lmax, as {(lam, j): coeffs}.

    coeffs is a tuple of ints, lowest power of a first.
    """
    rows = _c_a_rows(lmax)
    out = {}
    for lam in range(lmax + 1):
        for j, p in rows[lam].items():
            out[(lam, j)] = p
    return out


def c_a_value(lam, j, a):
    """Evaluate c_a(lambda, j) at a (exact for Fraction/int a)."""
    p = _c_a_rows(lam)[lam].get(j)
    if p is None:
        return 0 * a if not isinstance(a, (int, Fraction)) else Fraction(0)
    acc = 0
    for c in reversed(p):
        acc = acc * a + c
    return acc


# ---------------------------------------------------------------------------
# b_lambda weights: sum_{lambda=1}^Lambda b_lambda zeta(s-lambda) collapses the
# Stirling-weighted denominators to 1/((z-1)...(z-Lambda)), z = s+k-1.

def b_lambda_weights(Lambda):
    """Closed form weights b_1..b_Lambda (list of Fractions, index 0 -> b_1)."""
    if Lambda < 1:
        raise DomainError("b_lambda_weights needs Lambda >= 1")
    fac = math.factorial(Lambda - 1)
    out = []
    for lam in range(1, Lambda + 1):
        acc = Fraction(0)
        for j in range(lam, Lambda + 1):
            acc += Fraction(stirling1(j, lam) * binomial(Lambda - 1, j - 1),
                            math.factorial(j))
        acc *= Fraction((-1) ** (Lambda + lam), fac)
        out.append(acc)
    return out


def b_lambda_weights_matrix(Lambda):
    """The same weights from the defining linear system, solved exactly.

    For j = 1..Lambda:  sum_{lambda=j}^Lambda (-1)^(lambda+j) S(lambda,j) j! b_lambda
                        = (-1)^(Lambda-j) C(Lambda-1, j-1) / (Lambda-1)!
    """
    n = Lambda
    fac = math.factorial(Lambda - 1)
    # build augmented matrix over Fractions
    M = [[Fraction((-1) ** (lam + j) * stirling2(lam, j) * math.factorial(j))
          for lam in range(1, n + 1)]
         for j in range(1, n + 1)]
    rhs = [Fraction((-1) ** (Lambda - j) * binomial(Lambda - 1, j - 1), fac)
           for j in range(1, n + 1)]
    # Gaussian elimination, exact
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        rhs[col], rhs[piv] = rhs[piv], rhs[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        rhs[col] = rhs[col] * inv
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
                rhs[r] = rhs[r] - f * rhs[col]
    return rhs
