"""Arbitrary-precision plumbing: contexts, parsing, formatting, series results.

Numbers are mpmath mpf/mpc values.  A PrecisionContext owns a private mpmath
context so two PrecisionContexts never fight over a global precision setting.
"""

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath.ctx_mp import MPContext

from .errors import ParseError

__all__ = [
    "PrecisionContext", "make_context", "SeriesResult", "parse_complex",
    "format_number",
]


def default_guard(target_digits):
    # ten digits plus 10% of the target
    return 10 + math.ceil(0.1 * target_digits)


class PrecisionContext:
    """Working-precision container.

    target_digits is what the caller wants to trust; working_digits adds guard
    digits.  All arithmetic launched from this context runs at working_digits.
    """

    def __init__(self, target_digits, guard_digits=None):
        if target_digits < 1:
            raise ParseError("target_digits must be >= 1")
        if guard_digits is None:
            guard_digits = default_guard(target_digits)
        self.target_digits = int(target_digits)
        self.guard_digits = int(guard_digits)
        self.mp = MPContext()
        self.mp.dps = self.working_digits

    @property
    def working_digits(self):
        return self.target_digits + self.guard_digits

    @property
    def prec_bits(self):
        return self.mp.prec

    @property
    def eps(self):
        """10^(-target_digits), the caller-visible tolerance."""
        return self.mp.mpf(10) ** (-self.target_digits)

    @property
    def working_eps(self):
        return self.mp.mpf(10) ** (-self.working_digits)

    def elevated(self, extra_digits):
        """A context with the same target but extra working digits."""
        return PrecisionContext(self.target_digits,
                                self.guard_digits + max(0, int(extra_digits)))

    def mpf(self, x):
        if isinstance(x, Fraction):
            return self.mp.mpf(x.numerator) / x.denominator
        return self.mp.mpf(x)

    def mpc(self, x, y=0):
        if isinstance(x, Fraction) or isinstance(y, Fraction):
            return self.mpf(x) + self.mp.mpc(0, 1) * self.mpf(y)
        return self.mp.mpc(x, y)

    def convert(self, x):
        if isinstance(x, Fraction):
            return self.mpf(x)
        return self.mp.convert(x)

    def is_real(self, z):
        return isinstance(z, self.mp.mpf) or (
            isinstance(z, self.mp.mpc) and z.imag == 0)

    def nstr(self, x, n=None):
        n = n or self.target_digits
        return self.mp.nstr(x, n, strip_zeros=False)

    def __repr__(self):
        return "PrecisionContext(target=%d, guard=%d)" % (
            self.target_digits, self.guard_digits)


def make_context(target_digits, guard_digits=None):
    return PrecisionContext(target_digits, guard_digits)


@dataclass
class SeriesResult:
    """Value of a truncated expansion plus convergence metadata.

    flags: 'converged' - tail bound fell below the context tolerance;
           'heuristic_tail' - tail_bound is an estimate, not a proof;
           'exact' - value obtained from a finite closed form (tail 0).
    """
    value: object
    terms_used: int
    tail_bound: object
    flags: dict = field(default_factory=dict)

    @property
    def converged(self):
        return bool(self.flags.get("converged") or self.flags.get("exact"))


_COMPLEX_RE = re.compile(
    r"""^\s*
    (?P<re>[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)?
    (?:(?P<im>[+-](?:\d+(?:\.\d*)?|\.\d+)?(?:[eE][+-]?\d+)?)?(?P<i>[ij]))?
    \s*$""",
    re.VERBOSE,
)


def parse_complex(text, ctx):
    """Parse 'a', 'bi', 'a+bi', 'a-bi' (also 'j' accepted) into mpf/mpc.

    Fractions like '1/3' are accepted for either part and converted exactly
    at working precision.
    """
    if not isinstance(text, str):
        raise ParseError("expected a string, got %r" % (text,))
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty numeric literal")

    def _part(p):
        if "/" in p:
            try:
                num, den = p.split("/")
                fr = Fraction(int(num), int(den))
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError("bad fraction %r in %r" % (p, text)) from e
            return ctx.mpf(fr)
        try:
            return ctx.mp.mpf(p)
        except ValueError as e:
            raise ParseError("bad numeric literal %r in %r" % (p, text)) from e

    # fraction forms are handled outside the regex
    if s.endswith(("i", "j")):
        body = s[:-1]
        # split into real and imaginary pieces at the last top-level +/-
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "eE":
                re_s, im_s = body[:k], body[k:]
                break
        else:
            re_s, im_s = "", body
        if im_s in ("", "+"):
            im_s = "1"
        elif im_s == "-":
            im_s = "-1"
        re_v = _part(re_s) if re_s else ctx.mp.mpf(0)
        im_v = _part(im_s)
        return ctx.mp.mpc(re_v, im_v)
    re_v = _part(s)
    return re_v


def format_number(x, digits=10):
    """Deterministic scientific formatting: [-]d.ddddddddde[+-]ddd.

    Complex values are rendered as 're+imi' with both parts in the same
    format.  Exact zero prints as 0.
    """
    if hasattr(x, "imag") and not isinstance(x, float) and getattr(x, "imag", 0) != 0:
        re_s = format_number(x.real, digits)
        im_s = format_number(x.imag, digits)
        sign = "+" if not im_s.startswith("-") else ""
        return "%s%s%si" % (re_s, sign, im_s)
    x = getattr(x, "real", x)
    if x == 0:
        return "0"
    # render via mpmath at the requested significant digits
    s = mpmath.nstr(mpmath.mpf(x) if not isinstance(x, mpmath.mpf) else x,
                    digits, strip_zeros=False, min_fixed=1, max_fixed=0)
    # mpmath gives d.ddde+d / d.ddde-d; normalize the exponent to >= 1 digit
    if "e" not in s:
        # fall back: force exponent form
        m = mpmath.mpf(x)
        from mpmath import floor, log10, mpf as _mpf
        s = mpmath.nstr(m, digits, strip_zeros=False, min_fixed=1, max_fixed=0)
    mant, _, exp = s.partition("e")
    if not exp:
        exp = "0"
    exp_i = int(exp)
    if "." not in mant:
        mant += "." + "0" * (digits - 1)
    # pad mantissa to exactly `digits` significant digits
    neg = mant.startswith("-")
    core = mant[1:] if neg else mant
    intpart, frac = core.split(".")
    frac = (frac + "0" * digits)[: digits - len(intpart)]
    mant = ("-" if neg else "") + intpart + "." + frac
    return "%se%s%02d" % (mant, "+" if exp_i >= 0 else "-", abs(exp_i))
