"""Command-line front end: evaluation subcommands, table grids, CSV output.

Exit codes: 0 success, 1 argument/parse errors, 2 domain/validity errors,
3 precision failures.  Output is deterministic: fixed significant digits,
LF line endings, no locale-dependent formatting.
"""

import argparse
import sys
from fractions import Fraction

from . import dirichlet, gammafun, hasse, zetafun
from .combinat import c_a_table
from .errors import (DomainError, ParseError, PoleError, PrecisionError,
                     ValidityError)
from .mpnum import format_number, make_context, parse_complex

DEFAULT_PREC = 30


def _context(args):
    return make_context(args.prec, args.guard)


def _parse_real(text, ctx, name):
    v = parse_complex(text, ctx)
    if getattr(v, "imag", 0) != 0:
        raise ParseError("--%s must be real, got %r" % (name, text))
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    return v


def _resolve_chi(label):
    try:
        q_s, j_s = label.split(".")
        q, j = int(q_s), int(j_s)
    except ValueError:
        raise ParseError("character label must look like 'q.j', got %r"
                         % (label,))
    for chi in dirichlet.enumerate_characters(q):
        if chi.label == label:
            return chi
    raise ParseError("no character labelled %r mod %d; run: zident chars "
                     "--q %d" % (label, q, q))


def _emit_result(res, ctx, out):
    out.write("value = %s\n" % format_number(res.value, ctx.target_digits))
    out.write("terms_used = %d\n" % res.terms_used)
    tail = res.tail_bound
    out.write("tail_bound = %s%s\n" % (
        format_number(tail, 4),
        " (heuristic)" if res.flags.get("heuristic_tail") else ""))


def _emit_value(value, ctx, out):
    out.write("value = %s\n" % format_number(value, ctx.target_digits))


def cmd_gamma(args, ctx, out):
    if args.w is not None:
        res = gammafun.gamma_w(parse_complex(args.s, ctx),
                               parse_complex(args.w, ctx), K=args.K, ctx=ctx)
    else:
        res = gammafun.gamma_n(parse_complex(args.s, ctx), N=args.N,
                               K=args.K, ctx=ctx)
    _emit_result(res, ctx, out)
    return 0


def cmd_zeta(args, ctx, out):
    s = parse_complex(args.s, ctx)
    if args.method == "em":
        res = zetafun.euler_maclaurin_zeta(s, args.N or 10, args.K or 20, ctx)
    elif args.lam:
        res = zetafun.zeta_shifted(s, args.lam, K=args.K, ctx=ctx, N=args.N)
    else:
        res = zetafun.riemann_zeta(s, N=args.N, K=args.K, ctx=ctx)
    _emit_result(res, ctx, out)
    return 0


def cmd_hurwitz(args, ctx, out):
    s = parse_complex(args.s, ctx)
    a = _parse_real(args.a, ctx, "a")
    if args.lam:
        res = zetafun.hurwitz_shifted(s, args.lam, a, K=args.K, ctx=ctx)
    else:
        res = zetafun.hurwitz_zeta(s, a, K=args.K, ctx=ctx)
    _emit_result(res, ctx, out)
    return 0


def cmd_lfunc(args, ctx, out):
    chi = _resolve_chi(args.chi)
    s = parse_complex(args.s, ctx)
    s0 = parse_complex(args.s0, ctx) if args.s0 else 0
    if args.method == "hasse":
        res = hasse.l_hasse(s, s0, chi, m_max=args.m_max, ctx=ctx)
    elif args.method == "interpolate":
        res = hasse.l_interpolation_q_le_5(s, s0, chi, m_max=args.m_max,
                                           ctx=ctx)
    else:
        if args.s0:
            raise ParseError("--s0 needs --method hasse or interpolate")
        res = dirichlet.l_function(s, chi, ctx=ctx)
    _emit_result(res, ctx, out)
    return 0


def cmd_eta(args, ctx, out):
    s = parse_complex(args.s, ctx)
    s0 = parse_complex(args.s0, ctx) if args.s0 else 0
    if args.method in ("amore", "amore-factorial"):
        if args.lam is None:
            raise ParseError("--lambda is required for the Amore methods")
        if args.s0:
            raise ParseError("--s0 does not apply to the Amore methods")
        variant = "geometric" if args.method == "amore" else "factorial"
        res = hasse.eta_amore(s, _parse_real(args.lam, ctx, "lambda"),
                              m_max=args.m_max, ctx=ctx, variant=variant)
    else:
        method = {"hasse": "integral", "stirling": "stirling",
                  "auto": "auto"}[args.method]
        if args.a is not None:
            res = hasse.alt_hurwitz_hasse(s, s0, _parse_real(args.a, ctx, "a"),
                                          m_max=args.m_max, ctx=ctx,
                                          method=method)
        else:
            res = hasse.eta_hasse(s, s0, m_max=args.m_max, ctx=ctx,
                                  method=method)
    _emit_result(res, ctx, out)
    return 0


def cmd_chars(args, ctx, out):
    for chi in dirichlet.enumerate_characters(args.q):
        out.write("%s order=%d parity=%s%s%s\n" % (
            chi.label, chi.order, "even" if chi.parity == 1 else "odd",
            " primitive" if chi.is_primitive else "",
            " trivial" if chi.is_trivial else ""))
    return 0


def _poly_str(coeffs):
    # highest power first, matching the conventional table layout
    parts = []
    for p in range(len(coeffs) - 1, -1, -1):
        c = coeffs[p]
        if c == 0:
            continue
        if p == 0:
            parts.append("%d" % c)
            continue
        mono = "a" if p == 1 else "a^%d" % p
        if c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append("%d%s" % (c, mono))
    if not parts:
        return "0"
    s = parts[0]
    for p in parts[1:]:
        s += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
    return s


def cmd_ca_table(args, ctx, out):
    table = c_a_table(args.lmax)
    for lam in range(args.lmax + 1):
        for j in range(lam + 1):
            if lam >= 1 and j == 0:
                # c_a(lam, 0) = (a-1)^lam by the recurrence
                body = "(a-1)^%d" % lam if lam > 1 else "a - 1"
            else:
                body = _poly_str(table[(lam, j)])
            out.write("c_a(%d,%d) = %s\n" % (lam, j, body))
    return 0


def cmd_tables(args, ctx, out):
    kind = {"1": "alpha", "2": "em"}[args.which]
    grid = zetafun.remainder_tables(kind, ctx)
    ks = sorted({k for k, _ in grid})
    ns = sorted({n for _, n in grid})
    lines = ["K," + ",".join("R_N%d" % n for n in ns)]
    for k in ks:
        row = [str(k)]
        for n in ns:
            row.append(format_number(grid[(k, n)], 10))
        lines.append(",".join(row))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
        out.write("wrote %d rows to %s\n" % (len(ks), args.out))
    else:
        out.write(text)
    return 0


def cmd_asympt(args, ctx, out):
    if args.which == "jsum":
        if args.a is None or args.s is None:
            raise ParseError("jsum needs --a and --s")
        exact, est = hasse.j_sum_and_estimate(
            args.m, _parse_real(args.a, ctx, "a"),
            parse_complex(args.s, ctx), ctx)
        out.write("exact = %s\n" % format_number(exact, ctx.target_digits))
        out.write("estimate = %s\n" % format_number(est, ctx.target_digits))
        if est != 0:
            out.write("ratio = %s\n" % format_number(exact / est, 10))
        else:
            out.write("ratio = n/a (estimate is exactly 0)\n")
    else:
        if args.chi is None:
            raise ParseError("chisum needs --chi")
        rec = hasse.chi_sum_estimate(args.m, _resolve_chi(args.chi), ctx)
        out.write("exact = %s%s\n" % (
            format_number(rec["exact"], ctx.target_digits),
            " (exactly 0)" if rec["exact_is_zero"] else ""))
        out.write("main_term = %s\n"
                  % format_number(rec["main_term"], ctx.target_digits))
        out.write("bound = %s\n" % format_number(rec["bound"], 10))
        if not rec["exact_is_zero"] and rec["main_term"] != 0:
            out.write("ratio = %s\n"
                      % format_number(rec["exact"] / rec["main_term"], 10))
        else:
            out.write("ratio = n/a\n")
    return 0


def cmd_euler_gamma(args, ctx, out):
    res = gammafun.euler_gamma(ctx, N=args.N, K=args.K)
    _emit_result(res, ctx, out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="zident",
        description="High-precision Gamma, zeta and Dirichlet L-function "
                    "evaluation via logarithm-power series coefficients and "
                    "Hasse-type finite-difference expansions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, m_max=False):
        sp.add_argument("--prec", type=int, default=DEFAULT_PREC,
                        help="target significant digits (default %d)"
                             % DEFAULT_PREC)
        sp.add_argument("--guard", type=int, default=None,
                        help="guard digits (default: 10 + 10%% of --prec)")
        if m_max:
            sp.add_argument("--m-max", dest="m_max", type=int, default=None,
                            help="truncation order of the m-sum")

    sp = sub.add_parser(
        "gamma", help="Gamma(s)",
        description="Gamma(s) = w^s Gamma(w) sum_k alpha_k(s) Gamma(s+k) / "
                    "Gamma(s+k+w), where alpha_k(s) are the coefficients of "
                    "((-log(1-t))/t)^(s-1); integer w = N+1 by default.")
    sp.add_argument("--s", required=True)
    sp.add_argument("--w", default=None, help="non-integer w variant")
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--K", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_gamma)

    sp = sub.add_parser(
        "zeta", help="Riemann zeta(s)",
        description="zeta(s) = sum_{n<=N} n^-s + (N!/Gamma(s)) sum_k "
                    "alpha_k(s)/((s+k-1)...(s+k-1+N)); --lambda switches to "
                    "the Stirling-weighted shift zeta(s-lambda); --method em "
                    "evaluates the Euler-Maclaurin comparator instead.")
    sp.add_argument("--s", required=True)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--K", type=int, default=None)
    sp.add_argument("--lambda", dest="lam", type=int, default=0)
    sp.add_argument("--method", choices=["alpha", "em"], default="alpha")
    common(sp)
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser(
        "hurwitz", help="Hurwitz zeta(s, a)",
        description="zeta(s,a) = (1/Gamma(s)) sum_k alpha_k(s) Gamma(s+k-1) "
                    "Gamma(a)/Gamma(s+k+a-1), shift-accelerated; --lambda "
                    "switches to the c_a(lambda,j)-weighted zeta(s-lambda,a).")
    sp.add_argument("--s", required=True)
    sp.add_argument("--a", required=True,
                    help="real a > 0; fractions like 1/3 are exact")
    sp.add_argument("--K", type=int, default=None)
    sp.add_argument("--lambda", dest="lam", type=int, default=0)
    common(sp)
    sp.set_defaults(func=cmd_hurwitz)

    sp = sub.add_parser(
        "lfunc", help="Dirichlet L(s, chi)",
        description="L(s,chi) by the alpha-coefficient expansion over "
                    "Hurwitz components (default), the eta-weight "
                    "finite-difference form sum_m w_m sum_j chi(j+1) C(m,j) "
                    "(j+1)^-s (--method hasse, any modulus), or the "
                    "grid self-interpolation valid for modulus <= 5 "
                    "(--method interpolate).")
    sp.add_argument("--chi", required=True, help="character label q.j; "
                    "list labels with: zident chars --q <q>")
    sp.add_argument("--s", required=True)
    sp.add_argument("--s0", default=None)
    sp.add_argument("--method", choices=["series", "hasse", "interpolate"],
                    default="series")
    common(sp, m_max=True)
    sp.set_defaults(func=cmd_lfunc)

    sp = sub.add_parser(
        "eta", help="alternating zeta eta(s+s0), and zeta*(s+s0, a)",
        description="eta(s+s0) = sum_m w_m sum_j (-1)^j C(m,j) (j+1)^-s "
                    "with weights 1/2^(m+1) at s0 = 0, integral-form weights "
                    "for Re s0 > -1 (--method hasse), or Stirling-number "
                    "weights over eta(s0+1-l) for any s0 "
                    "(--method stirling).  --a evaluates the alternating "
                    "Hurwitz form sum_n (-1)^n (n+a)^-(s+s0).  --method "
                    "amore/amore-factorial use the exponential-weight "
                    "variants with parameter --lambda.")
    sp.add_argument("--s", required=True)
    sp.add_argument("--s0", default=None)
    sp.add_argument("--a", default=None)
    sp.add_argument("--lambda", dest="lam", default=None)
    sp.add_argument("--method",
                    choices=["auto", "hasse", "stirling", "amore",
                             "amore-factorial"],
                    default="auto")
    common(sp, m_max=True)
    sp.set_defaults(func=cmd_eta)

    sp = sub.add_parser(
        "chars", help="list Dirichlet characters mod q",
        description="Label directory: characters mod q as exact rational "
                    "exponents on CRT generators, labelled q.j.")
    sp.add_argument("--q", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_chars)

    sp = sub.add_parser(
        "ca-table", help="exact c_a(lambda, j) polynomial table",
        description="The connection polynomials defined by c_a(1,0) = a-1, "
                    "c_a(1,1) = 1 and c_a(lambda+1, j) = (a-j-1) "
                    "c_a(lambda,j) + j c_a(lambda,j-1), printed exactly.")
    sp.add_argument("--lmax", type=int, default=7)
    common(sp)
    sp.set_defaults(func=cmd_ca_table)

    sp = sub.add_parser(
        "tables", help="remainder grids as CSV",
        description="Relative remainders of the zeta(3) expansions over the "
                    "K x N grid: --which 1 for the alpha partial-sum series, "
                    "--which 2 for the Euler-Maclaurin comparator.  Cells "
                    "are printed to 10 significant digits.")
    sp.add_argument("--which", choices=["1", "2"], required=True)
    sp.add_argument("--out", default=None, help="CSV path (default stdout)")
    common(sp)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser(
        "asympt", help="finite-difference sum asymptotics",
        description="jsum: exact sum_j (-1)^j C(m,j) (j+a)^-s against the "
                    "estimate log(m)^(s-1) Gamma(a)/(m^a Gamma(s)).  chisum: "
                    "exact sum_j chi(j+1) C(m,j) against the two-term "
                    "Gauss-sum main term and the bound "
                    "2 q^(-1/2) (2 cos(pi/q))^m.")
    sp.add_argument("--which", choices=["jsum", "chisum"], required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--a", default=None)
    sp.add_argument("--s", default=None)
    sp.add_argument("--chi", default=None)
    common(sp)
    sp.set_defaults(func=cmd_asympt)

    sp = sub.add_parser(
        "euler-gamma", help="Euler's constant",
        description="gamma = H_N - log(N+1) - N! sum_{k>=1} alpha_k(0) / "
                    "(k(k+1)...(k+N)).")
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--K", type=int, default=None)
    common(sp)
    sp.set_defaults(func=cmd_euler_gamma)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    try:
        ctx = _context(args)
        return args.func(args, ctx, sys.stdout)
    except ParseError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except PoleError as e:
        loc = getattr(e, "location", None)
        res = getattr(e, "residue", None)
        extra = ""
        if loc is not None and res is not None:
            extra = " (simple pole at %s, residue %s)" % (loc, res)
        print("error: %s%s" % (e, extra), file=sys.stderr)
        return 2
    except (DomainError, ValidityError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except PrecisionError as e:
        print("error: %s" % e, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
