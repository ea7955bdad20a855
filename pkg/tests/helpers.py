"""Shared helpers for the test suite."""

from zident.mpnum import make_context


def relerr(ctx, got, ref):
    """Relative error |got - ref| / |ref| as a float (absolute if ref = 0)."""
    got = ctx.convert(got)
    ref = ctx.convert(ref)
    d = abs(got - ref)
    if ref == 0:
        return float(d)
    return float(d / abs(ref))


def assert_digits(ctx, got, ref, digits, label=""):
    e = relerr(ctx, got, ref)
    assert e <= 10.0 ** (-digits), (
        "%s: relative error %.3e exceeds 1e-%d" % (label or "value", e, digits))


def ctx_of(digits, guard=None):
    return make_context(digits, guard)
