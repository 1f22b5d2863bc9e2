"""Directed-rounding float helpers.

Outward rounding is done by nudging results to the adjacent representable
float (``math.nextafter``) instead of switching the hardware rounding mode,
which keeps the arithmetic portable and thread-agnostic.  Each operation
first checks whether the float result is already exact; exact results are
returned unnudged, so e.g. ``[1,2] + [3,4]`` stays ``[4,6]``.

Exactness tests:
  * add/sub use the TwoSum error term (exact for finite operands),
  * mul/div bound the significand width of the operands; a product whose
    significand widths sum to <= 53 bits is representable.

Every helper is sound in the IEEE-754 binary64 model: the true real result
always lies on the safe side of the returned bound, including overflow and
underflow (where we nudge unconditionally).
"""

import math

_INF = math.inf
# below this magnitude the significand-width argument breaks down (subnormals)
_UNDERFLOW_GUARD = 1e-290


def _sig_width(x):
    # number of significant bits in |x|'s significand, x finite nonzero
    m, _ = math.frexp(x)
    sig = int(m * 9007199254740992.0)  # 2**53
    return 53 - ((sig & -sig).bit_length() - 1)


def next_down(x):
    return math.nextafter(x, -_INF)


def next_up(x):
    return math.nextafter(x, _INF)


def add_down(a, b):
    s = a + b
    if math.isinf(s):
        # -inf is a sound lower bound; +inf means the true sum exceeds
        # the largest finite float, so step back to it
        return s if s < 0 else next_down(s)
    t = s - a
    err = (a - (s - t)) + (b - t)
    return next_down(s) if err < 0 else s


def add_up(a, b):
    s = a + b
    if math.isinf(s):
        return s if s > 0 else next_up(s)
    t = s - a
    err = (a - (s - t)) + (b - t)
    return next_up(s) if err > 0 else s


def sub_down(a, b):
    return add_down(a, -b)


def sub_up(a, b):
    return add_up(a, -b)


def _mul_exact(a, b, p):
    if abs(p) < _UNDERFLOW_GUARD:
        return p == 0.0 and (a == 0.0 or b == 0.0)
    return _sig_width(a) + _sig_width(b) <= 53


def mul_down(a, b):
    p = a * b
    if p != p:  # 0 * inf in endpoint products: treat as 0
        return 0.0 if (a == 0.0 or b == 0.0) else p
    if math.isinf(p):
        return p if p < 0 else next_down(p)
    if a == 0.0 or b == 0.0:
        return 0.0
    return p if _mul_exact(a, b, p) else next_down(p)


def mul_up(a, b):
    p = a * b
    if p != p:
        return 0.0 if (a == 0.0 or b == 0.0) else p
    if math.isinf(p):
        return p if p > 0 else next_up(p)
    if a == 0.0 or b == 0.0:
        return 0.0
    return p if _mul_exact(a, b, p) else next_up(p)


def _div_exact(a, b, q):
    if abs(q) < _UNDERFLOW_GUARD and q != 0.0:
        return False
    return _sig_width(q) + _sig_width(b) <= 53 and q * b == a


def div_down(a, b):
    q = a / b
    if math.isinf(b):
        return q  # a/inf: 0 of the correct sign is a sound closed bound
    if math.isinf(q):
        return q if q < 0 else next_down(q)
    if a == 0.0:
        return 0.0
    return q if _div_exact(a, b, q) else next_down(q)


def div_up(a, b):
    q = a / b
    if math.isinf(b):
        return q
    if math.isinf(q):
        return q if q > 0 else next_up(q)
    if a == 0.0:
        return 0.0
    return q if _div_exact(a, b, q) else next_up(q)


def pow_down(x, k):
    """Lower bound of x**k for x >= 0, integer k >= 1, by a rounded-down
    square-and-multiply chain (every intermediate rounded down)."""
    acc = None
    base = x
    while k:
        if k & 1:
            acc = base if acc is None else mul_down(acc, base)
        k >>= 1
        if k:
            base = mul_down(base, base)
    return acc


def pow_up(x, k):
    """Upper bound of x**k for x >= 0, integer k >= 1."""
    acc = None
    base = x
    while k:
        if k & 1:
            acc = base if acc is None else mul_up(acc, base)
        k >>= 1
        if k:
            base = mul_up(base, base)
    return acc


# libm exp is faithfully rounded (< 1 ulp error) on every platform we
# target; two nextafter steps absorb that plus the directed-bound gap.

def exp_down(x):
    v = math.exp(x) if x < 709.0 else _INF
    if math.isinf(v):
        return next_down(v) if v > 0 else v
    return next_down(next_down(v))


def exp_up(x):
    v = math.exp(x) if x < 709.0 else _INF
    if math.isinf(v):
        return v
    return next_up(next_up(v))
