"""Exact nonnegative reals as interval-refinement oracles, and signed reals
as difference pairs.

A CutReal answers precision queries: query(n) returns exact dyadic bounds
(lo, hi) with lo >= 0, successive intervals nested, and hi - lo <= 2^(-n).
The lower endpoints generate a cut (a union of lower segments of binary
fractions); the upper endpoint is what makes comparison decidable up to a
stated tolerance.  Values that happen to be binary fractions carry an exact
tag so arithmetic can stay exact along dyadic-only paths.

Guard-bit policy (normative for interoperability):
  * add queries its operands at n+1 and sums endpoints;
  * mul queries at n+t where t is the smallest natural with
    hi_x(0) + hi_y(0) <= 2^t, and multiplies endpoints;
  * inverse divides 1 by the swapped endpoints with directed rounding to
    n+2 fractional bits, querying the operand at max(n0, n + 2e + 1) where
    2^(-e) lower-bounds the witness interval's lo.

Signed values are pairs (pos, neg) standing for pos - neg; canonicalize
shifts the pair so the smaller component is within 2^(-n) of zero at every
queried precision.
"""

from __future__ import annotations

import enum
import threading

from . import dyadic as dy
from .errors import EmptyList, NegativeInput, NotANatural, NotBoundedAwayFromZero


def _nat(n, name="precision"):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise NotANatural(f"{name} must be a natural number, got {n!r}")
    return n


class CutReal:
    """Nonnegative real presented as a nested dyadic interval oracle.

    The oracle function is evaluated at most once per precision; results
    are memoized under a lock, so sharing a value across threads never
    changes what any caller observes.
    """

    __slots__ = ("_fn", "_tag", "_memo", "_lock")

    def __init__(self, fn, tag=None):
        self._fn = fn
        self._tag = tag
        self._memo = {}
        self._lock = threading.Lock()

    @property
    def tag(self):
        """The exact dyadic value, when one is known."""
        return self._tag

    def query(self, n: int):
        _nat(n)
        with self._lock:
            got = self._memo.get(n)
            if got is None:
                got = self._fn(n)
                self._memo[n] = got
            return got

    def lo(self, n: int) -> dy.Dyadic:
        return self.query(n)[0]

    def hi(self, n: int) -> dy.Dyadic:
        return self.query(n)[1]

    def __repr__(self):
        if self._tag is not None:
            return f"CutReal(= {self._tag})"
        return f"CutReal({format_interval(self, 10)})"


def from_dyadic(d: dy.Dyadic) -> CutReal:
    """Embed a binary fraction: intervals [d - 2^(-n-1) clamped at 0, d]."""
    if d.sign < 0:
        raise NegativeInput(f"cut embedding needs d >= 0, got {d}")

    def fn(n):
        lo = dy.sub(d, dy.make(1, n + 1))
        if lo.sign < 0:
            lo = dy.ZERO
        return lo, d

    return CutReal(fn, tag=d)


ZERO_CUT = from_dyadic(dy.ZERO)
ONE_CUT = from_dyadic(dy.ONE)


def add(x: CutReal, y: CutReal) -> CutReal:
    def fn(n):
        lx, hx = x.query(n + 1)
        ly, hy = y.query(n + 1)
        return dy.add(lx, ly), dy.add(hx, hy)

    tag = None
    if x.tag is not None and y.tag is not None:
        tag = dy.add(x.tag, y.tag)
    return CutReal(fn, tag=tag)


def _mul_guard(x: CutReal, y: CutReal) -> int:
    # Smallest t >= 0 with hi_x(0) + hi_y(0) <= 2^t: the product of widths
    # then stays within 2^(-n) after querying both factors at n + t.
    s = dy.add(x.hi(0), y.hi(0))
    if s.sign <= 0:
        return 0
    return max(0, (s.man - 1).bit_length() - s.exp)


def mul(x: CutReal, y: CutReal) -> CutReal:
    guard = []

    def fn(n):
        if not guard:
            guard.append(_mul_guard(x, y))
        k = n + guard[0]
        lx, hx = x.query(k)
        ly, hy = y.query(k)
        return dy.mul(lx, ly), dy.mul(hx, hy)

    tag = None
    if x.tag is not None and y.tag is not None:
        tag = dy.mul(x.tag, y.tag)
    return CutReal(fn, tag=tag)


class Comparison(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INDISTINGUISHABLE = "indistinguishable"


def compare_eps(x: CutReal, y: CutReal, n: int) -> Comparison:
    """Order decision at precision n.

    LESS means the intervals at n are disjoint with x below y, which
    certifies x < y; INDISTINGUISHABLE certifies |x - y| <= 2^(-n+1).
    """
    lx, hx = x.query(n)
    ly, hy = y.query(n)
    if dy.compare(hx, ly) < 0:
        return Comparison.LESS
    if dy.compare(hy, lx) < 0:
        return Comparison.GREATER
    return Comparison.INDISTINGUISHABLE


def sup_finite(xs) -> CutReal:
    """Least upper bound of finitely many values: endpoint-wise maxima."""
    xs = list(xs)
    if not xs:
        raise EmptyList("sup_finite needs at least one value")

    def fn(n):
        pairs = [x.query(n) for x in xs]
        lo = pairs[0][0]
        hi = pairs[0][1]
        for plo, phi in pairs[1:]:
            lo = dy.dy_max(lo, plo)
            hi = dy.dy_max(hi, phi)
        return lo, hi

    tag = None
    tags = [x.tag for x in xs]
    if all(t is not None for t in tags):
        tag = tags[0]
        for t in tags[1:]:
            tag = dy.dy_max(tag, t)
    return CutReal(fn, tag=tag)


def inverse(x: CutReal, n0: int) -> CutReal:
    """Reciprocal of a value bounded away from zero.

    The caller vouches for positivity by naming a precision n0 whose lower
    endpoint is strictly positive; anything weaker would force an unbounded
    search.  Exact when the value is a power of two; otherwise directed
    division keeps lo rounded down and hi rounded up.
    """
    _nat(n0, "positivity witness")
    lo0 = x.lo(n0)
    if lo0.sign <= 0:
        raise NotBoundedAwayFromZero(
            f"lower endpoint at precision {n0} is {lo0}, not positive"
        )

    d = x.tag
    if d is not None:
        flipped = dy.exact_div(dy.ONE, d)
        if flipped is not None:
            return from_dyadic(flipped)

        def fn_tagged(n):
            p = n + 1
            return dy.div_floor(dy.ONE, d, p), dy.div_ceil(dy.ONE, d, p)

        return CutReal(fn_tagged)

    # 2^(-e) <= lo0, so every deeper query keeps the value >= 2^(-e).
    e = max(0, lo0.exp - lo0.man.bit_length() + 1)

    def fn(n):
        k = max(n0, n + 2 * e + 1)
        lk, hk = x.query(k)
        p = n + 2
        return dy.div_floor(dy.ONE, hk, p), dy.div_ceil(dy.ONE, lk, p)

    return CutReal(fn)


def pow_nat(x: CutReal, m: int) -> CutReal:
    """Iterated product; exponent 0 gives 1."""
    _nat(m, "exponent")
    acc = ONE_CUT
    for _ in range(m):
        acc = mul(acc, x)
    return acc


class Real:
    """Signed real as a formal difference pos - neg of two cuts."""

    __slots__ = ("_pos", "_neg")

    def __init__(self, pos: CutReal, neg: CutReal):
        self._pos = pos
        self._neg = neg

    @property
    def pos(self):
        return self._pos

    @property
    def neg(self):
        return self._neg

    def __repr__(self):
        return f"Real({format_real_interval(self, 10)})"


def real_from_cut(c: CutReal) -> Real:
    return Real(c, ZERO_CUT)


def real_from_dyadic(d: dy.Dyadic) -> Real:
    if d.sign < 0:
        return Real(ZERO_CUT, from_dyadic(dy.neg(d)))
    return Real(from_dyadic(d), ZERO_CUT)


REAL_ZERO = real_from_dyadic(dy.ZERO)


def real_add(x: Real, y: Real) -> Real:
    return Real(add(x.pos, y.pos), add(x.neg, y.neg))


def real_neg(x: Real) -> Real:
    return Real(x.neg, x.pos)


def real_sub(x: Real, y: Real) -> Real:
    return real_add(x, real_neg(y))


def real_mul(x: Real, y: Real) -> Real:
    return Real(
        add(mul(x.pos, y.pos), mul(x.neg, y.neg)),
        add(mul(x.pos, y.neg), mul(x.neg, y.pos)),
    )


def real_abs(x: Real) -> CutReal:
    """|pos - neg| as a single cut."""

    def fn(n):
        lp, hp = x.pos.query(n + 1)
        ln, hn = x.neg.query(n + 1)
        lo = dy.dy_max(dy.ZERO, dy.dy_max(dy.sub(lp, hn), dy.sub(ln, hp)))
        hi = dy.dy_max(dy.sub(hp, ln), dy.sub(hn, lp))
        return lo, hi

    tag = None
    if x.pos.tag is not None and x.neg.tag is not None:
        tag = dy.dy_abs(dy.sub(x.pos.tag, x.neg.tag))
    return CutReal(fn, tag=tag)


def _posdiff(a: CutReal, b: CutReal) -> CutReal:
    # The nonnegative part of a - b, as a cut.
    def fn(n):
        la, ha = a.query(n + 1)
        lb, hb = b.query(n + 1)
        lo = dy.dy_max(dy.ZERO, dy.sub(la, hb))
        hi = dy.dy_max(dy.ZERO, dy.sub(ha, lb))
        return lo, hi

    return CutReal(fn)


def canonicalize(x: Real) -> Real:
    """Equivalent pair whose smaller component hugs zero.

    At every precision at most one component can have a positive lower
    endpoint, so the other stays within the interval [0, 2^(-n)]: the
    finite-precision reading of reducing ⟨pos, neg⟩ to ⟨pos - neg, 0⟩.
    """
    if x.pos.tag is not None and x.neg.tag is not None:
        return real_from_dyadic(dy.sub(x.pos.tag, x.neg.tag))
    return Real(_posdiff(x.pos, x.neg), _posdiff(x.neg, x.pos))


def real_compare_eps(x: Real, y: Real, n: int) -> Comparison:
    """Compare pos_x + neg_y against pos_y + neg_x at precision n."""
    return compare_eps(add(x.pos, y.neg), add(y.pos, x.neg), n)


def real_interval(x: Real, n: int):
    """Signed dyadic bounds on pos - neg at precision n (width <= 2^(-n+1))."""
    lp, hp = x.pos.query(n)
    ln, hn = x.neg.query(n)
    return dy.sub(lp, hn), dy.sub(hp, ln)


def format_interval(c: CutReal, n: int) -> str:
    lo, hi = c.query(n)
    return f"[{lo}, {hi}]@{n}"


def format_real_interval(x: Real, n: int) -> str:
    lo, hi = real_interval(x, n)
    return f"[{lo}, {hi}]@{n}"


def format_approx(c: CutReal, n: int) -> str:
    """Midpoint rendering with an explicit error radius."""
    lo, hi = c.query(n)
    mid = dy.mul(dy.add(lo, hi), dy.HALF)
    return f"≈ {dy.format_decimal(mid)} ± 2^-{n}"
