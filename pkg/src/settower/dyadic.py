"""Exact signed binary fractions m/2^u in canonical form.

Values are triples (sign, mantissa, exponent) denoting sign * m * 2^(-u).
Canonical form makes equality structural: the mantissa is odd unless the
exponent is already 0, and zero is the unique (0, 0, 0).  All arithmetic
is exact big-integer work on a common grid; nothing here rounds.
"""

from __future__ import annotations

from .errors import BadOrder, ExprSyntaxError, NotANatural

_SIGNS = (-1, 0, 1)


class Dyadic:
    __slots__ = ("_sign", "_man", "_exp")

    def __init__(self, sign: int, man: int, exp: int):
        # Private: use make() so canonical form is guaranteed.
        self._sign = sign
        self._man = man
        self._exp = exp

    @property
    def sign(self):
        return self._sign

    @property
    def man(self):
        return self._man

    @property
    def exp(self):
        return self._exp

    def __eq__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return (
            self._sign == other._sign
            and self._man == other._man
            and self._exp == other._exp
        )

    def __hash__(self):
        return hash((self._sign, self._man, self._exp))

    def __lt__(self, other):
        return compare(self, other) < 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        return mul(self, other)

    def __neg__(self):
        return neg(self)

    def __bool__(self):
        return self._sign != 0

    def __str__(self):
        if self._sign == 0:
            return "0"
        body = str(self._man) if self._exp == 0 else f"{self._man}/2^{self._exp}"
        return body if self._sign > 0 else "-" + body

    def __repr__(self):
        return f"Dyadic({self})"


def _nat(n, name):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise NotANatural(f"{name} must be a natural number, got {n!r}")
    return n


def make(man: int, exp: int, sign: int = 1) -> Dyadic:
    """Canonical representative of sign * man * 2^(-exp)."""
    _nat(man, "mantissa")
    _nat(exp, "exponent")
    if sign not in _SIGNS:
        raise ValueError(f"sign must be -1, 0, or 1, got {sign!r}")
    if man == 0 or sign == 0:
        return ZERO
    while man % 2 == 0 and exp > 0:
        man //= 2
        exp -= 1
    return Dyadic(sign, man, exp)


def _signed(num: int, exp: int) -> Dyadic:
    if num >= 0:
        return make(num, exp)
    return make(-num, exp, -1)


def _num(d: Dyadic) -> int:
    return d._sign * d._man


ZERO = Dyadic(0, 0, 0)
ONE = Dyadic(1, 1, 0)
HALF = Dyadic(1, 1, 1)


def compare(d: Dyadic, e: Dyadic) -> int:
    """-1, 0, or 1 as d is below, equal to, or above e.

    Cross-multiplication onto the common grid 2^(-(u+v)) decides without
    any rounding.
    """
    left = _num(d) << e._exp
    right = _num(e) << d._exp
    if left < right:
        return -1
    if left > right:
        return 1
    return 0


def add(d: Dyadic, e: Dyadic) -> Dyadic:
    return _signed((_num(d) << e._exp) + (_num(e) << d._exp), d._exp + e._exp)


def neg(d: Dyadic) -> Dyadic:
    if d._sign == 0:
        return d
    return Dyadic(-d._sign, d._man, d._exp)


def sub(d: Dyadic, e: Dyadic) -> Dyadic:
    return add(d, neg(e))


def mul(d: Dyadic, e: Dyadic) -> Dyadic:
    return _signed(_num(d) * _num(e), d._exp + e._exp)


def dy_pow(d: Dyadic, m: int) -> Dyadic:
    """d raised to a natural power, exactly."""
    _nat(m, "exponent")
    if m == 0:
        return ONE
    sign = 1 if (d._sign >= 0 or m % 2 == 0) else -1
    if d._sign == 0:
        return ZERO
    return make(d._man**m, d._exp * m, sign)


def dy_abs(d: Dyadic) -> Dyadic:
    return d if d._sign >= 0 else neg(d)


def dy_max(d: Dyadic, e: Dyadic) -> Dyadic:
    return e if compare(d, e) < 0 else d


def dy_min(d: Dyadic, e: Dyadic) -> Dyadic:
    return e if compare(d, e) > 0 else d


def between(d: Dyadic, e: Dyadic) -> Dyadic:
    """Deterministic strict witness of density.

    Both endpoints are placed on the grid 2^(-(u+v+1)), where their
    numerators come out even and at least 2 apart; the smallest admissible
    numerator is then one past d's, which is odd, so the result is already
    canonical on that grid.
    """
    if compare(d, e) >= 0:
        raise BadOrder(f"between needs d < e, got {d} >= {e}")
    grid = d._exp + e._exp + 1
    num_d = _num(d) << (e._exp + 1)
    return _signed(num_d + 1, grid)


def div_floor(a: Dyadic, b: Dyadic, p: int) -> Dyadic:
    """Largest multiple of 2^(-p) that is <= a/b.  Requires b > 0."""
    assert b._sign > 0
    return _signed((_num(a) << (b._exp + p)) // (b._man << a._exp), p)


def div_ceil(a: Dyadic, b: Dyadic, p: int) -> Dyadic:
    """Smallest multiple of 2^(-p) that is >= a/b.  Requires b > 0."""
    assert b._sign > 0
    return _signed(-((-_num(a) << (b._exp + p)) // (b._man << a._exp)), p)


def exact_div(d: Dyadic, e: Dyadic):
    """d/e when the quotient is itself a binary fraction, else None.

    That happens exactly when e's mantissa is a power of two (after
    canonicalization the only interesting case is exponent 0 with an even
    mantissa, e.g. 2 or 8).
    """
    if e._sign == 0:
        return None
    if e._man & (e._man - 1):
        return None
    j = e._man.bit_length() - 1
    # 1/e = sign_e * 2^(exp_e - j), folded into d on the common grid
    scaled = e._sign * (_num(d) << e._exp)
    return _signed(scaled, d._exp + j)


def from_int(k: int) -> Dyadic:
    if isinstance(k, bool) or not isinstance(k, int):
        raise NotANatural(f"expected an integer, got {k!r}")
    return _signed(k, 0)


def from_float(x: float) -> Dyadic:
    """Exact conversion; every finite binary float is a dyadic."""
    p, q = float(x).as_integer_ratio()
    return _signed(p, q.bit_length() - 1)


def parse_dyadic(text: str) -> Dyadic:
    """Parse an exact literal: integer, m/2^u, or a binary-fraction decimal.

    Decimals with no finite binary expansion (0.1, 2.3, ...) are rejected
    rather than rounded.
    """
    s = text.strip()
    body = s
    sign = 1
    if body.startswith(("+", "-")):
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    if body.isdigit():
        return make(int(body), 0, sign)
    if "/2^" in body:
        m_part, u_part = body.split("/2^", 1)
        if m_part.isdigit() and u_part.isdigit():
            return make(int(m_part), int(u_part), sign)
        raise ExprSyntaxError(f"malformed dyadic literal {text!r}", 0)
    if "." in body:
        int_part, _, frac_part = body.partition(".")
        if int_part.isdigit() and frac_part.isdigit():
            k = len(frac_part)
            n = int(int_part + frac_part)
            if n % 5**k:
                raise ExprSyntaxError(
                    f"{text!r} has no finite binary expansion", 0
                )
            return make(n // 5**k, k, sign)
    raise ExprSyntaxError(f"not a dyadic literal: {text!r}", 0)


def format_decimal(d: Dyadic) -> str:
    """Exact decimal rendering (always terminates for binary fractions)."""
    if d._sign == 0:
        return "0"
    scaled = d._man * 5**d._exp
    whole, frac = divmod(scaled, 10**d._exp)
    out = str(whole)
    if frac:
        out += "." + str(frac).zfill(d._exp).rstrip("0")
    return out if d._sign > 0 else "-" + out
