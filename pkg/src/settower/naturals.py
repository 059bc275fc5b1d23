"""Arbitrary-precision natural numbers with recursion-equation semantics.

A natural is a plain Python ``int`` restricted to non-negative values; the
module functions validate that restriction at the boundary and raise
:class:`~settower.errors.NotANatural` otherwise.  Arithmetic is performed by
the platform big integers for speed.  The defining recursion equations

    m + 0 = m           m + s(n) = s(m + n)
    m * 0 = 0           m * s(n) = (m * n) + m
    m ^ 0 = 1           m ^ s(n) = (m ^ n) * m

are not the implementation; they are the oracle the test suite replays
against these functions.  Two-argument recursions are obtained by currying
the first argument into the step function of :func:`recurse`.
"""

from __future__ import annotations

import math
import threading
from typing import Callable, TypeVar

from .errors import NotANatural, Underflow

T = TypeVar("T")


def _check(n, name="value"):
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise NotANatural(f"{name} must be a non-negative integer, got {n!r}")
    return n


def successor(n: int) -> int:
    """sigma(n) = n + 1."""
    return _check(n) + 1


def add(m: int, n: int) -> int:
    return _check(m) + _check(n)


def mul(m: int, n: int) -> int:
    return _check(m) * _check(n)


def pow(m: int, n: int) -> int:  # noqa: A001 - mirrors the operation name
    return _check(m, "base") ** _check(n, "exponent")


def sub_partial(m: int, n: int) -> int:
    """The unique p with m + p = n, defined only when m <= n."""
    _check(m)
    _check(n)
    if m > n:
        raise Underflow(f"sub_partial({m}, {n}): {m} > {n}")
    return n - m


def triangular(m: int) -> int:
    """s(m), the m-th triangular number: 2*s(m) = m*(m+1) exactly."""
    _check(m)
    return m * (m + 1) // 2


def pair(p: int, q: int) -> int:
    """The pairing bijection N^2 -> N, pair(p, q) = s(p + q) + q."""
    _check(p)
    _check(q)
    return triangular(p + q) + q


def unpair(r: int) -> tuple[int, int]:
    """Inverse of :func:`pair`.

    Finds the unique m with s(m) <= r < s(m+1); then q = r - s(m) and
    p = m - q.  The search is closed-form via an exact integer square root,
    with a guard loop in case the root lands one off.
    """
    _check(r)
    m = (math.isqrt(8 * r + 1) - 1) // 2
    while triangular(m + 1) <= r:
        m += 1
    while triangular(m) > r:
        m -= 1
    q = r - triangular(m)
    p = m - q
    return p, q


class _Recursion:
    """Lazy, memoized realization of a recursively defined sequence.

    g(0) = seed and g(n+1) = step(g(n)).  Values are produced on demand and
    cached, so the step function runs at most once per index no matter how
    often or from how many threads the sequence is queried.
    """

    __slots__ = ("_step", "_memo", "_lock")

    def __init__(self, seed: T, step: Callable[[T], T]):
        self._step = step
        self._memo = [seed]
        self._lock = threading.Lock()

    def __call__(self, n: int) -> T:
        _check(n, "index")
        if n < len(self._memo):
            return self._memo[n]
        with self._lock:
            while len(self._memo) <= n:
                self._memo.append(self._step(self._memo[-1]))
            return self._memo[n]

    def evaluations(self) -> int:
        """How many times the step function has run so far."""
        return len(self._memo) - 1


def recurse(seed: T, step: Callable[[T], T]) -> Callable[[int], T]:
    """Unique g with g(0) = seed and g(s(n)) = step(g(n))."""
    return _Recursion(seed, step)


def parse_nat(text: str) -> int:
    """Decimal string to natural; the inverse of ``str``."""
    stripped = text.strip()
    if not stripped.isdigit():
        raise NotANatural(f"not a decimal natural: {text!r}")
    return int(stripped)
