"""Explicit enumerations and finite stand-ins for the choice principles.

An Enumeration packages a total forward map from indices and a partial
back map from items.  Composite enumerations (pairs, finite unions) are
driven by the diagonal pairing bijection from the naturals module, so
injectivity of the pieces lifts to injectivity of the whole.

The choice constructions are deliberately deterministic: "choose" always
means "first in carrier order", which makes every derived well-ordering
and maximal chain reproducible.
"""

from __future__ import annotations

from . import dyadic as dy
from .errors import (
    EmptyBlock,
    EmptyCarrier,
    NonTotalMap,
    NotANatural,
    NotOrdering,
)
from .naturals import pair, unpair
from .relations import Carrier, Relation, classify


class Enumeration:
    """A countability witness: forward is total, back partial.

    back raises LookupError on items outside the enumerated range (or, for
    search-based enumerations, outside the searched prefix).
    """

    __slots__ = ("_forward", "_back")

    def __init__(self, forward, back):
        self._forward = forward
        self._back = back

    def forward(self, n: int):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise NotANatural(f"index must be a natural number, got {n!r}")
        return self._forward(n)

    def back(self, item) -> int:
        return self._back(item)


def enum_dyadics() -> Enumeration:
    """Every nonnegative binary fraction, indexed through the pairing map.

    forward(n) decodes n to (m, u) and builds m/2^u; distinct codes can
    collide on one value (2/2^1 and 1/2^0 are both 1), so forward is a
    surjection rather than a bijection.  back returns the index of the
    canonical form, making back a right inverse of forward: for every
    value d, forward(back(d)) = d, and back(forward(n)) = n exactly when
    (m, u) was already canonical.
    """

    def forward(n):
        m, u = unpair(n)
        return dy.make(m, u)

    def back(d):
        if not isinstance(d, dy.Dyadic) or d.sign < 0:
            raise LookupError(f"not a nonnegative dyadic: {d!r}")
        return pair(d.man, d.exp)

    return Enumeration(forward, back)


def enum_finite_subsets(base: Enumeration) -> Enumeration:
    """Finite sets of base items via bitmask indices.

    Index n maps to the set of base items at the positions of n's set
    bits; 0 maps to the empty set.  Injective whenever base is.
    """

    def forward(n):
        items = []
        i = 0
        while n:
            if n & 1:
                items.append(base.forward(i))
            n >>= 1
            i += 1
        return frozenset(items)

    def back(items):
        mask = 0
        for item in items:
            mask |= 1 << base.back(item)
        return mask

    return Enumeration(forward, back)


def enum_product(left: Enumeration, right: Enumeration) -> Enumeration:
    """Pairs of enumerated items, diagonally indexed."""

    def forward(n):
        i, j = unpair(n)
        return left.forward(i), right.forward(j)

    def back(item):
        x, y = item
        return pair(left.back(x), right.back(y))

    return Enumeration(forward, back)


def enum_union(members, search_limit: int = 10_000) -> Enumeration:
    """Union of finitely many enumerations by diagonal traversal.

    forward(n) decodes n to (which member, inner index).  Members may
    overlap, so forward need not be injective; back injectivizes by
    first hit, scanning indices up to search_limit.
    """
    members = list(members)
    if not members:
        raise EmptyBlock("union of no enumerations")

    def forward(n):
        i, j = unpair(n)
        return members[i % len(members)].forward(j)

    def back(item):
        for n in range(search_limit):
            if forward(n) == item:
                return n
        raise LookupError(f"{item!r} not found within {search_limit} indices")

    return Enumeration(forward, back)


def choice_function(carrier: Carrier, blocks):
    """One representative per block: the earliest member in carrier order."""
    chosen = {}
    for block in blocks:
        block = frozenset(block)
        for atom in block:
            carrier.index(atom)
        picks = [a for a in carrier if a in block]
        if not picks:
            raise EmptyBlock("cannot choose from an empty block")
        chosen[block] = picks[0]
    return chosen


def _default_choice(carrier):
    def choose(block):
        for a in carrier:
            if a in block:
                return a
        raise EmptyBlock("cannot choose from an empty block")

    return choose


def well_order_finite(carrier: Carrier, choice=None) -> Relation:
    """Build a strict well-ordering by repeatedly choosing from what's left.

    choice may be a mapping from frozensets to atoms (as produced by
    choice_function) or None for the default first-in-carrier-order rule.
    """
    if choice is None:
        choose = _default_choice(carrier)
    elif callable(choice):
        choose = choice
    else:
        table = dict(choice)

        def choose(block):
            try:
                return table[block]
            except KeyError:
                raise NonTotalMap(
                    f"choice undefined on a block of size {len(block)}"
                ) from None

    remaining = set(carrier)
    ordered = []
    while remaining:
        picked = choose(frozenset(remaining))
        if picked not in remaining:
            raise NonTotalMap(f"choice returned {picked!r}, not in the block")
        ordered.append(picked)
        remaining.discard(picked)
    pairs = [
        (ordered[i], ordered[j])
        for i in range(len(ordered))
        for j in range(i + 1, len(ordered))
    ]
    return Relation.on(carrier, pairs)


def zorn_max_finite(r: Relation):
    """A weak maximum of a finite ordered carrier, by greedy chain growth.

    Mirrors the chain argument: extend a chain with the first atom that
    keeps it a chain until none exists, then take the final chain's
    largest element.  Maximality of the chain forces that element to be a
    weak maximum of the whole carrier.
    """
    carrier = r.carrier
    if len(carrier) == 0:
        raise EmptyCarrier("no atoms to maximize over")
    if not classify(r).ordering:
        raise NotOrdering("weak-maximum search needs an ordering")
    p = r.pairs

    def comparable(a, b):
        return a == b or (a, b) in p or (b, a) in p

    chain = []
    while True:
        extension = next(
            (
                z
                for z in carrier
                if z not in chain and all(comparable(z, c) for c in chain)
            ),
            None,
        )
        if extension is None:
            break
        chain.append(extension)
    top = next(
        x for x in chain if all(y == x or (y, x) in p for y in chain)
    )
    return top
