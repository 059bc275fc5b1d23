"""Finite relational spaces and their order-theoretic toolkit.

A Relation is a set of atom pairs between two explicit carriers.  Carriers
keep their input order so reports, partitions, and constructed orderings
come out deterministic.  Everything here is definition-driven: each
operation computes the defining set condition directly, and the test suite
re-derives the same conditions with independent brute force.

Convention for products: compose(V, U) is the relation VU whose pairs are
(x, z) with (x, y) in U and (y, z) in V for some y.  V and U read right to
left, as with function composition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, fields

from .errors import (
    BadExponent,
    CarrierMismatch,
    EmptyFamily,
    NotEquivalence,
    NotOrdering,
    NotPreordering,
    NotWellOrdering,
    NonTotalMap,
    ParseError,
    UnknownAtom,
)

# Exhaustive subset checks stop being feasible past 2^12 subsets; larger
# carriers fall back to a deterministic sample (documented, seeded).
MIN_PROPERTY_EXHAUSTIVE_LIMIT = 12
_SAMPLE_SUBSETS = 4096
_SAMPLE_SEED = 0x5E77


class Carrier:
    """Ordered finite list of distinct opaque atoms."""

    __slots__ = ("_atoms", "_index")

    def __init__(self, atoms):
        atoms = tuple(atoms)
        index = {}
        for i, a in enumerate(atoms):
            if not isinstance(a, str):
                raise TypeError(f"atoms must be strings, got {type(a).__name__}")
            if a in index:
                raise ValueError(f"duplicate atom {a!r} in carrier")
            index[a] = i
        self._atoms = atoms
        self._index = index

    @property
    def atoms(self):
        return self._atoms

    def index(self, atom):
        try:
            return self._index[atom]
        except KeyError:
            raise UnknownAtom(f"atom {atom!r} not in carrier") from None

    def __contains__(self, atom):
        return atom in self._index

    def __iter__(self):
        return iter(self._atoms)

    def __len__(self):
        return len(self._atoms)

    def __eq__(self, other):
        if not isinstance(other, Carrier):
            return NotImplemented
        return self._atoms == other._atoms

    def __hash__(self):
        return hash(self._atoms)

    def __repr__(self):
        return f"Carrier({list(self._atoms)!r})"


class Relation:
    """Finite relation with explicit source and target carriers."""

    __slots__ = ("_source", "_target", "_pairs")

    def __init__(self, source: Carrier, target: Carrier, pairs):
        self._source = source
        self._target = target
        clean = set()
        for x, y in pairs:
            if x not in source:
                raise UnknownAtom(f"pair source {x!r} not in carrier")
            if y not in target:
                raise UnknownAtom(f"pair target {y!r} not in carrier")
            clean.add((x, y))
        self._pairs = frozenset(clean)

    @staticmethod
    def on(carrier: Carrier, pairs) -> "Relation":
        """Endorelation constructor."""
        return Relation(carrier, carrier, pairs)

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def pairs(self):
        return self._pairs

    @property
    def carrier(self):
        """The shared carrier of an endorelation."""
        if self._source != self._target:
            raise CarrierMismatch("relation has distinct source and target")
        return self._source

    def __contains__(self, pair):
        return pair in self._pairs

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return (
            self._source == other._source
            and self._target == other._target
            and self._pairs == other._pairs
        )

    def __hash__(self):
        return hash((self._source, self._target, self._pairs))

    def __repr__(self):
        shown = sorted(self._pairs)
        return f"Relation({list(self._source.atoms)!r}, {shown!r})"


def diagonal(carrier: Carrier) -> Relation:
    return Relation.on(carrier, ((a, a) for a in carrier))


@dataclass(frozen=True)
class PropertyReport:
    reflexive: bool
    antireflexive: bool
    symmetric: bool
    antisymmetric: bool
    transitive: bool
    connective: bool
    directive: bool
    pre_ordering: bool
    ordering: bool
    ordering_lt: bool
    ordering_le: bool
    direction: bool
    equivalence: bool
    total_ordering: bool
    well_ordering: bool

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class Extremal:
    minima: frozenset
    maxima: frozenset
    weak_minima: frozenset
    weak_maxima: frozenset
    upper_bounds: frozenset
    lower_bounds: frozenset
    suprema: frozenset
    infima: frozenset


@dataclass(frozen=True)
class IndependenceReport:
    upwards: bool
    downwards: bool


def _require_endo(r: Relation) -> Carrier:
    if r.source != r.target:
        raise CarrierMismatch("operation requires source = target")
    return r.source


def compose(v: Relation, u: Relation) -> Relation:
    """The product VU: u runs first, v second."""
    if u.target != v.source:
        raise CarrierMismatch("compose needs U.target = V.source")
    by_mid = {}
    for x, y in u.pairs:
        by_mid.setdefault(y, []).append(x)
    out = set()
    for y, z in v.pairs:
        for x in by_mid.get(y, ()):
            out.add((x, z))
    return Relation(u.source, v.target, out)


def inverse(r: Relation) -> Relation:
    return Relation(r.target, r.source, ((y, x) for x, y in r.pairs))


def restrict(r: Relation, atoms) -> Relation:
    carrier = _require_endo(r)
    keep = set()
    for a in atoms:
        carrier.index(a)
        keep.add(a)
    sub = Carrier(a for a in carrier if a in keep)
    return Relation.on(sub, ((x, y) for x, y in r.pairs if x in keep and y in keep))


def power(r: Relation, m: int) -> Relation:
    _require_endo(r)
    if not isinstance(m, int) or m < 1:
        raise BadExponent(f"relation power needs m >= 1, got {m!r}")
    acc = r
    for _ in range(m - 1):
        acc = compose(acc, r)
    return acc


def image(r: Relation, atoms) -> frozenset:
    """R[A]: everything reachable from A in one step."""
    wanted = set()
    for a in atoms:
        r.source.index(a)
        wanted.add(a)
    return frozenset(y for x, y in r.pairs if x in wanted)


def point_image(r: Relation, atom) -> frozenset:
    """R{x}."""
    r.source.index(atom)
    return frozenset(y for x, y in r.pairs if x == atom)


def co_image(r: Relation, atoms) -> frozenset:
    """R<A>: targets reached from every member of A; the whole target
    carrier when A is empty."""
    wanted = []
    for a in atoms:
        r.source.index(a)
        wanted.append(a)
    if not wanted:
        return frozenset(r.target)
    acc = point_image(r, wanted[0])
    for a in wanted[1:]:
        acc &= point_image(r, a)
    return acc


def _has_minimum(pairs, subset) -> bool:
    return any(
        all(y == x or (x, y) in pairs for y in subset)
        for x in subset
    )


def _minimum_property(pairs, atoms) -> bool:
    """Every nonempty subset has a minimum under the restricted relation.

    Exhaustive up to 2^MIN_PROPERTY_EXHAUSTIVE_LIMIT subsets; beyond that a
    fixed-seed sample of subsets plus all singletons and pairs is checked,
    so the answer stays deterministic (though only a sound approximation
    from above: a reported False is always a counterexample).
    """
    n = len(atoms)
    if n <= MIN_PROPERTY_EXHAUSTIVE_LIMIT:
        for mask in range(1, 1 << n):
            subset = [atoms[i] for i in range(n) if mask >> i & 1]
            if not _has_minimum(pairs, subset):
                return False
        return True
    for i in range(n):
        for j in range(i + 1, n):
            if not _has_minimum(pairs, (atoms[i], atoms[j])):
                return False
    rng = random.Random(_SAMPLE_SEED)
    for _ in range(_SAMPLE_SUBSETS):
        k = rng.randint(1, n)
        subset = rng.sample(atoms, k)
        if not _has_minimum(pairs, subset):
            return False
    return True


def classify(r: Relation) -> PropertyReport:
    carrier = _require_endo(r)
    atoms = carrier.atoms
    p = r.pairs

    reflexive = all((a, a) in p for a in atoms)
    antireflexive = not any((a, a) in p for a in atoms)
    symmetric = all((y, x) in p for x, y in p)
    antisymmetric = all(x == y or (y, x) not in p for x, y in p)
    succ = {}
    for x, y in p:
        succ.setdefault(x, set()).add(y)
    transitive = all(
        z in succ.get(x, ())
        for x, ys in succ.items()
        for y in ys
        for z in succ.get(y, ())
    )
    connective = all(
        x == y or (x, y) in p or (y, x) in p for x in atoms for y in atoms
    )
    # X x X = R^-1 R: every two points have a common successor.
    directive = all(
        any((x, y) in p and (z, y) in p for y in atoms)
        for x in atoms
        for z in atoms
    )

    ordering = transitive and antisymmetric
    well = ordering and _minimum_property(p, atoms)
    return PropertyReport(
        reflexive=reflexive,
        antireflexive=antireflexive,
        symmetric=symmetric,
        antisymmetric=antisymmetric,
        transitive=transitive,
        connective=connective,
        directive=directive,
        pre_ordering=transitive,
        ordering=ordering,
        ordering_lt=antireflexive and transitive,
        ordering_le=reflexive and antisymmetric and transitive,
        direction=reflexive and transitive and directive,
        equivalence=reflexive and symmetric and transitive,
        total_ordering=ordering and connective,
        well_ordering=well,
    )


def equivalence_partition(r: Relation):
    """Blocks of the partition induced by an equivalence relation, each a
    tuple in carrier order, listed by first representative."""
    carrier = _require_endo(r)
    if not classify(r).equivalence:
        raise NotEquivalence("relation is not an equivalence")
    seen = set()
    blocks = []
    for a in carrier:
        if a in seen:
            continue
        block = tuple(b for b in carrier if (a, b) in r.pairs)
        seen.update(block)
        blocks.append(block)
    return blocks


def preorder_closure(r: Relation) -> Relation:
    """Smallest transitive relation containing r (union of all powers)."""
    carrier = _require_endo(r)
    idx = {a: i for i, a in enumerate(carrier.atoms)}
    rows = [0] * len(carrier)
    for x, y in r.pairs:
        rows[idx[x]] |= 1 << idx[y]
    changed = True
    while changed:
        changed = False
        for i in range(len(rows)):
            acc = rows[i]
            scan = acc
            while scan:
                j = (scan & -scan).bit_length() - 1
                acc |= rows[j]
                scan &= scan - 1
            if acc != rows[i]:
                rows[i] = acc
                changed = True
    atoms = carrier.atoms
    out = set()
    for i, row in enumerate(rows):
        while row:
            j = (row & -row).bit_length() - 1
            out.add((atoms[i], atoms[j]))
            row &= row - 1
    return Relation.on(carrier, out)


def antisymmetrize(r: Relation):
    """Quotient a transitive relation by its two-way pairs.

    Returns (blocks, s) where blocks partition the carrier into classes
    (mutually related pairs plus the diagonal) and s is the induced
    relation on class representatives; s is always an ordering, and it is
    reflexive whenever r is.
    """
    carrier = _require_endo(r)
    if not classify(r).pre_ordering:
        raise NotPreordering("antisymmetrize needs a transitive relation")
    p = r.pairs
    blocks = []
    rep_of = {}
    for a in carrier:
        if a in rep_of:
            continue
        block = tuple(
            b for b in carrier
            if b == a or ((a, b) in p and (b, a) in p)
        )
        for b in block:
            rep_of[b] = a
        blocks.append(block)
    reps = Carrier(block[0] for block in blocks)
    s_pairs = {(rep_of[x], rep_of[y]) for x, y in p}
    return blocks, Relation.on(reps, s_pairs)


def _minima_of(pairs, members) -> frozenset:
    return frozenset(
        x for x in members
        if all(y == x or (x, y) in pairs for y in members)
    )


def _maxima_of(pairs, members) -> frozenset:
    return frozenset(
        x for x in members
        if all(y == x or (y, x) in pairs for y in members)
    )


def extremal(r: Relation, atoms) -> Extremal:
    carrier = _require_endo(r)
    a_set = []
    for a in atoms:
        carrier.index(a)
        if a not in a_set:
            a_set.append(a)
    p = r.pairs

    upper = frozenset(
        x for x in carrier
        if all(y == x or (y, x) in p for y in a_set)
    )
    lower = frozenset(
        x for x in carrier
        if all(y == x or (x, y) in p for y in a_set)
    )
    return Extremal(
        minima=_minima_of(p, a_set),
        maxima=_maxima_of(p, a_set),
        weak_minima=frozenset(
            x for x in a_set
            if all((x, y) in p for y in a_set if (y, x) in p)
        ),
        weak_maxima=frozenset(
            x for x in a_set
            if all((y, x) in p for y in a_set if (x, y) in p)
        ),
        upper_bounds=upper,
        lower_bounds=lower,
        suprema=_minima_of(p, upper),
        infima=_maxima_of(p, lower),
    )


def lub_property_check(r: Relation) -> bool:
    """Whether every nonempty bounded-above subset has a supremum.

    The dual statement (bounded-below subsets have infima) is provably
    equivalent for transitive relations; both directions are computed and
    cross-checked here before one answer is returned.
    """
    carrier = _require_endo(r)
    if not classify(r).pre_ordering:
        raise NotPreordering("least-upper-bound check needs a transitive relation")
    atoms = carrier.atoms
    n = len(atoms)
    if n > MIN_PROPERTY_EXHAUSTIVE_LIMIT:
        raise CarrierMismatch(
            f"exhaustive bound check limited to {MIN_PROPERTY_EXHAUSTIVE_LIMIT} atoms"
        )
    lub = True
    glb = True
    for mask in range(1, 1 << n):
        subset = [atoms[i] for i in range(n) if mask >> i & 1]
        ext = extremal(r, subset)
        if ext.upper_bounds and not ext.suprema:
            lub = False
        if ext.lower_bounds and not ext.infima:
            glb = False
    assert lub == glb, "least-upper-bound and greatest-lower-bound disagree"
    return lub


def order_variants(r: Relation):
    """Strict and weak forms (R minus diagonal, R plus diagonal) of an
    ordering.  Extremal elements are invariant across the three."""
    carrier = _require_endo(r)
    if not classify(r).ordering:
        raise NotOrdering("order_variants needs an ordering")
    delta = {(a, a) for a in carrier}
    lt = Relation.on(carrier, r.pairs - delta)
    le = Relation.on(carrier, set(r.pairs) | delta)
    return lt, le


def pullback(r: Relation, domain: Carrier, mapping) -> Relation:
    """R_f: pairs whose images under f are related by r."""
    _require_endo(r)
    f = dict(mapping)
    for x in domain:
        if x not in f:
            raise NonTotalMap(f"map undefined on {x!r}")
        if f[x] not in r.source:
            raise NonTotalMap(f"map sends {x!r} outside the relation's carrier")
    return Relation.on(
        domain,
        ((x, z) for x in domain for z in domain if (f[x], f[z]) in r.pairs),
    )


def check_independence(system) -> IndependenceReport:
    """Upwards/downwards independence of a family of transitive relations.

    Both flags quantify over the intersection S of the family.  When the
    upwards flag holds, the segment identity (every strict lower i-segment
    is the union of the S-segments below its members) is re-checked as an
    internal consistency assertion, and dually for downwards.
    """
    system = list(system)
    if not system:
        raise EmptyFamily("independence check needs at least one relation")
    carrier = _require_endo(system[0])
    for rel in system[1:]:
        if _require_endo(rel) != carrier:
            raise CarrierMismatch("system members live on different carriers")
    for rel in system:
        if not classify(rel).pre_ordering:
            raise NotPreordering("system members must be transitive")

    s_pairs = frozenset.intersection(*(rel.pairs for rel in system))
    atoms = carrier.atoms

    upwards = all(
        any((x, y) in s_pairs and (y, s) in rel.pairs for y in atoms)
        for rel in system
        for x, s in rel.pairs
    )
    downwards = all(
        any((y, x) in s_pairs and (s, y) in rel.pairs for y in atoms)
        for rel in system
        for s, x in rel.pairs
    )

    if upwards:
        for rel in system:
            for s in atoms:
                segment = {z for z in atoms if (z, s) in rel.pairs}
                union = {
                    z
                    for x in atoms
                    if (x, s) in rel.pairs
                    for z in atoms
                    if (z, x) in s_pairs
                }
                assert segment == union, "upwards segment identity failed"
    if downwards:
        for rel in system:
            for s in atoms:
                segment = {z for z in atoms if (s, z) in rel.pairs}
                union = {
                    z
                    for x in atoms
                    if (s, x) in rel.pairs
                    for z in atoms
                    if (x, z) in s_pairs
                }
                assert segment == union, "downwards segment identity failed"
    return IndependenceReport(upwards=upwards, downwards=downwards)


def order_type_finite(r: Relation):
    """Rank isomorphism of a finite well-ordering onto 0..n-1."""
    carrier = _require_endo(r)
    if not classify(r).well_ordering:
        raise NotWellOrdering("order type requires a well-ordering")
    remaining = list(carrier)
    iso = {}
    rank = 0
    p = r.pairs
    while remaining:
        front = [
            x for x in remaining
            if all(y == x or (x, y) in p for y in remaining)
        ]
        assert len(front) == 1, "well-ordering must have a unique minimum"
        iso[front[0]] = rank
        remaining.remove(front[0])
        rank += 1
    return len(iso), iso


def parse_relation(text: str) -> Relation:
    """Parse the relation file format.

    Line 1 (ignoring blank lines and # comments): ``carrier: a b c``.
    Every further line: two atoms forming a pair.
    """
    carrier = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if carrier is None:
            if not line.startswith("carrier:"):
                raise ParseError("first line must start with 'carrier:'", lineno)
            atoms = line[len("carrier:"):].split()
            if not atoms:
                raise ParseError("carrier must list at least one atom", lineno)
            try:
                carrier = Carrier(atoms)
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two atoms, got {len(parts)}", lineno)
        x, y = parts
        if x not in carrier:
            raise UnknownAtom(f"atom {x!r} not in carrier (line {lineno})")
        if y not in carrier:
            raise UnknownAtom(f"atom {y!r} not in carrier (line {lineno})")
        pairs.append((x, y))
    if carrier is None:
        raise ParseError("missing carrier line", 1)
    return Relation.on(carrier, pairs)
