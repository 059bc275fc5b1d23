import pytest
from hypothesis import given, settings, strategies as st

import oracles
from settower import hfset as hf
from settower.errors import (
    EmptyFamily,
    ExprSyntaxError,
    NotANatural,
    NotAPair,
    SizeLimit,
)
from settower.hfset import EMPTY, HFSet

# Sets with Ackermann codes below 2^16: a complete, cheap universe whose
# canonical order is literally integer order on codes.
codes = st.integers(min_value=0, max_value=2**16 - 1)
coded_sets = codes.map(oracles.from_code)

# A tiny fixed universe (the 8 subsets of {0,1,2}) for algebraic identities.
UNIVERSE = hf.power_set(hf.nat_to_hf(3))
universe_subsets = st.lists(
    st.sampled_from(UNIVERSE.elements), max_size=8
).map(HFSet)


class TestConstruction:
    def test_deduplicates(self):
        one = hf.nat_to_hf(1)
        assert len(HFSet.of(one, one, EMPTY, one)) == 2

    def test_elements_strictly_increasing(self):
        s = HFSet.of(hf.nat_to_hf(2), EMPTY, hf.nat_to_hf(1))
        ranks = s.elements
        for a, b in zip(ranks, ranks[1:]):
            assert hf.compare(a, b) < 0

    @given(coded_sets, coded_sets)
    def test_extensional_equality(self, a, b):
        rebuilt = HFSet(reversed(a.elements))
        assert rebuilt == a
        assert (a == b) == (oracles.freeze(a) == oracles.freeze(b))

    @given(coded_sets)
    def test_never_contains_itself(self, a):
        assert a not in a

    @given(coded_sets, coded_sets)
    def test_no_membership_two_cycles(self, a, b):
        assert not (a in b and b in a)

    @given(coded_sets)
    def test_usable_as_dict_key(self, a):
        table = {a: "x", HFSet(a.elements): "y"}
        assert len(table) == 1

    def test_rejects_non_hfset_elements(self):
        with pytest.raises(TypeError):
            HFSet.of("atom")


class TestCompare:
    @given(codes, codes)
    def test_matches_code_order(self, ca, cb):
        got = hf.compare(oracles.from_code(ca), oracles.from_code(cb))
        want = (ca > cb) - (ca < cb)
        assert got == want

    @given(st.lists(codes, min_size=1, max_size=20))
    def test_sorting_agrees_with_codes(self, cs):
        sets = HFSet(oracles.from_code(c) for c in cs)
        got = [hf.ackermann_code(e) for e in sets.elements]
        assert got == sorted(set(cs))


class TestBigUnionIntersection:
    def test_union_textbook(self):
        a, b = EMPTY, hf.nat_to_hf(1)
        fam = HFSet.of(HFSet.of(a), HFSet.of(a, b))
        assert hf.big_union(fam) == HFSet.of(a, b)

    def test_union_of_singleton_empty(self):
        assert hf.big_union(HFSet.of(EMPTY)) == EMPTY

    def test_intersection_textbook(self):
        a, b = EMPTY, hf.nat_to_hf(1)
        fam = HFSet.of(HFSet.of(a), HFSet.of(a, b))
        assert hf.big_intersection(fam) == HFSet.of(a)

    def test_intersection_of_singleton(self):
        s = hf.nat_to_hf(3)
        assert hf.big_intersection(HFSet.of(s)) == s

    def test_empty_family_rejected(self):
        with pytest.raises(EmptyFamily):
            hf.big_union(EMPTY)
        with pytest.raises(EmptyFamily):
            hf.big_intersection(EMPTY)

    @given(st.lists(universe_subsets, min_size=1, max_size=5))
    def test_against_frozenset_oracle(self, members):
        fam = HFSet(members)
        if len(fam) == 0:
            return
        frozen_family = [oracles.freeze(m) for m in fam]
        assert oracles.freeze(hf.big_union(fam)) == oracles.union_oracle(
            frozen_family
        )
        assert oracles.freeze(
            hf.big_intersection(fam)
        ) == oracles.intersection_oracle(frozen_family)

    @given(universe_subsets)
    def test_union_of_power_set_recovers_the_set(self, s):
        assert hf.big_union(hf.power_set(s)) == s


class TestPowerSet:
    def test_of_empty(self):
        assert str(hf.power_set(EMPTY)) == "{{}}"

    def test_of_singleton_empty(self):
        assert str(hf.power_set(HFSet.of(EMPTY))) == "{{},{{}}}"

    @given(st.lists(st.sampled_from(UNIVERSE.elements), max_size=6).map(HFSet))
    def test_counts_and_membership(self, s):
        ps = hf.power_set(s)
        assert len(ps) == 2 ** len(s)
        assert oracles.freeze(ps) == oracles.power_oracle(oracles.freeze(s))

    def test_size_limit(self):
        big = HFSet(hf.nat_to_hf(i) for i in range(11))
        assert len(big) == 11
        with pytest.raises(SizeLimit):
            hf.power_set(big)


class TestKuratowskiPairs:
    def test_shape(self):
        a, b = EMPTY, hf.nat_to_hf(1)
        assert hf.kuratowski_pair(a, b) == hf.parse("{{{},{{}}},{{}}}")
        assert oracles.freeze(hf.kuratowski_pair(a, b)) == oracles.kuratowski_oracle(
            oracles.freeze(a), oracles.freeze(b)
        )

    def test_degenerate(self):
        a = hf.nat_to_hf(2)
        p = hf.kuratowski_pair(a, a)
        assert len(p) == 1
        assert hf.unpair(p) == (a, a)

    @given(coded_sets, coded_sets)
    def test_roundtrip(self, x, y):
        assert hf.unpair(hf.kuratowski_pair(x, y)) == (x, y)

    @given(coded_sets, coded_sets, coded_sets, coded_sets)
    def test_pair_equality_is_coordinatewise(self, x, y, u, v):
        same = hf.kuratowski_pair(x, y) == hf.kuratowski_pair(u, v)
        assert same == (x == u and y == v)

    @pytest.mark.parametrize(
        "bad",
        [
            "{}",
            "{{},{{}},{{},{{}}}}",  # three elements
            "{{{},{{}}}}",  # single two-element member
            "{{{}},{{{}}}}",  # disjoint singletons
        ],
    )
    def test_rejects_non_pairs(self, bad):
        with pytest.raises(NotAPair):
            hf.unpair(hf.parse(bad))


class TestCartesianProduct:
    def test_empty_factor_kills_product(self):
        y = hf.power_set(hf.nat_to_hf(2))
        assert hf.cartesian_product(EMPTY, y) == EMPTY
        assert hf.cartesian_product(y, EMPTY) == EMPTY

    def test_singletons(self):
        a, b = EMPTY, hf.nat_to_hf(1)
        assert hf.cartesian_product(HFSet.of(a), HFSet.of(b)) == HFSet.of(
            hf.kuratowski_pair(a, b)
        )

    @given(universe_subsets, universe_subsets)
    def test_cardinality(self, x, y):
        assert len(hf.cartesian_product(x, y)) == len(x) * len(y)

    @given(universe_subsets, universe_subsets, universe_subsets, universe_subsets)
    @settings(max_examples=40)
    def test_intersection_identity(self, u, v, x, y):
        lhs = hf.cartesian_product(u, v).intersection(hf.cartesian_product(x, y))
        rhs = hf.cartesian_product(u.intersection(x), v.intersection(y))
        assert lhs == rhs

    def test_size_limit(self):
        base = hf.power_set(hf.nat_to_hf(7))
        seventy = HFSet(base.elements[:70])
        with pytest.raises(SizeLimit):
            hf.cartesian_product(seventy, seventy)


class TestVonNeumannNaturals:
    def test_successor_of_empty(self):
        assert hf.successor(EMPTY) == HFSet.of(EMPTY)

    def test_two(self):
        one = hf.nat_to_hf(1)
        assert hf.successor(one) == HFSet.of(EMPTY, one)

    @given(coded_sets)
    def test_successor_grows_by_one(self, x):
        assert len(hf.successor(x)) == len(x) + 1
        assert x in hf.successor(x)

    def test_three_is_the_first_three_naturals(self):
        assert str(hf.nat_to_hf(3)) == "{{},{{}},{{},{{}}}}"
        assert hf.nat_to_hf(3) == HFSet.of(*(hf.nat_to_hf(i) for i in range(3)))

    def test_roundtrip(self):
        for n in range(11):
            assert hf.hf_to_nat(hf.nat_to_hf(n)) == n

    def test_frozen_model_agrees(self):
        for n in range(9):
            assert oracles.freeze(hf.nat_to_hf(n)) == oracles.nat_frozen(n)

    def test_hf_to_nat_rejects_non_naturals(self):
        with pytest.raises(NotANatural):
            hf.hf_to_nat(hf.parse("{{{}}}"))
        with pytest.raises(NotANatural):
            hf.hf_to_nat(HFSet.of(hf.nat_to_hf(1)))

    def test_nat_to_hf_bounds(self):
        with pytest.raises(NotANatural):
            hf.nat_to_hf(-1)
        with pytest.raises(SizeLimit):
            hf.nat_to_hf(13)


class TestAckermannCodes:
    def test_first_naturals(self):
        got = [hf.ackermann_code(hf.nat_to_hf(n)) for n in range(5)]
        assert got == [0, 1, 3, 11, 2059]

    def test_code_of_six_overflows(self):
        with pytest.raises(SizeLimit):
            hf.ackermann_code(hf.nat_to_hf(6))

    def test_roundtrip_on_shared_memo(self):
        memo = {}
        for c in range(4096):
            assert hf.ackermann_code(oracles.from_code(c), memo) == c

    @given(coded_sets)
    def test_matches_frozen_oracle(self, x):
        assert hf.ackermann_code(x) == oracles.code_oracle(oracles.freeze(x))


class TestPredicates:
    def test_naturals_are_ordinals(self):
        for n in range(9):
            assert hf.is_ordinal(hf.nat_to_hf(n))

    def test_empty_is_ordinal(self):
        assert hf.is_ordinal(EMPTY)

    def test_non_full_set_is_not(self):
        assert not hf.is_full(hf.parse("{{{}}}"))
        assert not hf.is_ordinal(hf.parse("{{{}}}"))

    def test_full_but_not_ordinal(self):
        # {0, 1, {1}} is full ({1}'s member 1 is in the set) but 0 and {1}
        # are not membership-comparable... 0 in {1}? no; {1} in 0? no.
        s = hf.parse("{{},{{}},{{{}}}}")
        assert hf.is_full(s)
        assert not hf.is_ordinal(s)

    def test_literal_subset_oracle_agrees_on_small_codes(self):
        for c in range(512):
            x = oracles.from_code(c)
            assert hf.is_full(x) == oracles.code_is_full(c)
            assert hf.is_ordinal(x) == oracles.code_is_ordinal(c)
            assert hf.is_ordinal(x) == oracles.is_ordinal_frozen(oracles.freeze(x))

    def test_ordinal_trichotomy_facts(self):
        ordinals = [hf.nat_to_hf(n) for n in range(9)]
        for a in ordinals:
            for b in a:
                assert hf.is_ordinal(b)
            for b in ordinals:
                if a.issubset(b) and a != b:
                    assert a in b
                assert a.issubset(b) or b.issubset(a)


class TestSetIdentities:
    @given(universe_subsets, universe_subsets)
    def test_double_difference(self, a, b):
        assert a.difference(a.difference(b)) == a.intersection(b)

    @given(universe_subsets, universe_subsets)
    def test_de_morgan(self, a, b):
        u = UNIVERSE
        lhs = u.difference(a.union(b))
        rhs = u.difference(a).intersection(u.difference(b))
        assert lhs == rhs
        lhs2 = u.difference(a.intersection(b))
        rhs2 = u.difference(a).union(u.difference(b))
        assert lhs2 == rhs2


class TestParse:
    @given(coded_sets)
    def test_roundtrip(self, x):
        assert hf.parse(str(x)) == x

    def test_any_order_and_whitespace(self):
        assert hf.parse(" { {{}} , {} } ") == hf.parse("{{},{{}}}")

    def test_duplicates_collapse(self):
        assert hf.parse("{{},{}}") == HFSet.of(EMPTY)

    @pytest.mark.parametrize(
        "bad,pos",
        [
            ("", 0),
            ("{", 1),
            ("{}}", 2),
            ("{},", 2),
            ("x", 0),
            ("{{} {}}", 4),
        ],
    )
    def test_errors_carry_position(self, bad, pos):
        with pytest.raises(ExprSyntaxError) as err:
            hf.parse(bad)
        assert err.value.position == pos
