import pytest
from hypothesis import given, strategies as st

from brute import decisive, raw_member, window
from conftest import ep_fields, epsets
from omega_lab import (
    EPSet,
    almost_subset,
    canonicalize,
    complement,
    enumeration,
    image_set,
    intersect,
    is_cofinite,
    member,
    tail_gap_bound,
    union,
)
from omega_lab.epsets import difference
from omega_lab.errors import FiniteSet

N = EPSet.naturals()
EVENS = EPSet.multiples(2)
ODDS = EPSet.residues(2, {1})
MULT3 = EPSet.multiples(3)
MULT4 = EPSet.multiples(4)
MULT6 = EPSet.multiples(6)
EMPTY = EPSet.empty()


class TestExamples:
    def test_member(self):
        assert member(EVENS, 4)
        assert not member(EVENS, 3)
        a = EPSet({1}, 2, 3, {0})
        assert member(a, 5)
        assert [n for n in range(12) if n in a] == [1, 2, 5, 8, 11]

    def test_canonicalize(self):
        assert canonicalize(EPSet(frozenset(), 0, 4, {0, 2})) == EVENS
        assert EVENS.period == 2 and EVENS.pattern == frozenset({0})
        assert canonicalize(EVENS) == EVENS
        assert EPSet({0}, 1, 2, {1}) == EVENS

    def test_intersect(self):
        got = intersect(EVENS, MULT3)
        assert got == MULT6
        assert window(got.__contains__, 60) == {n for n in range(60) if n % 2 == 0 and n % 3 == 0}
        assert intersect(EVENS, ODDS).is_empty()
        assert intersect(EVENS, ODDS).pattern == frozenset()

    def test_union(self):
        assert union(EVENS, ODDS) == N
        got = union(EVENS, MULT4)
        assert got == EVENS
        assert window(got.__contains__, 40) == {n for n in range(40) if n % 2 == 0}

    @given(epsets())
    def test_identity_elements(self, a):
        assert intersect(a, N) == a
        assert union(a, EMPTY) == a

    def test_complement(self):
        assert complement(EVENS) == ODDS
        c = complement(EPSet.at_least(5))
        assert c == EPSet.finite(range(5))
        assert c.pattern == frozenset() and c.is_finite()
        assert complement(N) == EMPTY

    def test_almost_subset(self):
        assert almost_subset(EVENS, N)
        assert almost_subset(union(EPSet.finite({0, 1}), MULT4), MULT4)
        assert not almost_subset(EVENS, ODDS)

    def test_is_cofinite(self):
        assert is_cofinite(EPSet.at_least(3))
        assert not is_cofinite(EVENS)
        assert is_cofinite(EPSet(frozenset(), 0, 1, {0}))

    def test_tail_gap_bound(self):
        assert tail_gap_bound(EVENS) == 2
        assert tail_gap_bound(EPSet.residues(6, {0, 1})) == 5
        assert tail_gap_bound(N) == 1
        with pytest.raises(FiniteSet):
            tail_gap_bound(EPSet.finite({1, 2}))

    def test_enumeration(self):
        e = enumeration(EVENS)
        assert [e(n) for n in range(5)] == [0, 2, 4, 6, 8]
        o = enumeration(ODDS)
        assert [o(n) for n in range(5)] == [1, 3, 5, 7, 9]
        f = enumeration(EPSet.residues(6, {0, 1}))
        assert (f.table, f.base, f.period, f.incr) == ((), (0, 1), 2, 6)
        assert f.values(4) == [0, 1, 6, 7]
        with pytest.raises(FiniteSet):
            enumeration(EPSet.finite({3}))


class TestStructure:
    def test_finite_representation(self):
        a = EPSet.finite({4, 1})
        assert a.pattern == frozenset() and a.period == 1
        assert a.size() == 2
        assert sorted(a) == [1, 4]

    def test_invalid_fields(self):
        with pytest.raises(ValueError):
            EPSet(frozenset(), 0, 0, {0})
        with pytest.raises(ValueError):
            EPSet(frozenset(), 0, 2, {2})
        # the membership formula never consults prefix entries >= start
        assert EPSet({1, 5}, 3, 2, set()) == EPSet.finite({1})

    def test_iteration_and_first(self):
        a = EPSet({1}, 3, 4, {0, 3})
        assert a.first(5) == [1, 3, 6, 7, 10]
        assert a.elements_below(11) == [1, 3, 6, 7, 10]
        assert list(EPSet.finite({2, 9})) == [2, 9]

    def test_meets(self):
        a = EPSet.residues(10, {7})
        assert a.meets(5, 8) and not a.meets(8, 17) and a.meets(8, 18)
        assert not a.meets(3, 3)

    def test_operators(self):
        assert EVENS & MULT3 == MULT6
        assert EVENS | ODDS == N
        assert N - EVENS == ODDS
        assert ~EVENS == ODDS

    def test_hash_equality(self):
        assert len({EVENS, EPSet(frozenset(), 0, 4, {0, 2}), EPSet({0}, 1, 2, {1})}) == 1


class TestProperties:
    @given(ep_fields(), st.integers(0, 200))
    def test_member_matches_formula(self, f, n):
        assert (n in EPSet(*f)) == raw_member(f, n)

    @given(ep_fields())
    def test_member_on_stated_window(self, f):
        a = EPSet(*f)
        bound = 4 * (f[1] + f[2])
        assert window(a.__contains__, bound) == window(lambda n: raw_member(f, n), bound)

    @given(ep_fields(), ep_fields())
    def test_boolean_algebra_against_sieve(self, fa, fb):
        a, b = EPSet(*fa), EPSet(*fb)
        D = decisive(fa, fb)
        A, B = window(lambda n: raw_member(fa, n), D), window(lambda n: raw_member(fb, n), D)
        full = set(range(D))
        assert window(intersect(a, b).__contains__, D) == A & B
        assert window(union(a, b).__contains__, D) == A | B
        assert window(difference(a, b).__contains__, D) == A - B
        assert window(complement(a).__contains__, D) == full - A

    @given(ep_fields(), ep_fields())
    def test_almost_subset_against_sieve(self, fa, fb):
        a, b = EPSet(*fa), EPSet(*fb)
        D = decisive(fa, fb)
        outside = [n for n in range(D, 3 * D) if raw_member(fa, n) and not raw_member(fb, n)]
        assert almost_subset(a, b) == (not outside)

    @given(ep_fields())
    def test_canonical_minimality(self, f):
        a = EPSet(*f)
        assert canonicalize(a) == a
        D = decisive(f)
        assert window(a.__contains__, D) == window(lambda n: raw_member(f, n), D)
        # no smaller period or start describes the same set
        members = window(a.__contains__, D + 2 * a.start + 4 * a.period)
        for p in range(1, a.period):
            assert any((n in members) != (n + p in members)
                       for n in range(a.start, a.start + 2 * a.period) if n + p < D)
        if a.start > 0:
            s = a.start - 1
            assert (s in members) != (s + a.period in members)

    @given(ep_fields(), ep_fields())
    def test_equality_is_set_equality(self, fa, fb):
        a, b = EPSet(*fa), EPSet(*fb)
        D = decisive(fa, fb)
        same = all(raw_member(fa, n) == raw_member(fb, n) for n in range(D))
        assert (a == b) == same

    @given(epsets(), epsets())
    def test_de_morgan(self, a, b):
        assert complement(union(a, b)) == intersect(complement(a), complement(b))
        assert complement(intersect(a, b)) == union(complement(a), complement(b))

    @given(epsets())
    def test_complement_involution(self, a):
        assert complement(complement(a)) == a

    @given(epsets(infinite=True))
    def test_enumeration_round_trip(self, a):
        e = enumeration(a)
        assert e.is_increasing()
        assert e.values(30) == a.first(30)
        assert image_set(e) == a
        assert e.period == len(a.pattern) and e.incr == a.period

    @given(epsets(infinite=True))
    def test_tail_gap_bound_is_least(self, a):
        G = tail_gap_bound(a)
        lo = a.start + a.period
        xs = range(lo, lo + 2 * a.period)
        assert all(any(n in a for n in range(x, x + G)) for x in xs)
        if G > 1:
            assert any(not any(n in a for n in range(x, x + G - 1)) for x in xs)

    @given(ep_fields())
    def test_cofinite_and_infinite_flags(self, f):
        a = EPSet(*f)
        tail = range(100, 100 + f[2])
        assert a.is_cofinite() == all(raw_member(f, n) for n in tail)
        assert a.is_infinite() == any(raw_member(f, n) for n in tail)
