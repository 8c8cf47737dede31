import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semitorsion.errors import EmptyGenerators, GenusCapExceeded, NotCoprime
from semitorsion.semigroup import (
    contains,
    enumerate_semigroups,
    from_gaps,
    is_symmetric,
    make_semigroup,
    parse_gens,
)
from semitorsion.verify import brute_force_gap_sets

from brute import semigroup_set


def test_456_cached_fields():
    S = make_semigroup([4, 5, 6])
    assert S.min_gens == (4, 5, 6)
    assert S.apery == (0, 5, 6, 11)
    assert S.frobenius == 7
    assert S.gaps == (1, 2, 3, 7)
    assert S.genus == 4


def test_456_against_sum_enumeration():
    elems = semigroup_set([4, 5, 6], 24)
    S = make_semigroup([4, 5, 6])
    assert [n for n in range(25) if n not in elems] == list(S.gaps)


def test_naturals():
    S = make_semigroup([1])
    assert S.frobenius == -1 and S.gaps == () and S.genus == 0
    assert is_symmetric(S)


def test_errors():
    with pytest.raises(NotCoprime):
        make_semigroup([4, 6])
    with pytest.raises(EmptyGenerators):
        make_semigroup([])
    with pytest.raises(GenusCapExceeded):
        list(enumerate_semigroups(13))


def test_redundant_generator_dropped():
    assert make_semigroup([3, 4, 5, 8]).min_gens == (3, 4, 5)
    assert make_semigroup([8, 5, 3, 4, 5]) == make_semigroup([3, 4, 5])


@pytest.mark.parametrize("n,expected", [(7, False), (0, True), (-3, False), (8, True)])
def test_contains(n, expected):
    assert contains(make_semigroup([4, 5, 6]), n) is expected


def test_symmetry_examples():
    assert is_symmetric(make_semigroup([4, 5, 6]))
    S = make_semigroup([3, 5, 7])
    assert S.gaps == (1, 2, 4)
    assert not is_symmetric(S)


def test_parse_gens():
    assert parse_gens("4,5,6") == [4, 5, 6]
    assert parse_gens("[4, 5, 6]") == [4, 5, 6]


def test_enumerate_small():
    got = [S.min_gens for S in enumerate_semigroups(2)]
    assert got == [(1,), (2, 3), (3, 4, 5), (2, 5)]
    assert [S.min_gens for S in enumerate_semigroups(0)] == [(1,)]
    g3 = [S.min_gens for S in enumerate_semigroups(3, symmetric_only=True) if S.genus == 3]
    assert sorted(g3) == [(2, 7), (3, 4)]


def test_enumeration_matches_gap_set_oracle():
    for g in range(8):
        tree = sorted(S.gaps for S in enumerate_semigroups(g) if S.genus == g)
        assert tree == sorted(brute_force_gap_sets(g))


def test_enumeration_no_duplicates_and_ordered():
    items = list(enumerate_semigroups(7))
    keys = [(S.genus, S.gaps) for S in items]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def _apery_symmetric(S):
    top = max(S.apery)
    partners = sum(1 for a in S.apery for b in S.apery if a + b == top)
    return partners == S.multiplicity


def _definition_symmetric(S):
    F = S.frobenius
    return all((z in S) != ((F - z) in S) for z in range(-1, F + 2))


def test_symmetry_criteria_agree_on_enumeration():
    for S in enumerate_semigroups(8):
        assert is_symmetric(S) == _apery_symmetric(S) == _definition_symmetric(S)


gens_strategy = st.lists(st.integers(1, 30), min_size=1, max_size=5).filter(
    lambda gs: __import__("math").gcd(*gs) == 1
)


@settings(max_examples=150, deadline=None)
@given(gens_strategy)
def test_invariants(gens):
    S = make_semigroup(gens)
    m = S.multiplicity
    assert S.apery[0] == 0
    assert all(a % m == i for i, a in enumerate(S.apery))
    assert S.frobenius == max(S.apery) - m
    assert S.genus == sum(a // m for a in S.apery) == len(S.gaps)
    assert all(g <= S.frobenius for g in S.gaps)
    for n in range(S.frobenius + 1, S.frobenius + 2 * m + 2):
        assert n in S
    brute = semigroup_set(gens, S.frobenius + m + 1)
    assert all((n in S) == (n in brute) for n in range(S.frobenius + m + 1))
    # minimality: no min generator is a sum of the others
    for g in S.min_gens:
        others = [h for h in S.min_gens if h != g]
        assert not others or g not in semigroup_set(others, g)


@settings(max_examples=50, deadline=None)
@given(gens_strategy)
def test_from_gaps_roundtrip(gens):
    S = make_semigroup(gens)
    assert from_gaps(S.gaps) == S
