import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semitorsion.errors import EmptyGenerators, PrincipalMaximalIdeal, SemigroupMismatch
from semitorsion.semigroup import enumerate_semigroups, is_symmetric, make_semigroup
from semitorsion.sideal import (
    bidual,
    colon,
    dual,
    end_ring,
    enumerate_ideals,
    ideal_from_dict,
    is_module_over,
    is_principal,
    lemma21_report,
    make_ideal,
    maximal_ideal,
    product,
    unit_ideal,
)

from brute import ideal_set


def actual_set(I, lo, hi):
    return {z for z in range(lo, hi + 1) if I.contains_actual(z)}


def test_make_ideal_examples(s456):
    I = make_ideal(s456, [4, 5])
    assert I.gens == (0, 1) and I.shift == 4
    J = make_ideal(s456, [0, 4])
    assert J.gens == (0,) and J.shift == 0
    m = make_ideal(make_semigroup([3, 4]), [3, 4])
    assert m.gens == (0, 1) and m.shift == 3
    with pytest.raises(EmptyGenerators):
        make_ideal(s456, [])


def test_is_principal(s456):
    assert is_principal(make_ideal(s456, [0]))
    assert not is_principal(maximal_ideal(make_semigroup([3, 4])))
    assert not is_principal(make_ideal(s456, [0, 2]))


def test_product_examples(s456, s23):
    assert product(make_ideal(s456, [0, 1]), make_ideal(s456, [0, 2])).gens == (0, 1, 2, 3)
    J = make_ideal(s456, [0, 2, 3])
    assert product(unit_ideal(s456), J) == J
    assert product(make_ideal(s23, [0, 1]), make_ideal(s23, [0, 1])).gens == (0, 1)


def test_product_membership_is_sumset(s456):
    I, J = make_ideal(s456, [0, 1]), make_ideal(s456, [0, 2])
    bound = 30
    A, B = ideal_set([4, 5, 6], [0, 1], bound), ideal_set([4, 5, 6], [0, 2], bound)
    sums = {a + b for a in A for b in B if a + b <= bound}
    P = product(I, J)
    assert {z for z in range(bound + 1) if z in P} == sums


def test_colon_examples():
    S = make_semigroup([3, 4])
    m = maximal_ideal(S)
    E = colon(m, m)
    assert E.gens == (0, 5) and E.shift == 0
    assert colon(unit_ideal(S), m) == E
    assert colon(unit_ideal(S), unit_ideal(S)).gens == (0,)


def test_semigroup_mismatch(s456, s23):
    with pytest.raises(SemigroupMismatch):
        product(unit_ideal(s456), unit_ideal(s23))
    with pytest.raises(SemigroupMismatch):
        is_module_over(unit_ideal(s456), end_ring(s23))


def test_end_ring_examples(s456, s23):
    E = end_ring(s456)
    assert E.ring_gens == (4, 5, 6, 7) and E.extra_elements == (7,)
    E2 = end_ring(s23)
    assert E2.ring_gens == (1,) and E2.extra_elements == (1,)
    assert end_ring(make_semigroup([3, 5, 7])).extra_elements == (2, 4)


def test_lemma21_examples(s456):
    r = lemma21_report(make_semigroup([3, 4]))
    assert r.simple and r.y == 5 and r.generator_pair_ok
    r = lemma21_report(s456)
    assert r.simple and r.y == 7
    assert not lemma21_report(make_semigroup([3, 5, 7])).simple
    with pytest.raises(PrincipalMaximalIdeal):
        lemma21_report(make_semigroup([1]))


def test_dual_examples():
    S = make_semigroup([3, 4])
    m = maximal_ideal(S)
    assert dual(m).gens == (0, 5) and dual(m).shift == 0
    assert bidual(m) == m and bidual(m).shift == m.shift
    assert dual(unit_ideal(S)) == unit_ideal(S)


def test_enumerate_ideals_examples(s456, s23):
    assert [I.gens for I in enumerate_ideals(s23)] == [(0,), (0, 1)]
    got = {I.gens for I in enumerate_ideals(s456)}
    assert len(got) == 9 and (0, 7) in got and (0, 1, 2, 3) in got
    assert {I.gens for I in enumerate_ideals(make_semigroup([3, 4]))} == {
        (0,), (0, 1), (0, 2), (0, 5), (0, 1, 2)}


def test_is_module_over_examples(s456):
    E = end_ring(s456)
    assert is_module_over(make_ideal(s456, [0, 1]), E)
    assert not is_module_over(unit_ideal(s456), E)
    S = make_semigroup([1])
    assert is_module_over(unit_ideal(S), end_ring(S))


def test_json_roundtrip(s456):
    I = make_ideal(s456, [4, 5])
    assert I.to_dict() == {"semigroup": [4, 5, 6], "gens": [0, 1], "shift": 4}
    back = ideal_from_dict(I.to_dict())
    assert back == I and back.shift == 4


SMALL = list(enumerate_semigroups(6))


@pytest.mark.parametrize("S", SMALL, ids=str)
def test_ideal_invariants(S):
    F = S.frobenius
    for I in enumerate_ideals(S):
        assert make_ideal(S, I.gens) == I
        assert I.gens[0] == 0 and all(g in S.gaps for g in I.gens[1:])
        assert all((b - a) not in S for a in I.gens for b in I.gens if a != b)
        assert I.conductor <= max(I.gens) + F + 1
        brute = ideal_set(S.min_gens, I.gens, I.conductor + S.multiplicity + 5)
        window = range(I.conductor + S.multiplicity + 6)
        assert {z for z in window if z in I} == brute
        assert all(z in I for z in range(I.conductor, I.conductor + 10))
        assert I.conductor == 0 or (I.conductor - 1) not in I


@pytest.mark.parametrize("S", SMALL[:15], ids=str)
def test_colon_adjunction(S):
    ideals = enumerate_ideals(S)
    for I in ideals:
        for J in ideals:
            C = colon(I, J.shifted(3))
            lo = -max(J.gens) - 3 - 5
            hi = I.conductor + S.frobenius + 1 + 5
            expected = {z for z in range(lo, hi + 1)
                        if all(I.contains_actual(z + b + 3) for b in J.gens)}
            assert actual_set(C, lo, hi) == expected


@pytest.mark.parametrize("S", [S for S in SMALL if is_symmetric(S) and S.multiplicity > 1], ids=str)
def test_gorenstein_identities(S):
    m = maximal_ideal(S)
    E = end_ring(S)
    assert colon(unit_ideal(S), m) == colon(m, m)
    assert E.extra_elements == (S.frobenius,)
    for I in enumerate_ideals(S):
        assert bidual(I) == I
        if not I.is_principal:
            assert is_module_over(I, E)


@pytest.mark.parametrize("S", SMALL[1:], ids=str)
def test_frobenius_in_e(S):
    E = end_ring(S)
    assert S.frobenius in E and S.frobenius not in S
    assert 0 in E


@settings(max_examples=60, deadline=None)
@given(st.integers(0, len(SMALL) - 1), st.integers(-20, 20), st.data())
def test_shift_invariance(idx, k, data):
    S = SMALL[idx]
    ideals = enumerate_ideals(S)
    I = data.draw(st.sampled_from(ideals))
    J = data.draw(st.sampled_from(ideals))
    assert product(I.shifted(k), J) == product(I, J)
    assert product(I.shifted(k), J).shift == product(I, J).shift + k
    assert colon(I.shifted(k), J) == colon(I, J)
    assert colon(I, J.shifted(k)).shift == colon(I, J).shift - k
    assert make_ideal(S, [g + k for g in I.gens]) == I
