import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semitorsion.errors import NotClosedUnderRing
from semitorsion.semigroup import enumerate_semigroups
from semitorsion.sideal import end_ring, enumerate_ideals, is_module_over, make_ideal
from semitorsion.tensor import (
    class_counts,
    graded_fiber_classes,
    is_torsion_free,
    lemma22_compare,
    stable_degree,
    torsion_profile,
)

from brute import fiber_components, ideal_set


def test_fiber_examples(s23, s456):
    m = make_ideal(s23, [0, 1])
    assert graded_fiber_classes(m, m, 2, [2, 3]) == 2
    assert graded_fiber_classes(m, m, 3, [2, 3]) == 1
    assert graded_fiber_classes(m, m, -1, [2, 3]) == 0
    M, N = make_ideal(s456, [0, 1]), make_ideal(s456, [0, 2])
    assert graded_fiber_classes(M, N, 7, [4, 5, 6]) == 1


def test_fiber_degrees_are_actual(example_pair):
    M, N = example_pair  # shifts 4 and 4
    assert graded_fiber_classes(M, N, 7, [4, 5, 6]) == 0
    assert graded_fiber_classes(M, N, 15, [4, 5, 6]) == 1


def test_example_is_torsion_free(example_pair):
    M, N = example_pair
    prof = torsion_profile(M, N)
    assert prof.torsion_length == 0
    assert is_torsion_free(M, N)


def test_maximal_ideal_of_cusp(s23):
    m = make_ideal(s23, [2, 3])
    prof = torsion_profile(m, m)
    assert prof.torsion_length == 2
    excess = {d: c - p for d, c, p in prof.rows if c - p}
    assert excess == {5: 1, 6: 1}  # degrees 1 and 2 after normalization, shifted by 2+2
    assert not is_torsion_free(m, m)


def test_principal_factor(s456):
    R = make_ideal(s456, [0])
    for N in enumerate_ideals(s456):
        assert torsion_profile(R, N).torsion_length == 0


def test_profile_json(example_pair):
    prof = torsion_profile(*example_pair)
    d = prof.to_dict()
    assert list(d) == sorted(d)
    assert d["rows"][0] == [8, 1, True]


def test_not_closed(s456):
    R = make_ideal(s456, [0])
    with pytest.raises(NotClosedUnderRing):
        torsion_profile(R, R, end_ring(s456))
    with pytest.raises(NotClosedUnderRing):
        graded_fiber_classes(R, R, 3, [5, 6])  # does not generate a ring containing S


def test_lemma22_examples(example_pair, s456, s23):
    M, N = example_pair
    rep = lemma22_compare(M, N, end_ring(s456))
    assert rep.equal_dims and rep.first_discrepancy is None
    m = make_ideal(s23, [0, 1])
    rep = lemma22_compare(m, m, end_ring(s23))
    assert not rep.equal_dims and rep.first_discrepancy == 1
    assert rep.counts_r[1] == 2 and rep.counts_e[1] == 1
    with pytest.raises(NotClosedUnderRing):
        lemma22_compare(make_ideal(s456, [0]), N, end_ring(s456))


SEMIGROUPS = list(enumerate_semigroups(5))


def _pairs(S):
    ideals = enumerate_ideals(S)
    return [(M, N) for i, M in enumerate(ideals) for N in ideals[i:]]


@pytest.mark.parametrize("S", SEMIGROUPS, ids=str)
def test_against_bfs_oracle(S):
    gens = S.min_gens
    for M, N in _pairs(S)[:40]:
        d_star = stable_degree(M, N, gens)
        bound = d_star + S.multiplicity
        Ms = ideal_set(gens, M.gens, bound)
        Ns = ideal_set(gens, N.gens, bound)
        counts = class_counts(M, N, gens, bound)
        assert counts == [fiber_components(Ms, Ns, d, gens)[0] for d in range(bound + 1)]


@pytest.mark.parametrize("S", SEMIGROUPS, ids=str)
def test_profile_invariants(S):
    E = end_ring(S)
    for M, N in _pairs(S):
        prof = torsion_profile(M, N)
        assert prof == torsion_profile(N, M)
        assert prof.torsion_length == sum(c - int(p) for _, c, p in prof.rows)
        assert all(c - int(p) >= 0 for _, c, p in prof.rows)
        assert all(c == 1 and p for d, c, p in prof.rows if d >= prof.degree_stable)
        assert all((c == 0) == (not p) for _, c, p in prof.rows)
        if is_module_over(M, E) and is_module_over(N, E):
            pe = torsion_profile(M, N, E)
            hi = min(len(prof.rows), len(pe.rows))
            assert all(pe.rows[i][1] <= prof.rows[i][1] for i in range(hi))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SEMIGROUPS), st.integers(-15, 15), st.integers(-15, 15), st.data())
def test_shift_invariance(S, a, b, data):
    ideals = enumerate_ideals(S)
    M = data.draw(st.sampled_from(ideals))
    N = data.draw(st.sampled_from(ideals))
    p0 = torsion_profile(M, N)
    p1 = torsion_profile(M.shifted(a), N.shifted(b))
    assert p1.torsion_length == p0.torsion_length
    assert [(d - a - b, c, p) for d, c, p in p1.rows] == list(p0.rows)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SEMIGROUPS), st.lists(st.integers(0, 40), max_size=4), st.data())
def test_redundant_generators_change_nothing(S, extra, data):
    ideals = enumerate_ideals(S)
    M = data.draw(st.sampled_from(ideals))
    N = data.draw(st.sampled_from(ideals))
    gens = list(S.min_gens)
    redundant = gens + [s for s in extra if s > 0 and s in S]
    bound = stable_degree(M, N, gens) + S.multiplicity
    assert class_counts(M, N, gens, bound) == class_counts(M, N, redundant, bound)
