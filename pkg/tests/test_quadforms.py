from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossedcat.abgroup import AbGroup, GroupError
from crossedcat.cyclotomic import cyclotomic_field, sqrt_of_natural
from crossedcat.quadforms import (
    Bicharacter,
    aut_preserving,
    bicharacter_orbit_representatives,
    check_bicharacter,
    gauss_sum,
    hyperbolic,
    is_compatible,
    orbits,
    quadratic_forms_brute_force,
    quadratic_forms_with,
    symmetric_bicharacters,
)

TEST_GROUPS = [(2,), (3,), (4,), (2, 2), (5,), (6,), (8,), (2, 4)]


@pytest.mark.parametrize("facs,n", [((2,), 1), ((3,), 2), ((4,), 2), ((2, 2), 4), ((5,), 4),
                                    ((8,), 4), ((2, 2, 2), 28)])
def test_nondegenerate_symmetric_counts(facs, n):
    assert len(symmetric_bicharacters(AbGroup(facs))) == n


def test_parse_and_flags():
    A = AbGroup((2, 2))
    chi = Bicharacter.parse(A, "[[0, 1/2], [1/2, 0]]")
    assert chi == hyperbolic(A)
    assert check_bicharacter(chi).symmetric and check_bicharacter(chi).nondegenerate
    assert not check_bicharacter(Bicharacter.parse(A, "[[1/2, 0], [0, 0]]")).nondegenerate
    with pytest.raises(GroupError):
        Bicharacter.parse(AbGroup((3,)), "[[1/2]]")


@pytest.mark.parametrize("facs", TEST_GROUPS)
def test_bicharacters_are_biadditive(facs):
    A = AbGroup(facs)
    for chi in symmetric_bicharacters(A, nondegenerate=False):
        for a in A.elements():
            for b in A.elements():
                for c in A.elements()[:3]:
                    assert chi.phase(A.add(a, c), b) == (chi.phase(a, b) + chi.phase(c, b)) % 1


@pytest.mark.parametrize("facs", [(2,), (3,), (4,), (2, 2), (5,)])
def test_forms_match_brute_force(facs):
    A = AbGroup(facs)
    for chi in symmetric_bicharacters(A):
        forms = quadratic_forms_with(chi)
        assert {q.values for q in forms} == {q.values for q in quadratic_forms_brute_force(chi)}
        assert all(is_compatible(q, chi) for q in forms)


@pytest.mark.parametrize("facs", TEST_GROUPS + [(2, 2, 2)])
def test_gauss_milgram(facs):
    """(sum_a q(a))^8 = |A|^4 and |sum q|^2 = |A| for every nondegenerate compatible q."""
    A = AbGroup(facs)
    F = cyclotomic_field(8 * A.exponent * A.order)
    for chi in symmetric_bicharacters(A):
        for q in quadratic_forms_with(chi):
            g = gauss_sum(q, F)
            assert g ** 8 == A.order ** 4
            assert g * g.conj() == A.order
            phase = (g * sqrt_of_natural(F, A.order).inv()).root_exponent()
            assert phase is not None and (8 * phase) % 1 == 0


def test_hyperbolic_automorphisms():
    V = AbGroup((2, 2))
    assert len(aut_preserving(V, hyperbolic(V))) == 6


def test_z4_aut_preserving():
    A = AbGroup((4,))
    chi = Bicharacter(A, ((Fraction(1, 4),),))
    assert len(aut_preserving(A, chi)) == 2


@pytest.mark.parametrize("facs", TEST_GROUPS)
def test_orbits_partition(facs):
    A = AbGroup(facs)
    for chi in bicharacter_orbit_representatives(A, symmetric_bicharacters(A)):
        forms = quadratic_forms_with(chi)
        parts = orbits(forms, aut_preserving(A, chi))
        assert sorted(q.values for p in parts for q in p) == sorted(q.values for q in forms)


def test_orbit_representatives_cover_all():
    A = AbGroup((8,))
    chis = symmetric_bicharacters(A)
    reps = bicharacter_orbit_representatives(A, chis)
    seen = {chi.transform(f).matrix for chi in reps for f in A.automorphisms()}
    assert {chi.matrix for chi in chis} <= seen


@given(st.sampled_from(TEST_GROUPS), st.data())
def test_forms_differ_by_order_two_characters(facs, data):
    """Two forms with the same chi differ by a character with values +-1."""
    A = AbGroup(facs)
    chi = data.draw(st.sampled_from(symmetric_bicharacters(A)))
    forms = quadratic_forms_with(chi)
    q0 = forms[0]
    for q in forms:
        diff = [(q(a) - q0(a)) % 1 for a in A.elements()]
        assert all((2 * d) % 1 == 0 for d in diff)
        for a in A.elements():
            for b in A.elements():
                assert diff[A.index[A.add(a, b)]] == (diff[A.index[a]] + diff[A.index[b]]) % 1
