import itertools

import pytest

from crossedcat.abgroup import AbGroup
from crossedcat.cohomology import Cochain, CochainError, is_cocycle, mu
from crossedcat.pointed import (
    PointedCat,
    braidings_from_theorem,
    braidings_pointed,
    crossed_data,
    delta_v,
    diagonal_phases,
    displayed_formula_report,
    engine_obstruction,
    mu_is_character,
    obstruction,
    pointed_obstruction,
    solve_eta,
    table_key,
    verify_crossed,
)
from crossedcat.skeletal import hexagon_report, ordinary

from instances import pointed_instances

Z2, Z3, Z4 = AbGroup((2,)), AbGroup((3,)), AbGroup((4,))


def type_three():
    """omega(a, b, c) = (-1)^(a_0 b_1 c_2) on (Z/2)^3."""
    A = AbGroup((2, 2, 2))
    L = 32
    w = Cochain.from_function(3, A, mu(L), lambda a, b, c: ((L // 2) * (a[0] * b[1] * c[2] % 2),))
    return PointedCat(A, w)


def test_rejects_non_cocycle():
    with pytest.raises(CochainError):
        PointedCat(Z2, Cochain(3, Z2, mu(8), {((1,), (1,), (1,)): (2,)}))


@pytest.mark.parametrize("cat", pointed_instances(Z3) + pointed_instances(Z4, 1),
                         ids=lambda c: c.label())
def test_canonical_crossed_structure(cat):
    assert not cat.category.pentagon_failures(stop_after=1)
    assert verify_crossed(cat).holds


@pytest.mark.parametrize("cat", pointed_instances(Z4), ids=lambda c: c.label())
def test_eta_and_dual_path_obstruction(cat):
    data = crossed_data(cat)
    eta = solve_eta(cat, data)
    assert eta is not None
    for g, a, b in itertools.product(cat.group.elements(), repeat=3):
        assert cat.field.root(eta.coeff.order, delta_v(eta, g, a, b)) == data.gamma[g, a, b]
    b = pointed_obstruction(cat, eta, data)
    assert is_cocycle(b)
    assert b == engine_obstruction(cat, eta)


def test_mu_fails_to_be_a_character_for_nontrivial_omega():
    trivial, gen = pointed_instances(Z3)[:2]
    assert mu_is_character(trivial)
    assert not mu_is_character(gen)
    assert displayed_formula_report(trivial) == {"gamma_is_2_cocycle": True, "mu_is_character": True}
    rep = displayed_formula_report(gen)
    assert not rep["gamma_is_2_cocycle"] and not rep["mu_is_character"]


@pytest.mark.parametrize("cat", pointed_instances(Z2, 1) + pointed_instances(Z3) + pointed_instances(Z4),
                         ids=lambda c: c.label())
def test_theorem_matches_brute_force(cat):
    found = braidings_pointed(cat)
    theorem = braidings_from_theorem(cat)
    assert {table_key(cat, R) for R in found} == {table_key(cat, R) for R in theorem}
    assert bool(found) == obstruction(cat).braided
    for R in found:
        assert hexagon_report(ordinary(cat.category, R), stop_after=1).holds


def test_trivial_z2_has_the_two_symmetric_braidings():
    cat = PointedCat.trivial(Z2)
    Rs = braidings_pointed(cat)
    assert len(Rs) == 2
    assert sorted(diagonal_phases(cat, R)[1] for R in Rs) == [0, 0.5]


def test_type_three_cocycle_has_no_eta_and_no_braiding():
    cat = type_three()
    assert verify_crossed(cat).holds
    assert solve_eta(cat) is None
    res = obstruction(cat)
    assert res.eta is None and not res.braided
    assert braidings_pointed(cat) == []
