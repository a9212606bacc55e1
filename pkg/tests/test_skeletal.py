import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossedcat.abgroup import AbGroup, count_homs
from crossedcat.cohomology import Cochain, mu
from crossedcat.pointed import PointedCat
from crossedcat.quadforms import Bicharacter
from crossedcat.skeletal import (
    CoherenceError,
    NatIso,
    check_action,
    functors_equal,
    hexagon_report,
    identity_functor,
    monoidal_id_autos,
    obstruction_cocycle,
    ordinary,
    pointed_fusion,
    transport,
    trivial_action,
    trivializations,
    trivializations_direct,
)
from crossedcat.tycat import make_ty, ty_fusion, z2_actions

Z2, Z3 = AbGroup((2,)), AbGroup((3,))


def ising():
    return make_ty(Z2, Bicharacter.parse(Z2, "[[1/2]]"), 1)


def ones(cat):
    return {x: cat.field.one() for x in cat.simples}


@pytest.mark.parametrize("facs", [(2,), (3,), (2, 2), (4,)])
def test_fusion_rules_are_valid(facs):
    A = AbGroup(facs)
    pointed_fusion(A).check()
    ty_fusion(A).check()


@pytest.mark.parametrize("facs", [(2,), (3,), (2, 2), (4,), (6,)])
def test_universal_grading(facs):
    A = AbGroup(facs)
    pa = monoidal_id_autos(pointed_fusion(A))
    assert pa.group.order == A.order
    ta = monoidal_id_autos(ty_fusion(A))
    assert ta.group.order == 2
    assert ta.brute_force_order([Fraction(k, 4) for k in range(4)]) == ta.group.order


def test_pentagon_detects_non_cocycle():
    A = Z2
    good = PointedCat(A, Cochain(3, A, mu(8), {((1,), (1,), (1,)): (4,)}))
    assert not good.category.pentagon_failures()
    bad = good.category.with_overrides({((1,), (1,), (1,), (1,), (0,), (0,)): good.field.root(4, 1)})
    assert bad.pentagon_failures(stop_after=1)


@given(st.integers(0, 10**6))
def test_transport_round_trip(seed):
    rng = random.Random(seed)
    ty = ising()
    cat = ty.category
    F = z2_actions(ty)[0].T((1,))
    gamma = {x: cat.field.root(16, rng.randrange(16)) for x in cat.simples}
    gamma[cat.fusion.unit] = cat.field.one()
    H = transport(F, gamma)
    assert NatIso(F, H, gamma).is_monoidal()
    back = transport(H, {x: g.inv() for x, g in gamma.items()})
    assert functors_equal(back, F)
    assert not H.coherence_failures()


def test_functor_checks():
    ty = ising()
    identity_functor(ty.category).check()
    for act in z2_actions(ty):
        assert check_action(act).holds


@pytest.mark.parametrize("G,expected", [(Z2, 2), (Z3, 1), (AbGroup((2, 2)), 4)])
def test_trivial_action_trivializations(G, expected):
    """Trivial action of G on Ising: trivializations are Hom(G, Z/2)."""
    ty = ising()
    act = trivial_action(ty.category, G)
    choices = {g: ones(ty.category) for g in G.elements()}
    autos = monoidal_id_autos(ty.fusion)
    b = obstruction_cocycle(act, choices, autos)
    assert b.is_identity()
    found = trivializations(act, choices, autos)
    assert len(found) == expected == count_homs(G, autos.group)
    assert {t.key() for t in found} == {t.key() for t in trivializations_direct(act, choices, autos)}


@pytest.mark.parametrize("G", [Z2, AbGroup((2, 2))])
def test_trivializations_form_a_torsor(G):
    """Any two trivializations differ by a homomorphism G -> Aut_(x)(Id)."""
    ty = ising()
    act = trivial_action(ty.category, G)
    autos = monoidal_id_autos(ty.fusion)
    choices = {g: ones(ty.category) for g in G.elements()}
    found = trivializations(act, choices, autos)
    for s, t in itertools.product(found, repeat=2):
        ratio = {g: autos.log({x: s.etas[g][x] * t.etas[g][x].inv() for x in ty.simples})
                 for g in G.elements()}
        for g, h in itertools.product(G.elements(), repeat=2):
            assert ratio[G.add(g, h)] == autos.group.add(ratio[g], ratio[h])


def test_choices_must_fix_simples():
    ty = make_ty(Z3, Bicharacter.parse(Z3, "[[1/3]]"), 1)
    act = z2_actions(ty)[0]
    choices = {g: ones(ty.category) for g in act.group.elements()}
    with pytest.raises(CoherenceError):
        obstruction_cocycle(act, choices)


def test_non_strict_action_has_nontrivial_obstruction_class():
    ty = ising()
    strict, other = z2_actions(ty)
    autos = monoidal_id_autos(ty.fusion)
    choices = {g: ones(ty.category) for g in strict.group.elements()}
    assert len(trivializations(strict, choices, autos)) == 2
    assert trivializations(other, choices, autos) == []
    assert trivializations_direct(other, choices, autos) == []


def test_ordinary_hexagons_on_pointed():
    A = AbGroup((2,))
    cat = PointedCat.trivial(A, 8)
    F = cat.field
    for value, holds in [(F.one(), True), (-F.one(), True), (F.root(4, 1), False)]:
        R = {(a, b, A.add(a, b)): (value if a == b == (1,) else F.one())
             for a in A.elements() for b in A.elements()}
        assert hexagon_report(ordinary(cat.category, R)).holds is holds
