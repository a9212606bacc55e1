import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedcat.abgroup import AbGroup
from crossedcat.cohomology import (
    Cochain,
    CochainError,
    class_count_exhaustive,
    cochain_from_json,
    cochain_to_json,
    cohomology_group,
    differential,
    is_coboundary,
    is_cocycle,
    mu,
    random_coboundary,
    random_cochain,
    same_class,
)

small_groups = st.sampled_from([(2,), (3,), (4,), (2, 2), (6,)])
coeffs = st.sampled_from([2, 3, 4, 6, 8, 12])


@given(small_groups, coeffs, st.integers(1, 3), st.integers(0, 10**6))
@settings(max_examples=40)
def test_d_squared_is_zero(facs, L, n, seed):
    G, M = AbGroup(facs), mu(L)
    c = random_cochain(n, G, M, random.Random(seed))
    assert differential(differential(c)).is_identity()


@given(small_groups, coeffs, st.integers(2, 3), st.integers(0, 10**6))
@settings(max_examples=40)
def test_coboundaries_have_verified_primitives(facs, L, n, seed):
    G, M = AbGroup(facs), mu(L)
    b = random_coboundary(n, G, M, random.Random(seed))
    assert is_cocycle(b)
    p = is_coboundary(b)
    assert p is not None and differential(p) == b


@pytest.mark.parametrize("facs,L,n", [((2,), 2, 2), ((2,), 4, 3), ((3,), 3, 2), ((3,), 3, 3),
                                      ((4,), 2, 2), ((2, 2), 2, 2), ((2,), 8, 3)])
def test_group_order_matches_exhaustive_count(facs, L, n):
    G, M = AbGroup(facs), mu(L)
    assert cohomology_group(G, M, n).order == class_count_exhaustive(G, M, n)


@pytest.mark.parametrize("n,L", [(2, 8), (3, 18), (4, 32), (5, 50), (6, 72), (4, 6)])
def test_cyclic_groups(n, L):
    G = AbGroup((n,))
    for deg in (2, 3):
        H = cohomology_group(G, mu(L), deg)
        assert H.order == gcd(n, L)


def test_klein_four():
    V = AbGroup((2, 2))
    assert cohomology_group(V, mu(2), 2).divisors == (2, 2, 2)
    assert cohomology_group(V, mu(16), 3).order == 16


@pytest.mark.parametrize("facs,L", [((2,), 8), ((3,), 18), ((2, 2), 16), ((4,), 32)])
def test_representatives_are_pairwise_distinct_classes(facs, L):
    H = cohomology_group(AbGroup(facs), mu(L), 3)
    reps = H.representatives()
    assert len(reps) == H.order
    assert all(is_cocycle(r) for r in reps)
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert not same_class(a, b)


@given(small_groups, st.integers(0, 10**6))
@settings(max_examples=20)
def test_snf_and_exhaustive_agree(facs, seed):
    G, M = AbGroup(facs), mu(2)
    if G.order > 4:
        return
    rng = random.Random(seed)
    H = cohomology_group(G, M, 2)
    reps = H.representatives()
    c = rng.choice(reps) + random_coboundary(2, G, M, rng)
    snf = is_coboundary(c) is not None
    exh = is_coboundary(c, method="exhaustive") is not None
    assert snf == exh


@given(small_groups, coeffs, st.integers(0, 10**6))
@settings(max_examples=30)
def test_json_round_trip(facs, L, seed):
    c = random_cochain(3, AbGroup(facs), mu(L), random.Random(seed))
    assert cochain_from_json(cochain_to_json(c)) == c


def test_rejects_bad_input():
    G = AbGroup((2,))
    with pytest.raises(CochainError):
        Cochain(2, G, mu(2), {((0,), (1,)): (1,)})
    with pytest.raises(CochainError):
        is_coboundary(Cochain(3, G, mu(4), {((1,), (1,), (1,)): (1,)}))
    with pytest.raises(CochainError):
        cochain_from_json({"group": [2], "coeff_order": 4,
                           "entries": [{"args": [[1], [1], [1]], "value": {"order": 8, "exp": 1}}]})


def test_sign_cocycle_on_z2_is_not_a_coboundary():
    G, M = AbGroup((2,)), mu(4)
    omega = Cochain(3, G, M, {((1,), (1,), (1,)): (2,)})
    assert is_cocycle(omega)
    assert is_coboundary(omega) is None
    assert is_coboundary(omega, method="exhaustive") is None
    assert not same_class(omega, Cochain.identity(3, G, M))
    assert class_count_exhaustive(AbGroup((2,)), mu(2), 2) == 2
