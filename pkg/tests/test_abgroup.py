import itertools
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossedcat.abgroup import AbGroup, GroupError, count_homs, homs, invariant_factors

orders = st.lists(st.integers(1, 6), min_size=0, max_size=3)


@pytest.mark.parametrize("orders,expected", [
    ((2, 3), (6,)),
    ((4, 2), (2, 4)),
    ((2, 2, 2), (2, 2, 2)),
    ((6, 4), (2, 12)),
    ((1, 1), ()),
])
def test_invariant_factors(orders, expected):
    assert invariant_factors(orders) == expected


@given(orders)
def test_invariant_factors_divisibility_and_order(os):
    facs = invariant_factors(os)
    assert all(b % a == 0 for a, b in zip(facs, facs[1:]))
    assert all(f > 1 for f in facs)
    prod = 1
    for n in os:
        prod *= n
    assert AbGroup(facs).order == prod


@pytest.mark.parametrize("text,facs", [("2,2", (2, 2)), ("4", (4,)), ("2x4", (2, 4)), ("1", ()), ("", ())])
def test_parse(text, facs):
    assert AbGroup.parse(text).invariant_factors == facs


@pytest.mark.parametrize("text", ["2,x", "a", "2,,2", "-3", "0"])
def test_parse_rejects(text):
    with pytest.raises(GroupError):
        AbGroup.parse(text)


@given(orders)
def test_group_laws(os):
    A = AbGroup.from_orders(*os)
    els = A.elements()
    assert els[0] == A.identity and len(els) == A.order == len(set(els))
    for x, y in itertools.product(els[:6], repeat=2):
        assert A.add(x, y) == A.add(y, x)
        assert A.add(x, A.neg(x)) == A.identity
        assert A.sub(A.add(x, y), y) == x
        assert A.exponent % A.order_of(x) == 0
        assert A.mul(A.order_of(x), x) == A.identity


@pytest.mark.parametrize("facs,n", [((2,), 1), ((3,), 2), ((4,), 2), ((2, 2), 6), ((8,), 4),
                                    ((2, 4), 8), ((2, 2, 2), 168), ((5,), 4), ((6,), 2)])
def test_automorphism_counts(facs, n):
    assert len(AbGroup(facs).automorphisms()) == n


@given(orders, orders)
def test_hom_count_formula_matches_enumeration(a, b):
    A, B = AbGroup.from_orders(*a), AbGroup.from_orders(*b)
    hs = homs(A, B)
    assert len(hs) == count_homs(A, B)
    assert len({h.images for h in hs}) == len(hs)
    for h in hs[:5]:
        for x, y in itertools.product(A.elements()[:4], repeat=2):
            assert h(A.add(x, y)) == B.add(h(x), h(y))


@given(orders)
def test_characters_are_homomorphisms(os):
    A = AbGroup.from_orders(*os)
    chars = A.characters()
    assert len(chars) == A.order
    for c in chars[:4]:
        for x, y in itertools.product(A.elements()[:4], repeat=2):
            assert c(A.add(x, y)) == (c(x) + c(y)) % 1


def test_character_group_is_dual():
    A = AbGroup((2, 4))
    table = {c.exps: tuple(c(x) for x in A.elements()) for c in A.characters()}
    assert len(set(table.values())) == A.order


def test_membership_and_bounds():
    A = AbGroup((2, 4))
    assert A.contains((1, 3)) and not A.contains((2, 0)) and not A.contains((1,))
    with pytest.raises(GroupError):
        A.check((0, 4))
    with pytest.raises(GroupError):
        AbGroup((2, 3))
    assert A.is_elementary_2() is False and AbGroup((2, 2)).is_elementary_2()
    assert gcd(A.exponent, 4) == 4
