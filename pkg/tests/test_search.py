import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedcat.cyclotomic import cyclotomic_field
from crossedcat.search import Poly, Problem, solve

F = cyclotomic_field(8)


def test_poly_arithmetic():
    p = Problem(F, 8)
    x, y = p.unknown("x"), p.unknown("y")
    assert (x * y) * y.inv() == x
    assert (x + y) * (x - y) == x * x - y * y
    assert (x - x).is_zero()
    assert 2 * x == x + x
    with pytest.raises(ZeroDivisionError):
        (x + y).inv()
    assert p.unknown("x") == x and p.labels == ["x", "y"]


def test_field_must_contain_roots():
    with pytest.raises(ValueError):
        Problem(F, 16)


def test_square_roots_of_minus_one():
    p = Problem(F, 8)
    x = p.unknown("x")
    p.equate(x * x, -1)
    sols, stats = solve(p)
    assert sorted(s["x"].root_exponent() for s in sols) == [0.25, 0.75]
    assert stats.congruences == 1


def test_one_term_equation_is_infeasible():
    p = Problem(F, 8)
    x = p.unknown("x")
    p.equate(x, 0)
    assert solve(p)[0] == []


def test_three_term_equation():
    # on mu_24 the only solutions of x + y + 1 = 0 are the two primitive cube-root pairs
    p = Problem(cyclotomic_field(24), 24)
    x, y = p.unknown("x"), p.unknown("y")
    p.equate(x + y + 1, 0)
    sols, _ = solve(p)
    assert len(sols) == 2
    for s in sols:
        assert s["x"] + s["y"] + 1 == 0


monomial_eq = st.tuples(
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
    st.lists(st.integers(-3, 3), min_size=3, max_size=3),
    st.integers(0, 7),
)


@given(st.lists(monomial_eq, min_size=1, max_size=3), st.booleans())
@settings(max_examples=60)
def test_solve_matches_exhaustion(eqs, with_sum):
    K = 8
    p = Problem(F, K)
    xs = [p.unknown(i) for i in range(3)]

    def mono(exps):
        m = Poly(F, {(): F.one()})
        for v, e in zip(xs, exps):
            for _ in range(abs(e)):
                m = m * (v if e > 0 else v.inv())
        return m

    for e1, e2, r in eqs:
        p.equate(mono(e1), F.root(K, r) * mono(e2))
    if with_sum:
        p.equate(xs[0] + xs[1], xs[2] * (F.root(8, 1) + F.root(8, 3)))
    sols, _ = solve(p)
    got = sorted(tuple(s[i].root_exponent() for i in range(3)) for s in sols)
    expected = []
    for vals in itertools.product(range(K), repeat=3):
        assign = [F.root(K, v) for v in vals]
        if all(_eval(e1, assign) == F.root(K, r) * _eval(e2, assign) for e1, e2, r in eqs):
            if with_sum and assign[0] + assign[1] != assign[2] * (F.root(8, 1) + F.root(8, 3)):
                continue
            expected.append(tuple(a.root_exponent() for a in assign))
    assert got == sorted(expected)


def _eval(exps, assign):
    out = F.one()
    for a, e in zip(assign, exps):
        out = out * a ** e
    return out
