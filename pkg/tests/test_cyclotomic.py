import cmath
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crossedcat.cyclotomic import (
    CyclotomicError,
    cyclotomic_field,
    cyclotomic_polynomial,
    from_json,
    lift,
    sqrt_of_natural,
    square_roots_unitary,
    to_json,
)

F = cyclotomic_field(24)
small = st.integers(-4, 4)
elements = st.lists(small, min_size=1, max_size=24).map(F.from_coeffs)
fractions = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))


def close(x, z: complex) -> bool:
    return abs(complex(x) - z) < 1e-9


def totient(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 12, 15, 16, 24, 30, 48])
def test_cyclotomic_polynomial_degree_and_roots(n):
    poly = cyclotomic_polynomial(n)
    assert len(poly) - 1 == totient(n)
    z = cmath.exp(2j * cmath.pi / n)
    assert abs(sum(c * z**k for k, c in enumerate(poly))) < 1e-8


@given(elements, elements, elements)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == F.zero()


@given(elements)
@settings(max_examples=60, deadline=None)
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inv()
    else:
        assert x * x.inv() == F.one()


@given(elements, elements)
@settings(max_examples=60, deadline=None)
def test_complex_embedding_is_a_ring_map(x, y):
    assert close(x * y, complex(x) * complex(y))
    assert close(x + y, complex(x) + complex(y))
    assert close(x.conj(), complex(x).conjugate())


@given(elements, st.sampled_from([1, 5, 7, 11, 13, 17, 19, 23]))
@settings(max_examples=40, deadline=None)
def test_galois_is_multiplicative(x, k):
    y = F.root(24, 5) + x
    assert (x * y).galois(k) == x.galois(k) * y.galois(k)


@given(elements)
@settings(max_examples=40, deadline=None)
def test_norm_is_rational(x):
    n = x.norm()
    assert isinstance(n, Fraction)
    assert (n == 0) == x.is_zero()


@given(st.integers(1, 24), st.integers(-50, 50))
def test_roots_of_unity(order, k):
    if 24 % order:
        return
    z = F.root(order, k)
    assert z ** order == F.one()
    assert z.root_exponent() == Fraction(k, order) % 1
    assert close(z, cmath.exp(2j * cmath.pi * k / order))


@given(fractions)
def test_from_phase_round_trip(r):
    field = cyclotomic_field(2 * r.denominator if r.denominator % 2 else r.denominator)
    z = field.from_phase(r)
    assert z.root_exponent() == r % 1
    assert from_json(to_json(z)).root_exponent() == r % 1


@given(elements)
@settings(max_examples=40, deadline=None)
def test_json_round_trip(x):
    assert from_json(to_json(x), F) == x


def test_non_root_of_unity_has_no_exponent():
    assert (F.one() + F.one()).root_exponent() is None
    assert F.zero().root_exponent() is None


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 8])
def test_sqrt_of_natural(n):
    field = cyclotomic_field(4 * n * 2)
    s = sqrt_of_natural(field, n)
    assert s * s == n
    assert close(s, n ** 0.5)


def test_sqrt_needs_large_enough_conductor():
    with pytest.raises(CyclotomicError):
        sqrt_of_natural(cyclotomic_field(8), 3)


def test_square_roots_unitary():
    field = cyclotomic_field(16)
    z = field.root(8, 3)
    roots = square_roots_unitary(z, 16)
    assert len(roots) == 2 and all(r * r == z for r in roots)
    assert square_roots_unitary(field.root(16, 1), 16) == []


@given(elements, elements)
@settings(max_examples=30, deadline=None)
def test_lift_is_a_ring_map(x, y):
    assert lift(x * y, 48) == lift(x, 48) * lift(y, 48)
    assert close(lift(x, 72), complex(x))


def test_mixed_fields_rejected():
    with pytest.raises(CyclotomicError):
        cyclotomic_field(8).one() + cyclotomic_field(12).one()
