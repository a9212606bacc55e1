import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from crossedcat.intlinalg import (
    all_solutions_mod,
    factor_prime_powers,
    matmul,
    smith_normal_form,
    solve_mod,
    solve_mod_fast,
)

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)))


@given(matrices)
@settings(max_examples=80, deadline=None)
def test_smith_normal_form(m):
    snf = smith_normal_form(m)
    assert matmul(matmul(snf.U, m), snf.V) == snf.S
    n_r, n_c = len(m), len(m[0])
    assert matmul(snf.U, snf.Uinv) == [[int(i == j) for j in range(n_r)] for i in range(n_r)]
    assert matmul(snf.V, snf.Vinv) == [[int(i == j) for j in range(n_c)] for i in range(n_c)]
    d = snf.diagonal
    assert all(x >= 0 for x in d)
    assert all(b % a == 0 for a, b in zip(d, d[1:]) if a)
    for i, row in enumerate(snf.S):
        for j, v in enumerate(row):
            assert i == j or v == 0


def brute(m, rhs, modulus):
    cols = len(m[0])
    return sorted(x for x in itertools.product(range(modulus), repeat=cols)
                  if all(sum(a * b for a, b in zip(row, x)) % modulus == r % modulus
                         for row, r in zip(m, rhs)))


@given(matrices, st.data(), st.sampled_from([2, 4, 6, 8, 9, 12]))
@settings(max_examples=80, deadline=None)
def test_congruence_solvers_against_brute_force(m, data, modulus):
    if modulus ** len(m[0]) > 5000:
        return
    rhs = data.draw(st.lists(st.integers(0, modulus - 1), min_size=len(m), max_size=len(m)))
    expected = brute(m, rhs, modulus)
    assert all_solutions_mod(m, rhs, modulus, len(m[0])) == expected
    for solver in (solve_mod, solve_mod_fast):
        x = solver(m, rhs, modulus)
        if expected:
            assert tuple(x) in expected
        else:
            assert x is None


@given(st.integers(1, 10**5))
def test_factor_prime_powers(n):
    prod = 1
    for p, k in factor_prime_powers(n):
        assert all(p % q for q in range(2, int(p ** 0.5) + 1))
        prod *= p**k
    assert prod == n
