"""Solver, CRT, centered residues, primality, and factorization."""

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from foursquares import (
    FactorizationError,
    centered_residue,
    crt,
    factorize,
    is_prime,
    primes_below,
    solve_two_square_minus_one,
)
from foursquares.oracle import brute_solve_two_square_minus_one


@pytest.mark.parametrize("p, expected", [(3, (1, 1)), (5, (2, 0)), (7, (3, 2))])
def test_solver_small_primes(p, expected):
    x, y = solve_two_square_minus_one(p)
    assert (x, y) == expected
    assert (x * x + y * y + 1) % p == 0


def test_solver_rejects_composites_and_two():
    with pytest.raises(ValueError):
        solve_two_square_minus_one(9)
    with pytest.raises(ValueError):
        solve_two_square_minus_one(2)


def test_solver_agrees_with_scan_oracle():
    for p in primes_below(5000):
        if p == 2:
            continue
        assert solve_two_square_minus_one(p) == brute_solve_two_square_minus_one(p)


def test_solver_bounds_hold_up_to_2000():
    for p in primes_below(2000):
        if p == 2:
            continue
        x, y = solve_two_square_minus_one(p)
        assert 0 <= x <= (p - 1) // 2
        assert 0 <= y <= (p - 1) // 2
        assert (x * x + y * y + 1) % p == 0


def test_crt_examples():
    assert crt([(1, 3), (2, 5)]) == 7
    assert crt([(0, 77)]) == 0
    assert crt([(1, 2), (1, 3), (1, 5)]) == 1


def test_crt_rejects_common_factor():
    with pytest.raises(ValueError):
        crt([(0, 6), (1, 4)])


def test_crt_rejects_bad_modulus():
    with pytest.raises(ValueError):
        crt([(1, 0)])


@given(
    st.lists(
        st.tuples(st.integers(-1000, 1000), st.sampled_from([2, 3, 5, 7, 11, 13])),
        max_size=6,
        unique_by=lambda pair: pair[1],
    )
)
def test_crt_solution_satisfies_all_congruences(congruences):
    solution = crt(congruences)
    product = math.prod(m for _, m in congruences)
    assert 0 <= solution < product
    for residue, modulus in congruences:
        assert solution % modulus == residue % modulus


@pytest.mark.parametrize(
    "value, modulus, f, r",
    [(7, 3, 1, 2), (5, 2, 1, 2), (0, 9, 0, 0), (-7, 4, 1, -2), (10, 4, 2, 2)],
)
def test_centered_residue_examples(value, modulus, f, r):
    got = centered_residue(value, modulus)
    assert (got.value, got.quotient) == (f, r)


def test_centered_residue_rejects_bad_modulus():
    with pytest.raises(ValueError):
        centered_residue(3, 0)


def test_centered_residue_roundtrip_bulk():
    rng = random.Random(2024)
    for _ in range(100_000):
        value = rng.randrange(-(10**9), 10**9)
        modulus = rng.randrange(1, 10**6)
        got = centered_residue(value, modulus)
        assert got.value + modulus * got.quotient == value
        assert -modulus < 2 * got.value <= modulus


@given(st.integers(-(10**12), 10**12), st.integers(1, 10**9))
def test_centered_residue_roundtrip(value, modulus):
    got = centered_residue(value, modulus)
    assert got.value + modulus * got.quotient == value
    assert -modulus < 2 * got.value <= modulus
    if modulus % 2:
        assert abs(got.value) <= (modulus - 1) // 2


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(60) == [(2, 2), (3, 1), (5, 1)]
    assert factorize(2**32 + 1) == [(641, 1), (6700417, 1)]


def test_factorize_rejects_zero():
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_capability_error_is_loud():
    stubborn = (2**61 - 1) * (2**89 - 1)
    with pytest.raises(FactorizationError):
        factorize(stubborn, max_split_steps=50)


def test_factorize_is_deterministic_on_large_semiprime():
    n = 1_000_003 * 1_000_033
    assert factorize(n) == [(1_000_003, 1), (1_000_033, 1)]
    assert factorize(n) == factorize(n, seed=0)


@pytest.mark.parametrize(
    "n, expected",
    [(0, False), (1, False), (2, True), (12, False), (641, True), (6700417, True)],
)
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_sieve_below_10000():
    sieved = set(primes_below(10_000))
    for n in range(10_000):
        assert is_prime(n) == (n in sieved)


@given(st.integers(2, 10**12))
def test_factorize_recomposes_and_factors_are_prime(n):
    factors = factorize(n)
    assert math.prod(p**e for p, e in factors) == n
    assert all(is_prime(p) for p, _ in factors)
    assert all(e >= 1 for _, e in factors)
    assert all(a < b for (a, _), (b, _) in zip(factors, factors[1:]))
