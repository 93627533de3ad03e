import random

import pytest
from hypothesis import given, settings, strategies as st

from jacobi_modsym.arith import (
    divisors,
    is_fundamental_discriminant,
    is_prime,
    is_square,
    kronecker,
    sqrt_classes_mod,
)
from oracles import kronecker_reference


@pytest.mark.parametrize("a,n,expected", [(-3, 2, -1), (-4, 37, 1), (1, 7, 1), (1, -5, 1), (5, 0, 0), (-1, 0, 1),
                                          (3, -1, 1), (-3, -1, -1), (0, 1, 1), (0, 2, 0), (2, 4, 0)])
def test_kronecker_examples(a, n, expected):
    assert kronecker(a, n) == expected


@settings(max_examples=300, deadline=None)
@given(st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_kronecker_matches_factorization_oracle(a, n):
    assert kronecker(a, n) == kronecker_reference(a, n)


@settings(max_examples=200, deadline=None)
@given(st.integers(-1000, 1000), st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_kronecker_multiplicative_in_numerator(a1, a2, n):
    assert kronecker(a1 * a2, n) == kronecker(a1, n) * kronecker(a2, n)


def test_kronecker_euler_criterion():
    for p in [3, 5, 7, 11, 13, 37, 101]:
        for a in range(-50, 50):
            if a % p:
                e = pow(a % p, (p - 1) // 2, p)
                assert kronecker(a, p) == (1 if e == 1 else -1)


def test_is_square():
    assert is_square(16) and is_square(0) and is_square(1)
    assert not is_square(12) and not is_square(-4)
    assert is_square(10 ** 40) and not is_square(10 ** 40 + 1)


def test_fundamental_discriminants():
    assert is_fundamental_discriminant(-4) and is_fundamental_discriminant(-3)
    assert not is_fundamental_discriminant(-12)
    assert is_fundamental_discriminant(1)
    negatives = [d for d in range(-60, 0) if is_fundamental_discriminant(d)]
    assert negatives == [-59, -56, -55, -52, -51, -47, -43, -40, -39, -35, -31, -24, -23,
                         -20, -19, -15, -11, -8, -7, -4, -3]
    positives = [d for d in range(2, 45) if is_fundamental_discriminant(d)]
    assert positives == [5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41, 44]


def test_sqrt_classes_examples():
    assert 12 in sqrt_classes_mod(-4, 37)
    assert 21 in sqrt_classes_mod(-3, 37)
    assert sqrt_classes_mod(1, 1) == [1]


@settings(max_examples=200, deadline=None)
@given(st.integers(-500, 500), st.integers(1, 60))
def test_sqrt_classes_brute_force(D, m):
    got = sqrt_classes_mod(D, m)
    assert got == [r for r in range(2 * m) if (r * r - D) % (4 * m) == 0]


def test_primes_and_divisors():
    small = [n for n in range(100) if is_prime(n)]
    assert small == [n for n in range(2, 100) if all(n % d for d in range(2, n))]
    assert is_prime(2 ** 61 - 1) and not is_prime(2 ** 61 + 1)
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 5000)
        assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
