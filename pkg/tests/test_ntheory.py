import random
from math import gcd

import pytest

from m24moonshine.ntheory import (
    divisor_count,
    divisors,
    factorize,
    gamma0_index,
    kronecker,
    primes_below,
    sigma1,
    sqrts_mod,
)


def test_factorize_roundtrip():
    random.seed(0)
    for _ in range(200):
        n = random.randint(1, 400000)
        fac = factorize(n)
        prod = 1
        for p, e in fac.items():
            prod *= p**e
        assert prod == n


def test_divisors_and_sigma():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisor_count(12) == 6
    assert sigma1(12) == 28
    assert sigma1(1) == 1


def test_gamma0_index_values():
    # index of Gamma0(prod p^a) = prod (p+1) p^(a-1)
    assert gamma0_index(1) == 1
    assert gamma0_index(6) == 12
    assert gamma0_index(16) == 24
    assert gamma0_index(63) == 96
    assert gamma0_index(144) == 288
    assert gamma0_index(720) == 1728


def test_kronecker_matches_euler_criterion():
    for p in primes_below(200):
        if p == 2:
            continue
        for a in range(1, p):
            euler = pow(a, (p - 1) // 2, p)
            want = 1 if euler == 1 else -1
            assert kronecker(a, p) == want


def test_kronecker_multiplicativity():
    random.seed(1)
    for _ in range(300):
        a = random.randint(-50, 50)
        m = random.randint(1, 60)
        n = random.randint(1, 60)
        assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


@pytest.mark.parametrize("m", [1, 2, 4, 8, 16, 64, 3, 9, 27, 5, 25, 12, 24, 360, 368])
def test_sqrts_mod_exhaustive(m):
    for a in range(m):
        want = sorted(x for x in range(m) if (x * x - a) % m == 0)
        assert sqrts_mod(a, m) == want


def test_sqrts_mod_large_random():
    random.seed(2)
    for _ in range(300):
        m = random.randint(2, 5000)
        a = random.randint(0, m - 1)
        roots = sqrts_mod(a, m)
        for x in roots:
            assert (x * x - a) % m == 0
        # spot-check completeness against a brute pass
        brute = sum(1 for x in range(m) if (x * x - a) % m == 0)
        assert len(roots) == brute
