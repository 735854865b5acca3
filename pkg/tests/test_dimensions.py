from __future__ import annotations

from math import gcd

import pytest

from hypermoment.dimensions import cusp_form_dimension, group_data


def _prime_factors(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def _phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def _gamma0_closed(N):
    index = N
    for q in _prime_factors(N):
        index = index * (q + 1) // q
    cusps = sum(_phi(gcd(d, N // d)) for d in range(1, N + 1) if N % d == 0)
    e2 = 0 if N % 4 == 0 else _prod(1 + _legendre(-1, q) for q in _prime_factors(N))
    e3 = 0 if N % 9 == 0 else _prod(1 + _legendre(-3, q) for q in _prime_factors(N))
    return index, e2, e3, cusps


def _legendre(a, q):
    # Kronecker symbol (-4/q) for a = -1 and (-3/q) for a = -3
    if q == 2:
        return 0 if a == -1 else -1
    if q == 3 and a == -3:
        return 0
    if a % q == 0:
        return 0
    return 1 if pow(a % q, (q - 1) // 2, q) == 1 else -1


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


@pytest.mark.parametrize("N", range(1, 31))
def test_gamma0_invariants_match_closed_forms(N):
    gd = group_data("Gamma0", N)
    assert (gd.index, gd.e2, gd.e3, gd.cusps) == _gamma0_closed(N)


@pytest.mark.parametrize("N", range(5, 21))
def test_gamma1_invariants_match_closed_forms(N):
    gd = group_data("Gamma1", N)
    index = N * N
    for q in _prime_factors(N):
        index = index * (q * q - 1) // (q * q)
    cusps = sum(_phi(d) * _phi(N // d) for d in range(1, N + 1) if N % d == 0) // 2
    assert (gd.index, gd.e2, gd.e3, gd.cusps) == (index // 2, 0, 0, cusps)


def test_small_level_dimensions():
    assert [cusp_form_dimension("Gamma0", 1, k) for k in range(2, 27, 2)] == \
        [0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1]
    assert [cusp_form_dimension("Gamma0", 2, k) for k in range(2, 13)] == \
        [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 2]
    assert [cusp_form_dimension("Gamma1", 4, k) for k in range(2, 13)] == \
        [0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4]
    assert [cusp_form_dimension("Gamma1", 3, k) for k in range(2, 9)] == [0, 0, 0, 0, 1, 1, 1]
    assert cusp_form_dimension("Gamma0", 4, 6) == 1
    assert cusp_form_dimension("Gamma0", 8, 4) == 1
    assert cusp_form_dimension("Gamma0", 11, 2) == 1


def test_irregular_cusp_of_gamma1_4():
    gd = group_data("Gamma1", 4)
    assert (gd.cusps_regular, gd.cusps_irregular, gd.contains_minus_one) == (2, 1, False)
    assert cusp_form_dimension("Gamma0", 4, 5) == 0  # -1 in Gamma0(4) kills odd weight
