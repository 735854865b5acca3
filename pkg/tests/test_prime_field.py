from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypermoment.errors import EvenPrime, NotPrime
from hypermoment.prime_field import (
    build_context,
    is_prime,
    legendre_symbol,
    prime_factors,
    primes_in_range,
    primitive_root,
    sqrt_mod,
)


def _trial_division(n):
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def test_is_prime_matches_trial_division():
    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if _trial_division(n)]


def test_is_prime_large():
    assert is_prime(10007)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2, 3, 5, 7


def test_prime_factors():
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(10006) == [2, 5003]


def test_primitive_root_small_values():
    # least primitive roots, by exhaustive order computation
    assert [primitive_root(p) for p in (3, 5, 7, 11, 13, 17, 19, 23, 41, 43)] == \
        [2, 2, 3, 2, 2, 3, 2, 5, 6, 3]


def test_primes_in_range_odd_only():
    assert primes_in_range(1, 20) == [3, 5, 7, 11, 13, 17, 19]


def test_context_rejects_bad_input():
    with pytest.raises(EvenPrime):
        build_context(2)
    with pytest.raises(NotPrime):
        build_context(15)


@pytest.mark.parametrize("p", [3, 5, 13, 101, 1009])
def test_context_tables_consistent(p):
    ctx = build_context(p)
    assert ctx.dlog[0] == -1
    assert sorted(ctx.power.tolist()) == list(range(1, p))
    assert np.array_equal(ctx.power[ctx.dlog[1:]], np.arange(1, p))
    euler = [0] + [1 if pow(x, (p - 1) // 2, p) == 1 else -1 for x in range(1, p)]
    assert ctx.legendre.tolist() == euler


def test_tables_are_read_only():
    ctx = build_context(13)
    with pytest.raises(ValueError):
        ctx.legendre[1] = 0


def test_legendre_symbol_values():
    ctx = build_context(7)
    assert [legendre_symbol(ctx, x) for x in range(7)] == [0, 1, 1, -1, 1, -1, -1]
    assert ctx.phi(-1) == -1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([5, 13, 97, 1009, 1033, 7919, 10007]), st.integers(0, 10 ** 6))
def test_sqrt_mod_squares_back(p, a):
    ctx = build_context(p)
    r = sqrt_mod(ctx, a)
    if ctx.legendre[a % p] == -1:
        assert r is None
    else:
        assert r * r % p == a % p
