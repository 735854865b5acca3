from __future__ import annotations

import cmath
import math

import numpy as np
import pytest

from hypermoment.characters import (
    char_value,
    characters_of_order_at_most,
    check_gauss_identities,
    check_jacobi_identities,
    gauss_table,
    jacobi_sum,
    order,
    round_exact,
    sign_at_minus_one,
)
from hypermoment.errors import PrecisionLoss
from hypermoment.prime_field import build_context, primes_in_range


def _direct_gauss(p, k):
    ctx = build_context(p)
    return sum(cmath.exp(2j * math.pi * k * ctx.dlog[x] / (p - 1)) * cmath.exp(2j * math.pi * x / p)
               for x in range(1, p))


@pytest.mark.parametrize("method", ["chirp", "numpy", "direct"])
def test_gauss_table_methods_agree(method):
    ctx = build_context(29)
    G = gauss_table(ctx, method).values
    ref = np.array([_direct_gauss(29, k) for k in range(28)])
    assert np.allclose(G, ref, atol=1e-8)


@pytest.mark.parametrize("p", [5, 7, 11, 13, 101, 103])
def test_quadratic_gauss_sum(p):
    # classical evaluation: sqrt(p) for p = 1 mod 4, i*sqrt(p) for p = 3 mod 4
    G = gauss_table(build_context(p)).values
    expected = math.sqrt(p) if p % 4 == 1 else 1j * math.sqrt(p)
    assert abs(G[(p - 1) // 2] - expected) < 1e-8


def test_trivial_gauss_sum():
    assert abs(gauss_table(build_context(31)).values[0] + 1) < 1e-12


def test_character_orders():
    ctx = build_context(13)
    assert [order(ctx, k) for k in range(12)] == [1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12]
    assert characters_of_order_at_most(ctx, 3) == [0, 4, 6, 8]
    assert sign_at_minus_one(ctx, 3) == -1
    assert char_value(ctx, 6, 2) == pytest.approx(-1)


def test_jacobi_sum_matches_direct_sum():
    p = 7
    ctx = build_context(p)
    for a, b in [(2, 2), (2, 4), (3, 3), (1, 2), (0, 3)]:
        direct = sum(char_value(ctx, a, x) * char_value(ctx, b, 1 - x) for x in range(2, p))
        assert abs(jacobi_sum(ctx, a, b).embed() - direct) < 1e-9


def test_quadratic_jacobi_sum():
    for p in (5, 7, 11, 13):
        ctx = build_context(p)
        h = (p - 1) // 2
        assert jacobi_sum(ctx, h, h).to_int() == -ctx.phi(-1)


def test_cubic_jacobi_norm():
    # p = 7 = a^2 - ab + b^2; the cubic Jacobi sum has norm 7
    ctx = build_context(7)
    J = jacobi_sum(ctx, 2, 2)
    assert (J * J.conj()).to_int() == 7


def test_round_exact_rule():
    assert round_exact(4.00001) == 4
    assert round_exact(-3 + 1e-7j) == -3
    with pytest.raises(PrecisionLoss):
        round_exact(2.5)
    with pytest.raises(PrecisionLoss):
        round_exact(1.0 + 0.01j)


@pytest.mark.parametrize("p", primes_in_range(5, 60))
def test_identity_suites(p):
    ctx = build_context(p)
    G = gauss_table(ctx)
    rg = check_gauss_identities(ctx, G)
    rj = check_jacobi_identities(ctx, G)
    assert rg.checked > 0 and rj.checked > 0
    assert rg.max_deviation < 1e-6 * p ** 3
    assert rj.max_deviation < 1e-6 * p
