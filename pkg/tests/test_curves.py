from __future__ import annotations

import numpy as np
import pytest

from hypermoment.curves import (
    CLAUSEN,
    D3,
    D4,
    D6,
    LEGENDRE,
    count_points,
    count_points_naive,
    family,
    frobenius_trace,
    frobenius_traces,
    singular_lambdas,
)
from hypermoment.errors import SingularLambda, SmallPrime
from hypermoment.prime_field import build_context, primes_in_range

# Traces for lambda = 2..p-1 from an independent double loop over (x, y) on the
# raw Weierstrass equations.
LEGENDRE_13 = [6, -2, -2, -2, 2, -6, 2, -2, -2, -2, 6]
D3_11 = [3, 3, 0, 6, 0, -6, 0, -3, -3]
D4_11 = [2, 4, -4, 0, -6, 0, -4, 4, 2]
D6_11 = [-3, -5, 4, 2, 0, -2, -4, 5, 3]


@pytest.mark.parametrize("fam,p,expected", [(LEGENDRE, 13, LEGENDRE_13), (D3, 11, D3_11),
                                            (D4, 11, D4_11), (D6, 11, D6_11)])
def test_frozen_traces(fam, p, expected):
    ctx = build_context(p)
    assert [frobenius_trace(fam, lam, ctx) for lam in range(2, p)] == expected
    assert frobenius_traces(fam, ctx)[2:].tolist() == expected


@pytest.mark.parametrize("fam", [LEGENDRE, D3, D4, D6, CLAUSEN])
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_count_matches_naive(fam, p):
    ctx = build_context(p)
    bad = set(singular_lambdas(fam, ctx))
    for lam in range(p):
        if lam not in bad:
            assert count_points(fam, lam, ctx) == count_points_naive(fam, lam, p)


@pytest.mark.parametrize("fam", [LEGENDRE, D3, D4, D6])
def test_singular_set(fam):
    for p in primes_in_range(5, 80):
        assert singular_lambdas(fam, build_context(p)) == [0, 1]


def test_clausen_singular_set():
    ctx = build_context(13)
    assert singular_lambdas(CLAUSEN, ctx) == [0, 12]


def test_errors():
    with pytest.raises(SingularLambda):
        frobenius_trace(LEGENDRE, 1, build_context(7))
    with pytest.raises(SmallPrime):
        frobenius_trace(D3, 2, build_context(3))


def test_hasse_bound():
    for p in (101, 211):
        ctx = build_context(p)
        for d in (2, 3, 4, 6):
            a = frobenius_traces(family(d), ctx)[2:]
            assert np.all(np.abs(a) <= 2 * np.sqrt(p))
