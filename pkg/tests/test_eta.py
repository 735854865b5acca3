from __future__ import annotations

import pytest

from hypermoment.errors import InsufficientTerms
from hypermoment.eta import (
    DELTA,
    LEVEL2_WT8,
    LEVEL3_WT6,
    LEVEL4_WT5,
    LEVEL4_WT6,
    LEVEL8_WT4,
    EtaProduct,
    eta_ap,
    pentagonal_series,
)
from hypermoment.prime_field import primes_in_range


def _naive_expand(factors, terms):
    """Multiply out prod_n (1 - q^(d n))^r term by term, then shift by the leading power."""
    series = [1] + [0] * (terms - 1)
    for d, r in factors:
        for _ in range(r):
            for n in range(1, terms):
                step = d * n
                if step >= terms:
                    break
                for i in range(terms - 1, step - 1, -1):
                    series[i] -= series[i - step]
    lead = sum(d * r for d, r in factors) // 24
    return [0] * lead + series[:terms - lead]


@pytest.mark.parametrize("form", [DELTA, LEVEL2_WT8, LEVEL3_WT6, LEVEL4_WT6, LEVEL8_WT4, LEVEL4_WT5])
def test_expansion_matches_naive_product(form):
    assert list(form.coefficients(60)) == _naive_expand(form.factors, 60)


def test_ramanujan_tau():
    assert list(DELTA.coefficients(8)) == [0, 1, -24, 252, -1472, 4830, -6048, -16744]


def test_pentagonal():
    dense = [0] * 30
    for e, c in pentagonal_series(30):
        dense[e] = c
    assert pentagonal_series(13) == ((0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1))


def test_weights_and_leading_terms():
    assert LEVEL2_WT8.weight == 8 and LEVEL4_WT5.weight == 5
    assert LEVEL2_WT8.coefficients(3)[1] == 1
    with pytest.raises(ValueError):
        EtaProduct(((1, 1),))


def test_insufficient_terms():
    with pytest.raises(InsufficientTerms):
        eta_ap(DELTA, 7, 7)


@pytest.mark.parametrize("form", [LEVEL2_WT8, LEVEL3_WT6, LEVEL4_WT6, LEVEL8_WT4, LEVEL4_WT5])
def test_deligne_bound(form):
    k = float(form.weight)
    for p in primes_in_range(5, 199):
        assert abs(eta_ap(form, p, 200)) <= 2 * p ** ((k - 1) / 2)
