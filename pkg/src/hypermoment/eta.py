"""q-expansions of eta products, used as Hecke eigenvalue oracles.

``prod eta(delta*tau)^r`` is expanded through Euler's pentagonal number
theorem, ``prod_n (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2)``, and exact
integer series multiplication.  When the product is a normalized newform
spanning a one-dimensional cusp space, its q^p coefficient is the trace of
T_p on that space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InsufficientTerms


@lru_cache(maxsize=None)
def pentagonal_series(terms: int) -> tuple[tuple[int, int], ...]:
    """Sparse ``(exponent, coefficient)`` list of prod (1 - q^n) below q^terms."""
    out = {0: 1}
    k = 1
    while True:
        e1 = k * (3 * k - 1) // 2
        if e1 >= terms:
            break
        sign = -1 if k % 2 else 1
        out[e1] = sign
        e2 = k * (3 * k + 1) // 2
        if e2 < terms:
            out[e2] = sign
        k += 1
    return tuple(sorted(out.items()))


def _mul_sparse(dense: list[int], sparse, terms: int) -> list[int]:
    out = [0] * terms
    for e, c in sparse:
        if e >= terms:
            break
        for i in range(terms - e):
            v = dense[i]
            if v:
                out[i + e] += c * v
    return out


@dataclass(frozen=True)
class EtaProduct:
    """``prod eta(scale * tau)^exponent`` over ``factors``."""

    factors: tuple[tuple[int, int], ...]

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(r for _, r in self.factors), 2)

    @property
    def leading_exponent(self) -> Fraction:
        return Fraction(sum(d * r for d, r in self.factors), 24)

    def __post_init__(self):
        if any(r < 0 for _, r in self.factors):
            raise ValueError("only holomorphic eta products (positive exponents)")
        lead = self.leading_exponent
        if lead.denominator != 1 or lead <= 0:
            raise ValueError(f"leading q-exponent {lead} must be a positive integer")

    def coefficients(self, terms: int) -> tuple[int, ...]:
        """Coefficients of q^0 .. q^(terms-1)."""
        return _expand(self.factors, terms)

    def __str__(self):
        return "*".join(f"eta({d}t)^{r}" if d != 1 else f"eta(t)^{r}" for d, r in self.factors)


@lru_cache(maxsize=32)
def _expand(factors: tuple[tuple[int, int], ...], terms: int) -> tuple[int, ...]:
    lead = sum(d * r for d, r in factors) // 24
    body = terms - lead
    series = [0] * terms
    if body <= 0:
        return tuple(series)
    acc = [1] + [0] * (body - 1)
    for d, r in factors:
        pent = [(e * d, c) for e, c in pentagonal_series(body // d + 1) if e * d < body]
        for _ in range(r):
            acc = _mul_sparse(acc, pent, body)
    series[lead:] = acc
    return tuple(series)


def eta_ap(product: EtaProduct, p: int, terms: int | None = None) -> int:
    """Coefficient of q^p in the expansion, computed with ``terms`` coefficients."""
    terms = p + 1 if terms is None else terms
    if terms <= p:
        raise InsufficientTerms(f"need more than {p} terms, got {terms}")
    return product.coefficients(terms)[p]


# Newforms spanning one-dimensional cusp spaces.
DELTA = EtaProduct(((1, 24),))                       # S_12(SL2(Z))
LEVEL2_WT8 = EtaProduct(((1, 8), (2, 8)))           # S_8(Gamma0(2))
LEVEL3_WT6 = EtaProduct(((1, 6), (3, 6)))           # S_6(Gamma0(3))
LEVEL4_WT6 = EtaProduct(((2, 12),))                 # S_6(Gamma0(4))
LEVEL8_WT4 = EtaProduct(((2, 4), (4, 4)))           # S_4(Gamma0(8))
LEVEL4_WT5 = EtaProduct(((1, 4), (2, 2), (4, 4)))   # S_5(Gamma1(4))
