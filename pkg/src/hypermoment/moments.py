"""Moment sums of H_p over lambda, their exact identities and limit targets.

Sums run over all of F_p with the conventions H(0) = 1 and H(1) from the
evaluator (the closed value for HD(d, 1), the character sum otherwise).
Power sums are exact Python integers: values are grouped with
``np.unique`` first, so each distinct value is raised to the m-th power once.

For data whose values lie in ``p^-s Z`` (``datum.scale = s > 0``) the sums
are taken over the integers ``p^s H`` and the normalizing exponent grows by
``s*m``, so ``raw_sum`` stays an exact integer and ``normalized`` is unchanged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .datum import HGDatum, hd
from .engine import applicable_methods, evaluate_all, is_split
from .errors import MethodInapplicable
from .prime_field import PrimeContext, build_context


# -- combinatorics -------------------------------------------------------------

def catalan(n: int) -> int:
    """(2n)! / (n! (n+1)!), and 0 for negative n."""
    if n < 0:
        return 0
    return math.comb(2 * n, n) // (n + 1)


def chu_lhs(m: int, n: int) -> int:
    return sum((-1) ** j * math.comb(m - j, j) * catalan(n - j) for j in range(m // 2 + 1))


def binom(x: int, n: int) -> int:
    """``x (x-1) ... (x-n+1) / n!``, valid for negative ``x``."""
    if n < 0:
        return 0
    num = 1
    for i in range(n):
        num *= x - i
    return num // math.factorial(n)


def chu_rhs(m: int, n: int) -> int:
    base = binom(2 * n - m, n)
    if m > 2 * n:
        return base
    q = Fraction(base * (m + 1), n + 1)
    assert q.denominator == 1
    return int(q)


def o3_even_moment(m: int) -> int:
    """``sum_i (-1)^i C(m, i) C(i)``: the m-th trace moment of O(3) for even m."""
    if m % 2 or m < 0:
        raise ValueError("m must be even and nonnegative")
    return sum((-1) ** i * math.comb(m, i) * catalan(i) for i in range(m + 1))


# -- power sums ----------------------------------------------------------------

def power_sums(values, m_max: int) -> list[int]:
    """Exact ``[sum v^m for m in 0..m_max]``."""
    uniq, counts = np.unique(np.asarray(values, dtype=np.int64), return_counts=True)
    pairs = [(int(v), int(c)) for v, c in zip(uniq, counts)]
    return [sum(c * v ** m for v, c in pairs) for m in range(m_max + 1)]


def square_argument(values: np.ndarray, p: int) -> np.ndarray:
    """``H(lambda^2)`` for lambda = 0..p-1, given ``H`` indexed by lambda."""
    lam = np.arange(p, dtype=np.int64)
    return values[lam * lam % p]


# -- reports -------------------------------------------------------------------

@dataclass(frozen=True)
class MomentReport:
    datum: HGDatum
    p: int
    m: int
    raw_sum: int
    normalization_exponent: Fraction
    normalized: float
    target: float
    method: str = ""
    square: bool = False

    @property
    def abs_error(self) -> float:
        return abs(self.normalized - self.target)


def default_exponent(datum: HGDatum, m: int) -> Fraction:
    """Normalizing power of p for the m-th moment.

    m/2 + 1 for length two, m + 1 for HD(2, s, 1), and 1 for the other
    length-three data, plus ``scale * m`` for the rescaled raw sums.
    """
    if datum.length == 2:
        e = Fraction(m, 2) + 1
    elif datum.length == 3 and all(b == 0 for b in datum.beta):
        e = Fraction(m + 1)
    else:
        e = Fraction(1)
    return e + datum.scale * m


def moment_target(datum: HGDatum, m: int) -> int:
    if m % 2:
        return 0
    if datum.length == 2:
        return catalan(m // 2)
    return o3_even_moment(m)


def normalize(raw: int, p: int, exponent: Fraction) -> float:
    # split p^e = p^floor(e) * p^frac(e) so the big integer division is exact first
    whole = math.floor(exponent)
    frac = float(exponent - whole)
    return float(Fraction(raw, p ** whole)) / p ** frac


def moment_sum(datum: HGDatum, m: int, ctx: PrimeContext, method: str = "auto",
               square: bool = False, exponent: Fraction | None = None,
               values: np.ndarray | None = None) -> MomentReport:
    """``sum_{lambda in F_p} H(lambda)^m`` (or ``H(lambda^2)^m``) with its target."""
    if values is None:
        values = evaluate_all(datum, ctx, method)
    if square:
        values = square_argument(values, ctx.p)
    raw = power_sums(values, m)[m]
    e = default_exponent(datum, m) if exponent is None else Fraction(exponent)
    return MomentReport(datum, ctx.p, m, raw, e, normalize(raw, ctx.p, e),
                        float(moment_target(datum, m)), method, square)


def sweep_method(datum: HGDatum, p: int) -> str | None:
    """dft at split primes (fastest), otherwise the cheapest exact method."""
    methods = applicable_methods(datum, p)
    if "dft" in methods:
        return "dft"
    return methods[0] if methods else None


def eligible_primes(datum: HGDatum, primes) -> list[int]:
    return [p for p in primes if p >= 5 and sweep_method(datum, p) is not None]


def prime_reports(datum: HGDatum, p: int, m_max: int, square: bool = False,
                  exponent_shift: Fraction | None = None) -> list[MomentReport]:
    """Reports for m = 1..m_max at one prime.

    ``exponent_shift`` replaces the default exponent by ``default + shift``;
    it exists for inspecting alternative normalizations.
    """
    method = sweep_method(datum, p)
    if method is None:
        raise MethodInapplicable(f"no evaluator for {datum.label()} at p={p}")
    ctx = build_context(p)
    values = evaluate_all(datum, ctx, method)
    if square:
        values = square_argument(values, p)
    sums = power_sums(values, m_max)
    out = []
    for m in range(1, m_max + 1):
        e = default_exponent(datum, m) + (exponent_shift or 0)
        out.append(MomentReport(datum, p, m, sums[m], e, normalize(sums[m], p, e),
                                float(moment_target(datum, m)), method, square))
    return out


def convergence_sweep(datum: HGDatum, m_max: int, primes, square: bool = False,
                      exponent_shift: Fraction | None = None) -> list[MomentReport]:
    """Normalized moments m = 1..m_max over the eligible primes, sorted by (m, p).

    Primes with no exact evaluator (non-split, no curve or closed form) are
    dropped.
    """
    reports = []
    for p in eligible_primes(datum, primes):
        reports += prime_reports(datum, p, m_max, square, exponent_shift)
    return sorted(reports, key=lambda r: (r.m, r.p))


def decile_errors(reports: list[MomentReport], m: int) -> tuple[float, float]:
    """Mean absolute error over the lowest and highest tenth of primes."""
    rows = sorted((r for r in reports if r.m == m), key=lambda r: r.p)
    k = max(1, len(rows) // 10)
    low = float(np.mean([r.abs_error for r in rows[:k]]))
    high = float(np.mean([r.abs_error for r in rows[-k:]]))
    return low, high


# -- exact identities ------------------------------------------------------------

@dataclass(frozen=True)
class SecondMoment:
    datum: HGDatum
    p: int
    computed: int
    claimed: int
    alternatives: dict

    @property
    def agree(self) -> bool:
        return self.computed == self.claimed


def second_moment_exact(datum: HGDatum, ctx: PrimeContext) -> SecondMoment:
    """``sum_{lambda != 0} H^2`` against the closed polynomial in p.

    HD(6, 1): p^2 - 3p - 1 for p = 1 mod 3 and p^2 - p - 1 for p = 2 mod 3
    (``alternatives`` also carries p^2 - 3p - 1 for the second class).
    HD(2, d, 1), d in {3, 4, 6}: p^3 - 4p^2 - p - 1 for p = 1 mod d and
    p^3 - 2p^2 - p - 1 for p = -1 mod d; the second class has no exact
    evaluator and raises :class:`MethodInapplicable`.
    """
    p = ctx.p
    if p <= 3:
        raise ValueError("p > 3 required")
    if datum == hd(6, 1):
        claims = {"p = 1 mod 3": p * p - 3 * p - 1, "p = 2 mod 3": p * p - p - 1,
                  "p = 2 mod 3, alternative": p * p - 3 * p - 1}
        claimed = claims["p = 1 mod 3"] if p % 3 == 1 else claims["p = 2 mod 3"]
    else:
        d = next((d for d in (3, 4, 6) if datum == hd(2, d, 1)), None)
        if d is None:
            raise ValueError(f"no second-moment formula for {datum.label()}")
        if p % d == 1:
            claimed = p ** 3 - 4 * p * p - p - 1
        elif p % d == d - 1:
            claimed = p ** 3 - 2 * p * p - p - 1
        else:
            raise ValueError(f"p={p} is in neither residue class mod {d}")
        claims = {}
    values = evaluate_all(datum, ctx, sweep_method(datum, p) or "auto")
    computed = power_sums(values[1:], 2)[2]
    return SecondMoment(datum, p, computed, claimed, claims)


def odd_vanishing_primes(d: int, primes) -> list[int]:
    """Primes where the odd moments of HD(d, 1) vanish identically (d = 4, 6)."""
    return [p for p in primes if p % (2 * d) in (d + 1, 2 * d - 1)]


def nonsquare_odd_sum(values: np.ndarray, ctx: PrimeContext, power: int) -> int:
    """``sum over non-squares lambda of H(lambda)^power``."""
    mask = ctx.legendre == -1
    return power_sums(values[mask], power)[power]


def first_moment(datum: HGDatum, ctx: PrimeContext, method: str = "auto") -> int:
    return int(power_sums(evaluate_all(datum, ctx, method), 1)[1])


def is_in_scope(datum: HGDatum, p: int) -> bool:
    return datum.defined_over_Q and datum.primitive and is_split(datum, p)
