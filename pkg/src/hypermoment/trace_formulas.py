"""Hecke trace formulas expressed through H_p values and Frobenius traces.

Every formula is evaluated in exact integer arithmetic.  The correction
terms built from Jacobi sums are computed in the cyclotomic ring and must
come out as rational integers; anything else raises :class:`NonRealDelta`.

Two readings of the published formulas are ambiguous and are exposed as
parameters:

* the index set of the Gamma0(2) correction term (``index_set``),
* the upper end of the lambda sum in the Gamma0(2) formula (``endpoint``).

``DELTA4_INDEX_SET`` and ``GAMMA0_2_ENDPOINT`` hold the readings that make
the formula vanish on the zero-dimensional spaces and reproduce the eta
newform; :func:`resolve_gamma0_2_conventions` re-derives them.

The Gamma1(3) formula as usually displayed subtracts delta3 for every k.
That version is off by exactly ``2*delta3`` for even k, so by default the
correction enters as ``(-1)^k * delta3``; ``delta_sign="literal"`` keeps the
displayed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .characters import _JacobiCache
from .curves import LEGENDRE, frobenius_traces
from .cyclotomic import CyclotomicInt
from .dimensions import cusp_form_dimension
from .engine import hp_curve_all
from .errors import NonRealDelta, OddWeight, TraceNotZero, UnresolvedIndexSet
from .eta import LEVEL2_WT8, LEVEL3_WT6, LEVEL4_WT5, LEVEL4_WT6, LEVEL8_WT4, EtaProduct, eta_ap
from .prime_field import PrimeContext, build_context

DELTA4_INDEX_SET = "integer"
GAMMA0_2_ENDPOINT = "p-1"

GROUPS = ("Gamma1(3)", "Gamma0(2)", "Gamma0(4)", "Gamma0(8)", "Gamma1(4)")


@dataclass
class TraceReport:
    group: str
    weight: int
    p: int
    trace: int
    method: str = "formula"
    detail: dict = field(default_factory=dict)


def g_poly(k: int, s: int, p: int) -> int:
    """``sum_{j=0}^{k/2-1} (-1)^j C(k-2-j, j) p^j s^(k-2j-2)`` for even k >= 2."""
    if k % 2 or k < 2:
        raise OddWeight(f"G_k needs even k >= 2, got {k}")
    return sum((-1) ** j * comb(k - 2 - j, j) * p ** j * s ** (k - 2 * j - 2)
               for j in range(k // 2))


def _kernel_sum(k: int, values, p: int) -> int:
    """``sum_v sum_{j<=k/2} (-1)^j C(k-j, j) p^j v^(k-2j)`` with exact ints.

    For even k this is ``sum_v G_{k+2}(v, p)``; the odd-k extension is the
    kernel of the odd-weight formulas.
    """
    vals = [int(v) for v in values]
    total = 0
    for j in range(k // 2 + 1):
        e = k - 2 * j
        total += (-1) ** j * comb(k - j, j) * p ** j * sum(v ** e for v in vals)
    return total


def _order_char(ctx: PrimeContext, d: int) -> int:
    # omega^((p-1)/d) has exact order d
    return ctx.n // d


def _jacobi_eta(ctx: PrimeContext, d: int) -> CyclotomicInt:
    chi = _order_char(ctx, d)
    return _JacobiCache(ctx)(chi, chi)


def _term(J: CyclotomicInt, p: int, p_power: int, j_power: int) -> CyclotomicInt:
    # p^p_power * J^j_power, with J^-1 = conj(J) / p
    if j_power >= 0:
        return (J ** j_power) * (p ** p_power)
    m = -j_power
    if p_power < m:
        raise NonRealDelta(f"p^{p_power} J^{j_power} is not integral")
    return (J.conj() ** m) * (p ** (p_power - m))


def _as_int(x: CyclotomicInt, what: str) -> int:
    try:
        return x.to_int()
    except ValueError:
        raise NonRealDelta(f"{what} is not a rational integer: {x!r}") from None


def delta3(k: int, ctx: PrimeContext) -> int:
    """Correction term of the Gamma1(3) formula."""
    p = ctx.p
    if p % 3 == 2:
        return 0 if k % 2 else (-p) ** (k // 2)
    if p == 3:
        raise ValueError("p = 3 is excluded")
    J = _jacobi_eta(ctx, 3)
    acc = CyclotomicInt(J.N)
    for i in range(k + 1):
        if (k - 2 * i) % 3 == 0:
            acc = acc + _term(J, p, i, k - 2 * i)
    return _as_int(acc, f"delta3({k}) at p={p}")


def delta4(r: int, ctx: PrimeContext, index_set: str | None = None) -> int:
    """Correction term of the Gamma0(2) formula.

    For p = 1 mod 4 this is ``p^r sum_i (J^2/p)^(2i)`` over i in [-r/2, r/2].
    ``index_set="integer"`` takes integer i only; ``"half"`` takes
    ``i = -r/2, -r/2 + 1, ..., r/2`` (so 2i runs over -r, -r+2, ..., r).
    The two agree for even r.
    """
    p = ctx.p
    index_set = index_set or DELTA4_INDEX_SET
    if p % 4 == 3:
        return (-p) ** r
    J = _jacobi_eta(ctx, 4)
    if index_set == "half":
        twice_i = range(-r, r + 1, 2)
    elif index_set == "integer":
        twice_i = [e for e in range(-r, r + 1) if e % 2 == 0]
    else:
        raise ValueError(f"unknown index set {index_set!r}")
    acc = CyclotomicInt(J.N)
    for e in twice_i:
        # p^r (J^2/p)^e = p^(r-e) J^(2e)
        acc = acc + _term(J, p, r - e, 2 * e)
    return _as_int(acc, f"delta4({r}) at p={p}")


def _phi(ctx: PrimeContext, x: int) -> int:
    return ctx.phi(x)


def trace_gamma1_3(k: int, ctx: PrimeContext, hp_values=None,
                   delta_sign: str = "parity") -> TraceReport:
    """Tr of T_p on S_{k+2}(Gamma1(3)) from H_p(HD(3,1)) values.

    ``delta_sign="parity"`` adds ``(-1)^k * delta3``; ``"literal"`` subtracts
    ``delta3`` for every k.
    """
    p = ctx.p
    H = hp_curve_all(3, ctx) if hp_values is None else hp_values
    if delta_sign == "parity":
        corr = (-1) ** k * delta3(k, ctx)
    elif delta_sign == "literal":
        corr = -delta3(k, ctx)
    else:
        raise ValueError(f"unknown delta_sign {delta_sign!r}")
    rhs = 1 + _phi(ctx, -3) ** k + corr + _kernel_sum(k, H[2:p], p)
    return TraceReport("Gamma1(3)", k + 2, p, -rhs, detail={"delta_sign": delta_sign})


def trace_gamma0_2(r: int, ctx: PrimeContext, hp_values=None, endpoint: str | None = None,
                   index_set: str | None = None) -> TraceReport:
    """Tr of T_p on S_{2r+2}(Gamma0(2)) from H_p(HD(4,1)) values.

    ``endpoint`` is ``"p-1"`` (sum over lambda = 2 .. p-1) or ``"p-2"``.
    """
    p = ctx.p
    endpoint = endpoint or GAMMA0_2_ENDPOINT
    H = hp_curve_all(4, ctx) if hp_values is None else hp_values
    hi = {"p-1": p, "p-2": p - 1}[endpoint]
    tr = -2 - delta4(r, ctx, index_set) - _kernel_sum(2 * r, H[2:hi], p)
    return TraceReport("Gamma0(2)", 2 * r + 2, p, tr,
                       detail={"endpoint": endpoint, "index_set": index_set or DELTA4_INDEX_SET})


def trace_gamma0_4(k: int, ctx: PrimeContext, legendre_traces=None) -> TraceReport:
    """Tr of T_p on S_{k+2}(Gamma0(4)), k even, from Legendre traces."""
    if k % 2:
        raise OddWeight("k must be even")
    p = ctx.p
    a = frobenius_traces(LEGENDRE, ctx) if legendre_traces is None else legendre_traces
    rhs = 3 + sum(g_poly(k + 2, int(v), p) for v in a[2:p])
    return TraceReport("Gamma0(4)", k + 2, p, -rhs)


def trace_gamma0_8(k: int, ctx: PrimeContext, legendre_traces=None) -> TraceReport:
    """Tr of T_p on S_{k+2}(Gamma0(8)), k even, from traces at squares."""
    if k % 2:
        raise OddWeight("k must be even")
    p = ctx.p
    a = frobenius_traces(LEGENDRE, ctx) if legendre_traces is None else legendre_traces
    lam = np.arange(2, p - 1, dtype=np.int64)
    rhs = 4 + sum(g_poly(k + 2, int(v), p) for v in a[lam * lam % p])
    return TraceReport("Gamma0(8)", k + 2, p, -rhs)


def trace_gamma1_4(k: int, ctx: PrimeContext, hp_values=None) -> TraceReport:
    """Tr of T_p on S_{k+2}(Gamma1(4)) from H_p(HD(2,1)) values."""
    p = ctx.p
    H = hp_curve_all(2, ctx) if hp_values is None else hp_values
    rhs = (1 + (-1) ** k) // 2 + 1 + _phi(ctx, -1) ** k + _kernel_sum(k, H[2:p], p)
    return TraceReport("Gamma1(4)", k + 2, p, -rhs)


def trace(group: str, weight: int, ctx: PrimeContext) -> TraceReport:
    """Dispatch on ``(group, weight)``; weight is k + 2."""
    k = weight - 2
    if group == "Gamma1(3)":
        return trace_gamma1_3(k, ctx)
    if group == "Gamma0(2)":
        if k % 2:
            raise OddWeight("Gamma0(2) formula covers even weights")
        return trace_gamma0_2(k // 2, ctx)
    if group == "Gamma0(4)":
        return trace_gamma0_4(k, ctx)
    if group == "Gamma0(8)":
        return trace_gamma0_8(k, ctx)
    if group == "Gamma1(4)":
        return trace_gamma1_4(k, ctx)
    raise ValueError(f"unknown group {group!r}")


# weights each formula covers (k >= 1, or k >= 2 even)
_FORMULA_WEIGHTS = {
    "Gamma1(3)": lambda w: w >= 3,
    "Gamma0(2)": lambda w: w >= 4 and w % 2 == 0,
    "Gamma0(4)": lambda w: w >= 4 and w % 2 == 0,
    "Gamma0(8)": lambda w: w >= 4 and w % 2 == 0,
    "Gamma1(4)": lambda w: w >= 3,
}


def _dimension(group: str, weight: int) -> int:
    name, level = group.split("(")
    return cusp_form_dimension(name, int(level.rstrip(")")), weight)


def zero_dimensional_cases(max_weight: int = 8) -> list[tuple[str, int]]:
    """(group, weight) pairs covered by a formula whose cusp space is zero."""
    return [(g, w) for g in GROUPS for w in range(3, max_weight + 1)
            if _FORMULA_WEIGHTS[g](w) and _dimension(g, w) == 0]


# (group, weight) -> newform spanning the one-dimensional space
ETA_ORACLES: dict[tuple[str, int], EtaProduct] = {
    ("Gamma0(2)", 8): LEVEL2_WT8,
    ("Gamma1(3)", 6): LEVEL3_WT6,
    ("Gamma0(4)", 6): LEVEL4_WT6,
    ("Gamma0(8)", 4): LEVEL8_WT4,
    ("Gamma1(4)", 5): LEVEL4_WT5,
    ("Gamma1(4)", 6): LEVEL4_WT6,
}


def check_dimension_zero(primes, max_weight: int = 8) -> list[TraceReport]:
    """Evaluate every formula on every zero-dimensional space and prime.

    Raises :class:`TraceNotZero` (with the report as witness) on the first
    nonzero value.
    """
    cases = zero_dimensional_cases(max_weight)
    out = []
    for p in primes:
        ctx = build_context(p)
        for g, w in cases:
            rep = trace(g, w, ctx)
            rep.method = "dimension_zero"
            if rep.trace != 0:
                raise TraceNotZero(f"{g} weight {w} at p={p}: trace {rep.trace}", witness=rep)
            out.append(rep)
    return out


def check_eta_oracle(group: str, weight: int, primes, terms: int = 200) -> list[TraceReport]:
    """Compare the formula with the eta newform on a one-dimensional space."""
    oracle = ETA_ORACLES[(group, weight)]
    if _dimension(group, weight) != 1:
        raise ValueError(f"S_{weight}({group}) is not one-dimensional")
    out = []
    for p in primes:
        ctx = build_context(p)
        rep = trace(group, weight, ctx)
        ap = eta_ap(oracle, p, max(terms, p + 1))
        rep.detail["eta_ap"] = ap
        if rep.trace != ap:
            raise TraceNotZero(f"{group} weight {weight} at p={p}: formula {rep.trace} "
                               f"!= eta coefficient {ap}", witness=rep)
        out.append(rep)
    return out


def resolve_gamma0_2_conventions(primes) -> dict:
    """Find which (index set, endpoint) readings satisfy the oracles.

    A reading passes when weights 4 and 6 vanish and weight 8 reproduces
    the eta newform at every prime given.  Raises
    :class:`UnresolvedIndexSet` when nothing passes.
    """
    results = {}
    for index_set in ("integer", "half"):
        for endpoint in ("p-1", "p-2"):
            ok = True
            for p in primes:
                ctx = build_context(p)
                H = hp_curve_all(4, ctx)
                zeros = all(trace_gamma0_2(r, ctx, H, endpoint, index_set).trace == 0
                            for r in (1, 2))
                ap = eta_ap(LEVEL2_WT8, p, max(200, p + 1))
                if not zeros or trace_gamma0_2(3, ctx, H, endpoint, index_set).trace != ap:
                    ok = False
                    break
            results[(index_set, endpoint)] = ok
    if not any(results.values()):
        raise UnresolvedIndexSet("no reading of the Gamma0(2) formula matches", witness=results)
    return results
