"""Evaluation of H_p(alpha, beta; lambda) by four independent routes.

``charsum``
    The defining sum over the p - 1 characters, one lambda at a time.
``dft``
    The same sum for every lambda at once.  As a function of
    ``t = dlog(lambda)`` the defining sum is a DFT of the per-character
    coefficient sequence, so a single length-(p-1) transform yields all
    values.
``curve``
    Frobenius traces of the elliptic families attached to HD(d, 1),
    d in {2, 3, 4, 6}.  Exact integers and valid for every p >= 5.
``algebraic``
    Closed forms (root counts of small polynomials) for the six data whose
    parameters interlace.  Valid for every p > 3.

The first two need a split prime (M | p - 1); the last two do not.
All routes return exact integers; cross-agreement is part of the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import GaussTable, gauss_table, round_exact, round_exact_array
from .curves import family, frobenius_trace, frobenius_traces
from .datum import HGDatum, hd
from .errors import (
    MethodInapplicable,
    NonSplitPrime,
    NotAlgebraicDatum,
    SingularLambda,
    SmallPrime,
)
from .fft import chirp_dft
from .prime_field import PrimeContext, sqrt_mod

METHODS = ("charsum", "dft", "curve", "algebraic")

# Legendre symbol arguments for the reflection lambda -> 1 - lambda and the
# value at lambda = 1, indexed by d.
KAPPA = {2: -1, 3: -3, 4: -2, 6: -1}


@dataclass(frozen=True)
class HGValue:
    """``H = value / p**scale``; scale is 0 except for data with zigzag_min < 0."""

    value: int
    method: str
    lam: int
    datum: HGDatum
    scale: int = 0


def curve_index(datum: HGDatum) -> int | None:
    """d if the datum is HD(d, 1) for d in {2, 3, 4, 6}, else None."""
    for d in (2, 3, 4, 6):
        if datum == hd(d, 1):
            return d
    return None


def algebraic_case(datum: HGDatum) -> tuple[int, ...] | None:
    """The HD(...) arguments if the datum is one of the six closed-form cases."""
    for args in ((4, 2), (3, 2), (6, 2), (2, 4, 3), (2, 6, 4), (2, 6, 3)):
        if datum == hd(*args):
            return args
    return None


def is_split(datum: HGDatum, p: int) -> bool:
    return (p - 1) % datum.M == 0 and datum.M % p != 0


def applicable_methods(datum: HGDatum, p: int) -> list[str]:
    """Methods that can evaluate ``datum`` at the prime p, cheapest first."""
    out = []
    if curve_index(datum) is not None and p >= 5:
        out.append("curve")
    if algebraic_case(datum) is not None and p > 3:
        out.append("algebraic")
    if datum.defined_over_Q and datum.primitive and is_split(datum, p):
        out += ["dft", "charsum"]
    return out


def resolve_method(datum: HGDatum, p: int, method: str = "auto") -> str:
    methods = applicable_methods(datum, p)
    if method == "auto":
        if not methods:
            raise MethodInapplicable(f"no evaluator for {datum} at p={p} "
                                     f"(M={datum.M} does not divide p-1)")
        return methods[0]
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if method not in methods:
        if method in ("dft", "charsum") and not is_split(datum, p):
            raise NonSplitPrime(f"M={datum.M} does not divide p-1={p - 1}")
        raise MethodInapplicable(f"method {method} does not apply to {datum} at p={p}")
    return method


# -- character sum ----------------------------------------------------------

def _require_split(datum: HGDatum, ctx: PrimeContext) -> None:
    if not (datum.defined_over_Q and datum.primitive):
        raise MethodInapplicable(f"{datum} is not defined over Q and primitive")
    if not is_split(datum, ctx.p):
        raise NonSplitPrime(f"M={datum.M} does not divide p-1={ctx.n}")


def character_coefficients(datum: HGDatum, ctx: PrimeContext,
                           gauss: GaussTable | None = None) -> np.ndarray:
    """``c[k]`` such that ``H(lambda) = sum_k c[k] omega^k(lambda) / (1 - p)``.

    Includes the factor ``omega^k((-1)^n) = (-1)^(n k)``.
    """
    _require_split(datum, ctx)
    G = (gauss or gauss_table(ctx)).values
    n = ctx.n
    k = np.arange(n, dtype=np.int64)
    c = np.ones(n, dtype=np.complex128)
    for a, b in zip(datum.alpha, datum.beta):
        A = int(a * n)
        B = int(b * n)
        c *= G[(k + A) % n] * G[(-k - B) % n] / (G[A] * G[(-B) % n])
    if datum.length % 2:
        c *= np.where(k % 2, -1.0, 1.0)
    return c


def hp_charsum(datum: HGDatum, lam: int, ctx: PrimeContext,
               gauss: GaussTable | None = None) -> HGValue:
    """H_p at one lambda straight from the defining character sum."""
    lam %= ctx.p
    if lam == 0:
        _require_split(datum, ctx)
        return HGValue(ctx.p ** datum.scale, "charsum", 0, datum, datum.scale)
    c = character_coefficients(datum, ctx, gauss)
    n = ctx.n
    t = int(ctx.dlog[lam])
    k = np.arange(n, dtype=np.int64)
    s = np.dot(c, np.exp(2j * np.pi * ((k * t) % n) / n))
    v = round_exact(s * ctx.p ** datum.scale / (1 - ctx.p), f"H({lam})")
    return HGValue(v, "charsum", lam, datum, datum.scale)


def hp_batch_dft(datum: HGDatum, ctx: PrimeContext,
                 gauss: GaussTable | None = None) -> np.ndarray:
    """H_p at every lambda in F_p via one length-(p-1) transform.

    Returns an int64 array indexed by lambda holding ``p**datum.scale * H``;
    entry 0 is the convention H(0) = 1.
    """
    c = character_coefficients(datum, ctx, gauss)
    s = chirp_dft(c, sign=+1) * (ctx.p ** datum.scale / (1 - ctx.p))
    out = np.empty(ctx.p, dtype=np.int64)
    out[0] = ctx.p ** datum.scale
    out[ctx.power] = round_exact_array(s, "H")
    return out


# -- elliptic curves --------------------------------------------------------

def _curve_sign(d: int, ctx: PrimeContext) -> int:
    # Legendre family: H = phi(-1) * trace; the others match the trace directly
    return ctx.phi(-1) if d == 2 else 1


def hp_curve(d: int, lam: int, ctx: PrimeContext) -> HGValue:
    """H_p(HD(d, 1); lambda) from a point count; lambda not in {0, 1}."""
    if d not in KAPPA:
        raise ValueError(f"no curve family for d={d}")
    if ctx.p < 5:
        raise SmallPrime("curve evaluation needs p >= 5")
    lam %= ctx.p
    if lam in (0, 1):
        raise SingularLambda(f"lambda={lam} is singular for the d={d} family")
    a = frobenius_trace(family(d), lam, ctx)
    return HGValue(_curve_sign(d, ctx) * a, "curve", lam, hd(d, 1))


def hp_curve_all(d: int, ctx: PrimeContext) -> np.ndarray:
    """H_p(HD(d, 1); lambda) for all lambda with the boundary conventions.

    ``H(0) = 1`` and ``H(1) = (kappa_d / p)``.
    """
    if ctx.p < 5:
        raise SmallPrime("curve evaluation needs p >= 5")
    out = _curve_sign(d, ctx) * frobenius_traces(family(d), ctx)
    out[0] = 1
    out[1] = ctx.phi(KAPPA[d])
    return out


# -- closed forms ------------------------------------------------------------

def _inv(x: int, p: int) -> int:
    return pow(x % p, -1, p)


def _roots(coeffs: list[int], p: int, exclude=(0, 1)) -> list[int]:
    """Distinct roots in F_p of sum coeffs[i] x^i, outside ``exclude``."""
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return [int(r) for r in np.nonzero(acc == 0)[0] if int(r) not in exclude]


def hp_algebraic(datum: HGDatum, lam: int, ctx: PrimeContext) -> HGValue:
    """H_p for the six interlacing data via finite root counts.

    Valid at every prime p > 3 (split or not) and lambda != 0.
    """
    case = algebraic_case(datum)
    if case is None:
        raise NotAlgebraicDatum(f"{datum} has no closed form here")
    p = ctx.p
    if p <= 3:
        raise SmallPrime("closed forms need p > 3")
    lam %= p
    if lam == 0:
        return HGValue(1, "algebraic", 0, datum)
    phi = ctx.phi

    if case == (4, 2):
        r = sqrt_mod(ctx, lam)
        v = 0 if r is None else phi(1 + r) + phi(1 - r)
    elif case in ((3, 2), (6, 2)):
        # distinct roots of x^3 + 3x^2 - 4 lambda in F_p^x
        nf = len(_roots([-4 * lam, 0, 3, 1], p, exclude=(0,)))
        v = nf - 1
        if case == (6, 2):
            v *= phi(lam * _inv(3, p))
    elif case == (2, 4, 3):
        # 27 lambda (a^3 - a^2) + 4 = 0
        c = 27 * lam
        roots = _roots([4, 0, -c, c], p)
        v = phi(-3 * lam) * sum(phi(a) for a in roots)
    elif case == (2, 6, 4):
        # 256 lambda (a^4 - a^3) + 27 = 0
        c = 256 * lam
        roots = _roots([27, 0, 0, -c, c], p)
        v = sum(phi(a * a - a) for a in roots) - phi(-lam * _inv(3, p))
    else:  # (2, 6, 3): (lambda - 1) a^3 + 3a^2 - 3a + 1 = 0
        roots = _roots([1, -3, 3, lam - 1], p)
        v = sum(phi(a) for a in roots)
    return HGValue(int(v), "algebraic", lam, datum)


def hp_algebraic_all(datum: HGDatum, ctx: PrimeContext) -> np.ndarray:
    """Closed-form values at every lambda in O(p).

    Each defining equation is linear in lambda, so instead of scanning
    roots per lambda we solve for lambda once per candidate root and
    scatter-add.
    """
    case = algebraic_case(datum)
    if case is None:
        raise NotAlgebraicDatum(f"{datum} has no closed form here")
    p = ctx.p
    if p <= 3:
        raise SmallPrime("closed forms need p > 3")
    leg = ctx.legendre.astype(np.int64)
    a = np.arange(2, p, dtype=np.int64)  # a not in {0, 1}
    lam_all = np.arange(p, dtype=np.int64)
    out = np.zeros(p, dtype=np.int64)

    def inverse(v):
        return np.array([pow(int(x), -1, p) for x in v], dtype=np.int64)

    if case == (4, 2):
        r = np.arange(1, p, dtype=np.int64)
        np.add.at(out, r * r % p, leg[(1 + r) % p])
    elif case in ((3, 2), (6, 2)):
        x = np.arange(1, p, dtype=np.int64)
        lam = (x * x % p * (x + 3) % p) * _inv(4, p) % p
        # distinct roots: each x maps to exactly one lambda
        np.add.at(out, lam, 1)
        out -= 1
        if case == (6, 2):
            out *= leg[lam_all * _inv(3, p) % p]
    elif case == (2, 4, 3):
        den = 27 * (a * a % p) % p * (a - 1) % p
        lam = (-4 * inverse(den)) % p
        np.add.at(out, lam, leg[a])
        out *= leg[(-3 * lam_all) % p]
    elif case == (2, 6, 4):
        den = 256 * (a * a % p * a % p) % p * (a - 1) % p
        lam = (-27 * inverse(den)) % p
        np.add.at(out, lam, leg[a * (a - 1) % p])
        out -= leg[(-lam_all * _inv(3, p)) % p]
    else:
        num = (3 * a * a - 3 * a + 1) % p
        lam = (1 - num * inverse(a * a % p * a % p)) % p
        np.add.at(out, lam, leg[a])
    out[0] = 1
    return out


# -- dispatch ----------------------------------------------------------------

def evaluate(datum: HGDatum, lam: int, ctx: PrimeContext, method: str = "auto",
             gauss: GaussTable | None = None) -> HGValue:
    """H_p at a single lambda by the requested (or cheapest) method."""
    method = resolve_method(datum, ctx.p, method)
    lam %= ctx.p
    if method == "curve":
        d = curve_index(datum)
        if lam == 0:
            return HGValue(1, "curve", 0, datum)
        if lam == 1:
            return HGValue(ctx.phi(KAPPA[d]), "curve", 1, datum)
        return hp_curve(d, lam, ctx)
    if method == "algebraic":
        return hp_algebraic(datum, lam, ctx)
    if method == "dft":
        return HGValue(int(hp_batch_dft(datum, ctx, gauss)[lam]), "dft", lam, datum, datum.scale)
    return hp_charsum(datum, lam, ctx, gauss)


def evaluate_all(datum: HGDatum, ctx: PrimeContext, method: str = "auto",
                 gauss: GaussTable | None = None) -> np.ndarray:
    """H_p at every lambda in F_p (int64 array indexed by lambda).

    Entries are ``p**datum.scale * H``, which equals H for every datum but
    the six non-algebraic length-three data with t >= 3.
    """
    method = resolve_method(datum, ctx.p, method)
    if method == "curve":
        return hp_curve_all(curve_index(datum), ctx)
    if method == "algebraic":
        return hp_algebraic_all(datum, ctx)
    if method == "dft":
        return hp_batch_dft(datum, ctx, gauss)
    gauss = gauss or gauss_table(ctx)
    return np.array([hp_charsum(datum, lam, ctx, gauss).value for lam in range(ctx.p)],
                    dtype=np.int64)
