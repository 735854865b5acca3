"""Point counts on the one-parameter elliptic families used as H_p oracles.

Each family is a Weierstrass equation

    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6

whose coefficients are affine in lambda.  For odd p, completing the square
gives ``(2y + a1 x + a3)^2 = f(x)`` with
``f = 4(x^3 + a2 x^2 + a4 x + a6) + (a1 x + a3)^2``, so

    #E(F_p) = p + 1 + sum_x phi(f(x))

which is O(p) per curve with the Legendre table.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import SingularLambda, SmallPrime
from .prime_field import PrimeContext


@dataclass(frozen=True)
class CurveFamily:
    """A lambda-family of Weierstrass curves.

    ``coefficients(lam, p)`` returns ``(a1, a2, a3, a4, a6)`` reduced mod p.
    ``min_prime`` is the least p for which the equation makes sense (the
    d = 3 and d = 6 families divide by 27 and 432).
    """

    name: str
    equation: str
    coefficients: Callable[[int, int], tuple[int, int, int, int, int]]
    min_prime: int = 3


def _legendre(lam, p):
    return 0, (-1 - lam) % p, 0, lam % p, 0


def _d3(lam, p):
    return 1, 0, lam * pow(27, -1, p) % p, 0, 0


def _d4(lam, p):
    return 0, 1, 0, lam * pow(4, -1, p) % p, 0


def _d6(lam, p):
    return 1, 0, 0, 0, -lam * pow(432, -1, p) % p


def _clausen(lam, p):
    return 0, p - 1, 0, lam % p, -lam % p


LEGENDRE = CurveFamily("legendre", "y^2 = x(x-1)(x-l)", _legendre)
D3 = CurveFamily("d3", "y^2 + xy + (l/27)y = x^3", _d3, min_prime=5)
D4 = CurveFamily("d4", "y^2 = x(x^2 + x + l/4)", _d4)
D6 = CurveFamily("d6", "y^2 + xy = x^3 - l/432", _d6, min_prime=5)
CLAUSEN = CurveFamily("clausen", "y^2 = (x-1)(x^2 + l)", _clausen)

FAMILIES = {"legendre": LEGENDRE, 2: LEGENDRE, "d2": LEGENDRE, "d3": D3, 3: D3,
            "d4": D4, 4: D4, "d6": D6, 6: D6, "clausen": CLAUSEN}


def family(key) -> CurveFamily:
    if isinstance(key, CurveFamily):
        return key
    try:
        return FAMILIES[key]
    except KeyError:
        raise ValueError(f"unknown curve family {key!r}") from None


def discriminant(a1: int, a2: int, a3: int, a4: int, a6: int) -> int:
    """Discriminant of a general Weierstrass equation (over Z)."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def _check(fam: CurveFamily, lam: int, p: int) -> tuple[int, ...]:
    if p < fam.min_prime:
        raise SmallPrime(f"family {fam.name} needs p >= {fam.min_prime}")
    coeffs = fam.coefficients(lam % p, p)
    if discriminant(*coeffs) % p == 0:
        raise SingularLambda(f"{fam.name} is singular at lambda={lam % p} mod {p}")
    return coeffs


def singular_lambdas(fam, ctx: PrimeContext) -> list[int]:
    """All lambda in F_p at which the family degenerates."""
    fam = family(fam)
    p = ctx.p
    return [lam for lam in range(p) if discriminant(*fam.coefficients(lam, p)) % p == 0]


def count_points(fam, lam: int, ctx: PrimeContext) -> int:
    """Number of F_p-points, point at infinity included."""
    fam = family(fam)
    p = ctx.p
    a1, a2, a3, a4, a6 = _check(fam, lam, p)
    x = np.arange(p, dtype=np.int64)
    f = (4 * ((((x + a2) * x + a4) % p * x + a6) % p) + ((a1 * x + a3) % p) ** 2) % p
    return p + 1 + int(ctx.legendre[f].sum(dtype=np.int64))


def frobenius_trace(fam, lam: int, ctx: PrimeContext) -> int:
    """``p + 1 - #E(F_p)``."""
    return ctx.p + 1 - count_points(fam, lam, ctx)


def count_points_naive(fam, lam: int, p: int) -> int:
    """O(p^2) enumeration of affine solutions plus infinity (test oracle)."""
    fam = family(fam)
    a1, a2, a3, a4, a6 = _check(fam, lam, p)
    y = np.arange(p, dtype=np.int64)
    total = 1
    for x in range(p):
        lhs = (y * y + a1 * x * y + a3 * y) % p
        rhs = (x ** 3 + a2 * x * x + a4 * x + a6) % p
        total += int(np.count_nonzero(lhs == rhs))
    return total


def frobenius_traces(fam, ctx: PrimeContext, chunk: int = 1 << 21) -> np.ndarray:
    """Traces for every lambda in F_p at once.

    Returns an int64 array indexed by lambda.  Entries at singular lambda
    are 0 and carry no meaning; see :func:`singular_lambdas`.
    """
    fam = family(fam)
    p = ctx.p
    if p < fam.min_prime:
        raise SmallPrime(f"family {fam.name} needs p >= {fam.min_prime}")
    coeffs = np.array([fam.coefficients(lam, p) for lam in range(p)], dtype=np.int64)
    x = np.arange(p, dtype=np.int64)[None, :]
    out = np.zeros(p, dtype=np.int64)
    rows = max(1, chunk // p)
    leg = ctx.legendre
    for lo in range(0, p, rows):
        c = coeffs[lo:lo + rows]
        a1, a2, a3, a4, a6 = (c[:, i:i + 1] for i in range(5))
        cubic = ((((x + a2) % p) * x + a4) % p * x + a6) % p
        f = (4 * cubic + ((a1 * x + a3) % p) ** 2) % p
        out[lo:lo + rows] = -leg[f].sum(axis=1, dtype=np.int64)
    for lam in singular_lambdas(fam, ctx):
        out[lam] = 0
    return out
