"""Dimensions of cusp-form spaces for Gamma0(N) and Gamma1(N).

The group data (index, elliptic points, regular and irregular cusps) are
found by brute force on the coset space Gamma \\ SL2(Z), realized as bottom
rows ``(c, d)`` mod N under right multiplication, and then fed into the
Riemann-Roch dimension formulas.  Nothing here knows the closed-form
expressions for those invariants, which keeps this an independent check on
which trace formulas must vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

S = ((0, -1), (1, 0))
ST = ((0, -1), (1, 1))
T = ((1, 1), (0, 1))


@dataclass(frozen=True)
class GroupData:
    group: str
    N: int
    index: int          # [PSL2(Z) : image of Gamma]
    e2: int
    e3: int
    cusps_regular: int
    cusps_irregular: int
    contains_minus_one: bool

    @property
    def cusps(self) -> int:
        return self.cusps_regular + self.cusps_irregular

    @property
    def genus(self) -> int:
        g = 1 + Fraction(self.index, 12) - Fraction(self.e2, 4) - Fraction(self.e3, 3) \
            - Fraction(self.cusps, 2)
        assert g.denominator == 1 and g >= 0, g
        return int(g)


def _act(v, m, N):
    c, d = v
    return ((c * m[0][0] + d * m[1][0]) % N, (c * m[0][1] + d * m[1][1]) % N)


@lru_cache(maxsize=None)
def group_data(group: str, N: int) -> GroupData:
    """Invariants of Gamma0(N) (``group="Gamma0"``) or Gamma1(N) (``"Gamma1"``)."""
    if group not in ("Gamma0", "Gamma1"):
        raise ValueError(group)
    vecs = [(c, d) for c in range(N) for d in range(N) if gcd(gcd(c, d), N) == 1]
    if N == 1:
        vecs = [(0, 0)]
    units = [u for u in range(1, N + 1) if gcd(u, N) == 1] if N > 1 else [1]

    def canon(v):
        # Gamma0: lines (mod all units); Gamma1: exact vectors
        if group == "Gamma0":
            return min(((u * v[0]) % N, (u * v[1]) % N) for u in units)
        return v

    X = sorted({canon(v) for v in vecs})

    def neg(v):
        return canon(((-v[0]) % N, (-v[1]) % N))

    minus_one = all(neg(v) == v for v in X)

    def pm(v):  # class in X / {+-1}
        return min(v, neg(v))

    Y = sorted({pm(v) for v in X})
    e2 = sum(1 for y in Y if pm(canon(_act(y, S, N))) == y)
    e3 = sum(1 for y in Y if pm(canon(_act(y, ST, N))) == y)

    seen = set()
    reg = irr = 0
    for y in Y:
        if y in seen:
            continue
        orbit = [y]
        seen.add(y)
        z = pm(canon(_act(y, T, N)))
        while z != y:
            orbit.append(z)
            seen.add(z)
            z = pm(canon(_act(z, T, N)))
        h = len(orbit)
        if minus_one:
            reg += 1
            continue
        # width of the T-orbit on X itself: h (regular) or 2h (irregular)
        w, x = 1, canon(_act(y, T, N))
        while x != y:
            x = canon(_act(x, T, N))
            w += 1
        if w == h:
            reg += 1
        else:
            irr += 1
    return GroupData(group, N, len(Y), e2, e3, reg, irr, minus_one)


def cusp_form_dimension(group: str, N: int, k: int) -> int:
    """dim S_k(Gamma) for k >= 2."""
    gd = group_data(group, N)
    g = gd.genus
    if k < 2:
        raise ValueError("weight must be at least 2")
    if k % 2 == 0:
        if k == 2:
            return g
        return (k - 1) * (g - 1) + (k // 4) * gd.e2 + (k // 3) * gd.e3 + (k // 2 - 1) * gd.cusps
    if gd.contains_minus_one:
        return 0
    dim = (k - 1) * (g - 1) + (k // 3) * gd.e3 \
        + Fraction(k - 2, 2) * gd.cusps_regular + Fraction(k - 1, 2) * gd.cusps_irregular
    assert dim.denominator == 1
    return int(dim)
