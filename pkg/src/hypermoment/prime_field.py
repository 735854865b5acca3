"""Arithmetic context for a prime field F_p.

A :class:`PrimeContext` bundles the least primitive root, a dense discrete
logarithm table and the quadratic character table.  Everything downstream
(character sums, point counts, trace formulas) reads these tables and never
mutates them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import EvenPrime, NotPrime

# Deterministic for n < 3.3e24, which covers every 64-bit input.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for ``n < 2**64``."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primitive_root(p: int) -> int:
    """Least primitive root modulo the prime ``p``."""
    if p == 2:
        return 1
    qs = prime_factors(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in qs):
            return g
        g += 1


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Odd primes ``p`` with ``lo <= p <= hi``."""
    return [n for n in range(max(lo, 3), hi + 1) if n % 2 and is_prime(n)]


@dataclass(frozen=True, eq=False)
class PrimeContext:
    """Read-only tables for F_p.

    Attributes
    ----------
    p : the odd prime.
    g : least primitive root mod p.
    dlog : int64 array of length p, ``dlog[x] = t`` with ``g**t == x``;
        ``dlog[0]`` is -1 (no logarithm).
    power : int64 array of length p - 1, ``power[t] = g**t mod p``.
    legendre : int8 array of length p, the quadratic character with
        ``legendre[0] = 0``.
    """

    p: int
    g: int
    dlog: np.ndarray = field(repr=False)
    power: np.ndarray = field(repr=False)
    legendre: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        """Order of the multiplicative group, ``p - 1``."""
        return self.p - 1

    def inv(self, x: int) -> int:
        return pow(x % self.p, -1, self.p)

    def phi(self, x: int) -> int:
        """Quadratic character of an arbitrary integer."""
        return int(self.legendre[x % self.p])


def build_context(p: int) -> PrimeContext:
    """Build the tables for an odd prime ``p`` in O(p) time and memory."""
    p = int(p)
    if p == 2:
        raise EvenPrime("p = 2 is not supported; an odd prime is required")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return _cached_context(p)


@lru_cache(maxsize=64)
def _cached_context(p: int) -> PrimeContext:
    g = primitive_root(p)
    power = np.empty(p - 1, dtype=np.int64)
    x = 1
    for t in range(p - 1):
        power[t] = x
        x = x * g % p
    dlog = np.full(p, -1, dtype=np.int64)
    dlog[power] = np.arange(p - 1, dtype=np.int64)
    legendre = np.zeros(p, dtype=np.int8)
    # even powers of a generator are exactly the nonzero squares
    legendre[power[0::2]] = 1
    legendre[power[1::2]] = -1
    for arr in (power, dlog, legendre):
        arr.setflags(write=False)
    return PrimeContext(p=p, g=g, dlog=dlog, power=power, legendre=legendre)


def legendre_symbol(ctx: PrimeContext, x: int) -> int:
    return int(ctx.legendre[x])


def sqrt_mod(ctx: PrimeContext, a: int) -> int | None:
    """A square root of ``a`` mod p, or None for a non-residue.

    Exhaustive search below p = 1000, Tonelli-Shanks above.
    """
    p = ctx.p
    a %= p
    if a == 0:
        return 0
    if ctx.legendre[a] != 1:
        return None
    if p < 1000:
        for r in range(1, p):
            if r * r % p == a:
                return r
    return _tonelli_shanks(a, p)


def _tonelli_shanks(a: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
