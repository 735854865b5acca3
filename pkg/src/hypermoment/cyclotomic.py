"""Exact arithmetic in the cyclotomic rings Z[zeta_N].

Elements are stored as coefficient vectors on ``1, zeta, ..., zeta^(N-1)``
modulo ``zeta^N = 1``.  That representation is not unique (the powers of
zeta are linearly dependent), so equality reduces the difference modulo the
N-th cyclotomic polynomial.  Coefficients are Python ints: delta terms in
the trace formulas reach p^8 and must not overflow.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd


def _lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # den monic, division exact
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            out[i - dn] = c
            for j in range(dn + 1):
                num[i - dn + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (low degree first) of the n-th cyclotomic polynomial."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicInt:
    """An element ``sum_j coeffs[j] * zeta_N**j`` of Z[zeta_N]."""

    __slots__ = ("N", "coeffs", "_canon")

    def __init__(self, N: int, coeffs=()):
        if N < 1:
            raise ValueError("conductor must be positive")
        c = [0] * N
        for j, v in enumerate(coeffs):
            c[j % N] += int(v)
        self.N = N
        self.coeffs = tuple(c)
        self._canon = None

    # construction -----------------------------------------------------
    @classmethod
    def from_int(cls, N: int, value: int) -> CyclotomicInt:
        return cls(N, [value])

    @classmethod
    def zeta(cls, N: int, power: int = 1) -> CyclotomicInt:
        c = [0] * N
        c[power % N] = 1
        return cls(N, c)

    def lift(self, M: int) -> CyclotomicInt:
        """Re-express in Z[zeta_M]; ``M`` must be a multiple of ``N``."""
        if M % self.N:
            raise ValueError(f"{M} is not a multiple of {self.N}")
        if M == self.N:
            return self
        step = M // self.N
        c = [0] * M
        for j, v in enumerate(self.coeffs):
            c[j * step] = v
        return CyclotomicInt(M, c)

    def _align(self, other):
        if isinstance(other, int):
            return self, CyclotomicInt.from_int(self.N, other)
        if not isinstance(other, CyclotomicInt):
            return None, None
        if other.N == self.N:
            return self, other
        M = _lcm(self.N, other.N)
        return self.lift(M), other.lift(M)

    # ring operations -------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return CyclotomicInt(a.N, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.N, [-x for x in self.coeffs])

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return CyclotomicInt(a.N, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInt(self.N, [other * x for x in self.coeffs])
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        N = a.N
        out = [0] * N
        bnz = [(j, y) for j, y in enumerate(b.coeffs) if y]
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in bnz:
                    out[(i + j) % N] += x * y
        return CyclotomicInt(N, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers need a unit; use inverse_times")
        result = CyclotomicInt.from_int(self.N, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> CyclotomicInt:
        """Complex conjugation, zeta -> zeta^-1."""
        N = self.N
        return CyclotomicInt(N, [self.coeffs[(-j) % N] for j in range(N)])

    def galois(self, a: int) -> CyclotomicInt:
        """The automorphism zeta -> zeta^a for a coprime to N."""
        N = self.N
        out = [0] * N
        for j, v in enumerate(self.coeffs):
            out[(a * j) % N] += v
        return CyclotomicInt(N, out)

    # canonical form and comparisons ----------------------------------
    def canonical(self) -> tuple[int, ...]:
        """Coefficients reduced modulo the cyclotomic polynomial Phi_N."""
        if self._canon is None:
            phi = cyclotomic_polynomial(self.N)
            deg = len(phi) - 1
            c = list(self.coeffs)
            for i in range(len(c) - 1, deg - 1, -1):
                v = c[i]
                if v:
                    for j in range(deg + 1):
                        c[i - deg + j] -= v * phi[j]
            self._canon = tuple(c[:deg])
        return self._canon

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return (a - b).is_zero()

    __hash__ = None

    def is_integer(self) -> bool:
        return not any(self.canonical()[1:])

    def to_int(self) -> int:
        """The rational integer this element equals; ValueError otherwise."""
        canon = self.canonical()
        if any(canon[1:]):
            raise ValueError(f"{self!r} is not a rational integer")
        return canon[0] if canon else 0

    def embed(self) -> complex:
        """Image under zeta_N -> exp(2*pi*i/N)."""
        N = self.N
        return sum(v * cmath.exp(2j * cmath.pi * j / N) for j, v in enumerate(self.coeffs) if v)

    def __complex__(self):
        return self.embed()

    def __repr__(self):
        terms = [f"{v}*z^{j}" if j else str(v) for j, v in enumerate(self.coeffs) if v]
        return f"CyclotomicInt(N={self.N}: {' + '.join(terms) or '0'})"
