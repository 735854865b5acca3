"""Multiplicative characters, Gauss sums and Jacobi sums over F_p.

A character is identified by its exponent ``k`` modulo ``p - 1``: it is
``omega^k`` where ``omega(g) = exp(2*pi*i / (p-1))`` for the context's
primitive root ``g``.  ``k = 0`` is the trivial character and
``k = (p-1)/2`` the quadratic one.  Characters vanish at 0.

Gauss sums are floating point (they live in Z[zeta_{p(p-1)}]); Jacobi sums
are exact elements of the small ring Z[zeta_N] with N the lcm of the two
character orders.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclotomic import CyclotomicInt
from .errors import IdentityViolation, PrecisionLoss
from .fft import chirp_dft
from .prime_field import PrimeContext


def order(ctx: PrimeContext, k: int) -> int:
    """Order of the character omega^k."""
    return ctx.n // gcd(k % ctx.n, ctx.n)


def characters_of_order_at_most(ctx: PrimeContext, bound: int) -> list[int]:
    """Exponents k whose character has order <= bound, ascending."""
    n = ctx.n
    out = []
    for d in range(1, bound + 1):
        if n % d == 0:
            step = n // d
            out.extend(j * step for j in range(d) if gcd(j, d) == 1)
    return sorted(out)


def char_value(ctx: PrimeContext, k: int, x: int) -> complex:
    x %= ctx.p
    if x == 0:
        return 0j
    t = (k * int(ctx.dlog[x])) % ctx.n
    return complex(np.exp(2j * np.pi * t / ctx.n))


def char_exact(ctx: PrimeContext, k: int, x: int, N: int | None = None) -> CyclotomicInt:
    """omega^k(x) as an element of Z[zeta_N] (N defaults to the order)."""
    N = order(ctx, k) if N is None else N
    if ctx.n % N or (k * N) % ctx.n:
        raise ValueError(f"character {k} does not take values in Z[zeta_{N}]")
    x %= ctx.p
    if x == 0:
        return CyclotomicInt(N)
    t = (k * int(ctx.dlog[x])) % ctx.n
    return CyclotomicInt.zeta(N, t // (ctx.n // N))


def sign_at_minus_one(ctx: PrimeContext, k: int) -> int:
    """omega^k(-1), which is (-1)^k since dlog(-1) = (p-1)/2."""
    return -1 if k % 2 else 1


def round_exact(x: float | complex, what: str = "value") -> int:
    """Round to the nearest integer or raise :class:`PrecisionLoss`.

    Accepted when the distance to the nearest integer (imaginary part
    included) is below ``max(1e-4, 1e-10 * |x|)``.
    """
    z = complex(x)
    r = round(z.real)
    err = abs(z - r)
    if err >= max(1e-4, 1e-10 * abs(z)):
        raise PrecisionLoss(f"{what} = {z!r} is not within tolerance of an integer")
    return int(r)


def round_exact_array(z: np.ndarray, what: str = "values") -> np.ndarray:
    z = np.asarray(z, dtype=np.complex128)
    r = np.rint(z.real)
    err = np.abs(z - r)
    tol = np.maximum(1e-4, 1e-10 * np.abs(z))
    bad = np.nonzero(err >= tol)[0]
    if bad.size:
        i = int(bad[0])
        raise PrecisionLoss(f"{what}[{i}] = {z[i]!r} is not within tolerance of an integer")
    return r.astype(np.int64)


@dataclass(frozen=True, eq=False)
class GaussTable:
    """``values[k] = g(omega^k)`` for k = 0 .. p-2."""

    p: int
    values: np.ndarray

    def __getitem__(self, k):
        return self.values[np.asarray(k) % (self.p - 1)]


def _additive_phases(ctx: PrimeContext) -> np.ndarray:
    # t -> exp(2 pi i g^t / p), phase kept exact until the exp
    return np.exp(2j * np.pi * ctx.power / ctx.p)


def gauss_table(ctx: PrimeContext, method: str = "chirp") -> GaussTable:
    """All p - 1 Gauss sums ``g(chi) = sum_x chi(x) exp(2 pi i x / p)``.

    As a function of k this is a length-(p-1) DFT of ``t -> zeta_p^(g^t)``.
    ``method`` selects the transform: ``"chirp"`` (Bluestein, O(p log p)),
    ``"numpy"`` (``numpy.fft``) or ``"direct"`` (O(p^2) summation, for
    cross-checks at small p).
    """
    a = _additive_phases(ctx)
    if method == "chirp":
        vals = chirp_dft(a, sign=+1)
    elif method == "numpy":
        vals = np.fft.ifft(a) * ctx.n
    elif method == "direct":
        k = np.arange(ctx.n, dtype=np.int64)
        phase = np.outer(k, k) % ctx.n
        vals = np.exp(2j * np.pi * phase / ctx.n) @ a
    else:
        raise ValueError(f"unknown method {method!r}")
    vals.setflags(write=False)
    return GaussTable(p=ctx.p, values=vals)


class _JacobiCache:
    """Memoized exact Jacobi sums for one prime."""

    def __init__(self, ctx: PrimeContext):
        self.ctx = ctx
        x = np.arange(2, ctx.p, dtype=np.int64)
        self._l1 = ctx.dlog[x]
        self._l2 = ctx.dlog[(1 - x) % ctx.p]
        self._memo: dict[tuple[int, int], CyclotomicInt] = {}

    def __call__(self, a: int, b: int) -> CyclotomicInt:
        n = self.ctx.n
        key = (a % n, b % n)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._compute(*key)
            self._memo[key] = hit
        return hit

    def _compute(self, a: int, b: int) -> CyclotomicInt:
        ctx = self.ctx
        oa, ob = order(ctx, a), order(ctx, b)
        N = oa // gcd(oa, ob) * ob
        step = ctx.n // N
        e = (a * self._l1 + b * self._l2) % ctx.n
        counts = np.bincount(e // step, minlength=N)
        return CyclotomicInt(N, counts.tolist())


def jacobi_sum(ctx: PrimeContext, chi: int, psi: int) -> CyclotomicInt:
    """Exact ``J(chi, psi) = sum_{x != 0} chi(x) psi(1 - x)``."""
    return _JacobiCache(ctx)(chi, psi)


@dataclass
class IdentityReport:
    name: str
    p: int
    checked: int = 0
    max_deviation: float = 0.0


def check_gauss_identities(ctx: PrimeContext, gauss: GaussTable | None = None,
                           max_m: int = 6) -> IdentityReport:
    """Verify g(eps) = -1, the product g(chi) g(chi-bar), and Hasse-Davenport.

    The last is checked for every psi and every m | p - 1 with m <= max_m.
    Raises :class:`IdentityViolation` with witness ``(k, m)`` on failure.
    """
    p, n = ctx.p, ctx.n
    G = (gauss or gauss_table(ctx)).values
    rep = IdentityReport("gauss", p)

    dev = abs(G[0] + 1)
    rep.max_deviation = max(rep.max_deviation, dev)
    rep.checked += 1
    if dev > 1e-9:
        raise IdentityViolation(f"g(eps) = {G[0]} != -1 at p={p}", witness=(0, 1))

    k = np.arange(n)
    lhs = G * G[(-k) % n]
    rhs = np.where(k % 2, -1.0, 1.0) * p
    rhs[0] -= n
    devs = np.abs(lhs - rhs)
    rep.checked += n
    rep.max_deviation = max(rep.max_deviation, float(devs.max()))
    bad = np.nonzero(devs > 1e-6 * p)[0]
    if bad.size:
        raise IdentityViolation(f"g(chi)g(chi-bar) identity fails at p={p}, k={bad[0]}",
                                witness=(int(bad[0]), 1))

    for m in range(2, max_m + 1):
        if n % m:
            continue
        roots = np.arange(m) * (n // m)
        lhs = np.prod(G[(k[:, None] + roots[None, :]) % n], axis=1)
        # psi(m^-m) = exp(2 pi i k dlog(m^-m) / n)
        t = int(ctx.dlog[pow(pow(m, m, p), -1, p)])
        twist = np.exp(2j * np.pi * ((k * t) % n) / n)
        rhs = -G[(m * k) % n] * twist * np.prod(G[roots])
        devs = np.abs(lhs - rhs)
        rep.checked += n
        rep.max_deviation = max(rep.max_deviation, float(devs.max()))
        bad = np.nonzero(devs > 1e-6 * p ** (m / 2))[0]
        if bad.size:
            raise IdentityViolation(f"Hasse-Davenport fails at p={p}, k={bad[0]}, m={m}",
                                    witness=(int(bad[0]), m))
    return rep


def check_jacobi_identities(ctx: PrimeContext, gauss: GaussTable | None = None,
                            max_order: int = 12) -> IdentityReport:
    """Verify the standard Jacobi-sum identities over all character pairs.

    Pairs range over characters of order <= ``max_order``.  Every identity
    whose two sides are Jacobi sums and roots of unity is checked exactly in
    the cyclotomic ring; the Gauss-sum factorization is checked numerically
    at 1e-6 relative tolerance.  Raises :class:`IdentityViolation` carrying
    ``(identity, chi, psi)``.
    """
    p, n = ctx.p, ctx.n
    G = (gauss or gauss_table(ctx)).values
    J = _JacobiCache(ctx)
    rep = IdentityReport("jacobi", p)
    chars = characters_of_order_at_most(ctx, max_order)
    phi = n // 2

    def fail(ident, chi, psi, detail=""):
        raise IdentityViolation(f"Jacobi identity ({ident}) fails at p={p}, chi={chi}, "
                                f"psi={psi} {detail}", witness=(ident, chi, psi))

    for a in chars:
        triv = 1 if a == 0 else 0
        if J(a, 0) != -1 + n * triv:
            fail(2, a, 0)
        if J(a, -a) != -sign_at_minus_one(ctx, a) + n * triv:
            fail(3, a, -a)
        rep.checked += 2
        if a == 0:
            continue  # (4) needs chi nontrivial: J(eps, eps) = p - 2
        rhs = char_exact(ctx, -a, 4) * J(a, phi)
        if J(a, a) != rhs:
            fail(4, a, a)
        rep.checked += 1

    for a in chars:
        for b in chars:
            jab = J(a, b)
            if jab != J(b, a):
                fail("symmetry", a, b)
            c = (a + b) % n
            numeric = G[a] * G[b] / G[c]
            if c == 0:
                numeric += n * sign_at_minus_one(ctx, b)
            dev = abs(jab.embed() - numeric)
            rep.max_deviation = max(rep.max_deviation, dev)
            if dev > 1e-6 * p:
                fail(1, a, b, f"deviation {dev:g}")
            if J(a, -b) != sign_at_minus_one(ctx, a) * J(a, b - a):
                fail(5, a, b)
            if a and b and c:
                if jab * jab.conj() != p:
                    fail(6, a, b)
            rep.checked += 4
    return rep
