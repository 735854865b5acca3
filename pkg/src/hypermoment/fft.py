"""Arbitrary-length DFT by the chirp (Bluestein) reduction.

``p - 1`` is never a power of two, so the length-N transform is rewritten as
a circular convolution with a quadratic-phase chirp and evaluated with
power-of-two FFTs.  Chirp phases are reduced as exact integers
(``j*j mod 2N``) before entering floating point, which keeps the error flat
in N.
"""

from __future__ import annotations

import numpy as np


def _next_pow2(n: int) -> int:
    return 1 << (n - 1).bit_length()


def _chirp(n: int, sign: int) -> np.ndarray:
    j = np.arange(n, dtype=np.int64)
    phase = (j * j) % (2 * n)
    return np.exp(sign * 1j * np.pi * phase / n)


def chirp_dft(x, sign: int = -1) -> np.ndarray:
    """Return ``X[k] = sum_n x[n] * exp(sign * 2j*pi*n*k / N)``.

    ``sign=-1`` is the usual forward DFT (matches ``numpy.fft.fft``);
    ``sign=+1`` is the unnormalized inverse.
    """
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    if n == 0:
        return x.copy()
    if n == 1:
        return x.copy()
    c = _chirp(n, sign)
    m = _next_pow2(2 * n - 1)
    a = np.zeros(m, dtype=np.complex128)
    a[:n] = x * c
    b = np.zeros(m, dtype=np.complex128)
    cc = np.conj(c)
    b[:n] = cc
    b[m - n + 1:] = cc[1:][::-1]
    conv = np.fft.ifft(np.fft.fft(a) * np.fft.fft(b))
    return c * conv[:n]


def naive_dft(x, sign: int = -1) -> np.ndarray:
    """O(N^2) reference transform with exact integer phase reduction."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    k = np.arange(n, dtype=np.int64)
    phase = np.outer(k, k) % n
    return np.exp(sign * 2j * np.pi * phase / n) @ x
