from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypermoment.fft import chirp_dft, naive_dft


@pytest.mark.parametrize("n", [1, 2, 3, 5, 12, 16, 100, 1008, 10006])
@pytest.mark.parametrize("sign", [-1, 1])
def test_chirp_matches_numpy(n, sign):
    rng = np.random.default_rng(n)
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    ref = np.fft.fft(x) if sign == -1 else np.fft.ifft(x) * n
    assert np.allclose(chirp_dft(x, sign), ref, atol=1e-8 * max(1, n))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 60))
def test_chirp_matches_naive(n):
    x = np.exp(1j * np.arange(n) ** 2 / 7.0)
    assert np.allclose(chirp_dft(x), naive_dft(x), atol=1e-9 * n)


def test_delta_transforms_to_ones():
    x = np.zeros(7, dtype=complex)
    x[0] = 1
    assert np.allclose(chirp_dft(x), np.ones(7))
