from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from hypermoment.cyclotomic import CyclotomicInt, cyclotomic_polynomial


def test_cyclotomic_polynomials():
    # low to high coefficients
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert len(cyclotomic_polynomial(99)) - 1 == 60  # phi(99)


def test_zeta_relations():
    z = CyclotomicInt.zeta(3)
    assert 1 + z + z * z == CyclotomicInt.from_int(3, 0)
    i = CyclotomicInt.zeta(4)
    assert i * i == CyclotomicInt.from_int(4, -1)
    assert (i ** 4).to_int() == 1


def test_norm_of_gaussian_integer():
    a = CyclotomicInt(4, (3, 2))  # 3 + 2i
    assert (a * a.conj()).to_int() == 13


def test_mixed_conductors_align():
    w = CyclotomicInt.zeta(3)
    i = CyclotomicInt.zeta(4)
    prod = w * i
    assert prod.N == 12
    assert prod == CyclotomicInt.zeta(12, 7)


def test_galois_action():
    z = CyclotomicInt.zeta(5)
    assert z.galois(2) == CyclotomicInt.zeta(5, 2)
    assert z.galois(-1) == z.conj()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([3, 4, 5, 8, 12]), st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_ring_axioms(N, a, b):
    x, y = CyclotomicInt(N, a), CyclotomicInt(N, b)
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    assert (x - x).is_zero()
    assert abs((x * y).embed() - x.embed() * y.embed()) < 1e-6
