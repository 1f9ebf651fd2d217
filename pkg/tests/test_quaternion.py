"""Quaternion arithmetic, conjugation, norm, inner product, symplectic split."""

import numpy as np
import pytest

from qshear.quaternion import (
    I,
    J,
    K,
    ONE,
    Quaternion,
    qconj,
    qinner,
    qmul,
    qnorm,
    qnorm2,
    symplectic_recompose,
    symplectic_split,
)

RNG = np.random.default_rng(20240811)


def test_hamilton_table_exact():
    assert I * J == K
    assert J * I == -K
    assert J * K == I
    assert K * J == -I
    assert K * I == J
    assert I * K == -J
    minus_one = Quaternion(-1.0)
    assert I * I == minus_one
    assert J * J == minus_one
    assert K * K == minus_one
    assert I * J * K == minus_one


def test_identity_element():
    h = Quaternion(3.0, 2.0, -1.0, 5.0)
    assert h * ONE == h
    assert ONE * h == h


def test_product_expansion_by_hand():
    # (1 + i)(1 + j) = 1 + j + i + ij = 1 + i + j + k
    got = Quaternion(1, 1, 0, 0) * Quaternion(1, 0, 1, 0)
    assert got == Quaternion(1, 1, 1, 1)


def test_conjugate_examples():
    h = Quaternion(1, 1, 1, 1)
    assert h.conj() == Quaternion(1, -1, -1, -1)
    g = Quaternion(0.3, -2.0, 0.7, 4.0)
    assert g.conj().conj() == g
    # conj(h1 h2) = conj(h2) conj(h1): with h1 = i, h2 = j the left side is
    # conj(k) = -k and the right side is (-j)(-i) = ji = -k
    assert (I * J).conj() == J.conj() * I.conj()
    assert (I * J).conj() == -K


def test_norm_examples():
    assert Quaternion(1, 1, 1, 1).norm() == 2.0
    assert Quaternion().norm() == 0.0
    # multiplicativity: |i (2 + 2j)| = |2 + 2j| = 2 sqrt(2)
    prod = I * Quaternion(2, 0, 2, 0)
    assert prod.norm() == pytest.approx(2.0 * np.sqrt(2.0), rel=1e-15)


def test_norm_is_scalar_part_of_h_hbar():
    h = RNG.standard_normal(4)
    hh = qmul(h, qconj(h))
    assert hh[0] == pytest.approx(qnorm2(h), rel=1e-15)
    assert np.abs(hh[1:]).max() == 0.0
    assert np.array_equal(qmul(h, qconj(h)), qmul(qconj(h), h))


def test_symplectic_split_examples():
    assert K.split().u == 0 and K.split().v == -1j
    h = Quaternion(0.25, -1.5)
    assert h.split().u == complex(0.25, -1.5) and h.split().v == 0
    p = Quaternion(1, 2, 3, 4).split()
    assert p.u == complex(1, 2) and p.v == complex(3, -4)


def test_split_roundtrip_bit_exact():
    h = RNG.standard_normal((1000, 4))
    u, v = symplectic_split(h)
    assert np.array_equal(symplectic_recompose(u, v), h)
    u2, v2 = symplectic_split(symplectic_recompose(u, v))
    assert np.array_equal(u2, u) and np.array_equal(v2, v)


def test_inner_product_examples():
    assert I.inner(I) == ONE
    # <1, j> = 1 * conj(j) = -j
    assert ONE.inner(J) == -J
    h = Quaternion(*RNG.standard_normal(4))
    hh = h.inner(h)
    assert hh.a0 == pytest.approx(h.norm() ** 2, rel=1e-15)
    assert abs(hh.a1) == 0.0


def test_inner_product_matches_split_expansion():
    # The displayed (u, v) expansion of <h1, h2> is identical to h1 conj(h2):
    # (u1 conj(u2) + conj(v1) v2) + j (v1 conj(u2) - conj(u1) v2).
    h1 = RNG.standard_normal((500, 4))
    h2 = RNG.standard_normal((500, 4))
    direct = qinner(h1, h2)
    (u1, v1), (u2, v2) = symplectic_split(h1), symplectic_split(h2)
    upart = u1 * np.conj(u2) + np.conj(v1) * v2
    vpart = v1 * np.conj(u2) - np.conj(u1) * v2
    assert np.abs(direct - symplectic_recompose(upart, vpart)).max() < 1e-14


def test_bulk_algebra_properties():
    n = 10_000
    a = RNG.standard_normal((n, 4))
    b = RNG.standard_normal((n, 4))
    c = RNG.standard_normal((n, 4))
    assoc = np.abs(qmul(qmul(a, b), c) - qmul(a, qmul(b, c))).max()
    assert assoc < 1e-12
    dist = np.abs(qmul(a, b + c) - (qmul(a, b) + qmul(a, c))).max()
    assert dist < 1e-12
    antih = np.abs(qconj(qmul(a, b)) - qmul(qconj(b), qconj(a))).max()
    assert antih < 1e-12
    mult = np.abs(qnorm(qmul(a, b)) - qnorm(a) * qnorm(b))
    rel = (mult / (qnorm(a) * qnorm(b))).max()
    assert rel < 1e-12
