"""Quaternion arithmetic and the symplectic (Cayley-Dickson) split.

A quaternion h = a0 + i a1 + j a2 + k a3 is stored either as the scalar
:class:`Quaternion` or, for sampled fields, as a numpy array whose last
axis has length 4 holding (a0, a1, a2, a3).  The symplectic split writes
h = u + j v with u = a0 + i a1 and v = a2 - i a3; u and v live in the
commutative i-subfield and are represented as numpy complex values.  All
array helpers broadcast.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "Quaternion",
    "SymplecticPair",
    "qmul",
    "qconj",
    "qnorm",
    "qnorm2",
    "qinner",
    "symplectic_split",
    "symplectic_recompose",
]


def qmul(h1, h2):
    """Hamilton product of quaternion arrays, broadcasting over leading axes.

    Parameters
    ----------
    h1, h2 : array_like, shape (..., 4)
        Quaternion components (a0, a1, a2, a3) on the last axis.

    Returns
    -------
    ndarray, shape (..., 4)
    """
    h1 = np.asarray(h1, dtype=float)
    h2 = np.asarray(h2, dtype=float)
    a0, a1, a2, a3 = np.moveaxis(h1, -1, 0)
    b0, b1, b2, b3 = np.moveaxis(h2, -1, 0)
    return np.stack(
        [
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a1 * b0 + a0 * b1 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ],
        axis=-1,
    )


def qconj(h):
    """Quaternion conjugate: negate the i, j, k components."""
    out = np.array(h, dtype=float, copy=True)
    out[..., 1:] *= -1.0
    return out


def qnorm2(h):
    """Squared norm a0^2 + a1^2 + a2^2 + a3^2 (the scalar part of h conj(h))."""
    h = np.asarray(h, dtype=float)
    return (h * h).sum(axis=-1)


def qnorm(h):
    """Euclidean norm sqrt(h conj(h)); multiplicative over qmul."""
    return np.sqrt(qnorm2(h))


def qinner(h1, h2):
    """Quaternion inner product <h1, h2> = h1 conj(h2).

    In the symplectic split this equals (u1 conj(u2) + conj(v1) v2)
    + j (v1 conj(u2) - conj(u1) v2); the defining product and the split
    expansion agree identically, and ``tests`` assert that.
    """
    return qmul(h1, qconj(h2))


def symplectic_split(h):
    """Split h = u + j v into complex arrays (u, v), u = a0 + i a1, v = a2 - i a3."""
    h = np.asarray(h, dtype=float)
    u = h[..., 0] + 1j * h[..., 1]
    v = h[..., 2] - 1j * h[..., 3]
    return u, v


def symplectic_recompose(u, v):
    """Inverse of :func:`symplectic_split`; exact for all float inputs."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    return np.stack([u.real, u.imag, v.real, -v.imag], axis=-1)


@dataclass(frozen=True)
class SymplecticPair:
    """The pair (u, v) with h = u + j v."""

    u: complex
    v: complex

    def recompose(self) -> "Quaternion":
        a = symplectic_recompose(self.u, self.v)
        return Quaternion(*a)


@dataclass(frozen=True)
class Quaternion:
    """A single element of the quaternion algebra.

    Supports +, -, *, scalar multiplication, conjugation and norm.
    Multiplication is the non-commutative Hamilton product.
    """

    a0: float = 0.0
    a1: float = 0.0
    a2: float = 0.0
    a3: float = 0.0

    @classmethod
    def from_array(cls, arr) -> "Quaternion":
        arr = np.asarray(arr, dtype=float)
        return cls(float(arr[0]), float(arr[1]), float(arr[2]), float(arr[3]))

    def to_array(self) -> np.ndarray:
        return np.array([self.a0, self.a1, self.a2, self.a3])

    def __add__(self, other: "Quaternion") -> "Quaternion":
        other = _coerce(other)
        return Quaternion(self.a0 + other.a0, self.a1 + other.a1,
                          self.a2 + other.a2, self.a3 + other.a3)

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a0, -self.a1, -self.a2, -self.a3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-_coerce(other))

    def __mul__(self, other) -> "Quaternion":
        other = _coerce(other)
        return Quaternion.from_array(qmul(self.to_array(), other.to_array()))

    def __rmul__(self, other) -> "Quaternion":
        return _coerce(other) * self

    def conj(self) -> "Quaternion":
        return Quaternion(self.a0, -self.a1, -self.a2, -self.a3)

    def norm(self) -> float:
        return float(qnorm(self.to_array()))

    def inner(self, other: "Quaternion") -> "Quaternion":
        return self * _coerce(other).conj()

    def split(self) -> SymplecticPair:
        return SymplecticPair(complex(self.a0, self.a1), complex(self.a2, -self.a3))

    def isclose(self, other: "Quaternion", tol: float = 0.0) -> bool:
        d = self - _coerce(other)
        return max(abs(d.a0), abs(d.a1), abs(d.a2), abs(d.a3)) <= tol


def _coerce(x) -> Quaternion:
    if isinstance(x, Quaternion):
        return x
    if np.isscalar(x):
        return Quaternion(float(x))
    return Quaternion.from_array(x)


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
