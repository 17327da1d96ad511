"""Exact arithmetic in Z[w], w a primitive 2^m-th root of unity.

Elements are stored on the integral basis 1, w, ..., w^(k-1) with
k = 2^(m-1); multiplication reduces with w^k = -1 (negacyclic wrap).
The array helpers at the bottom work on the last axis of int64 arrays so
whole spectra can be handled at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, InvalidInputError


def basis_size(m: int) -> int:
    if m < 1:
        raise InvalidInputError(f"order exponent m must be >= 1, got {m}")
    return 1 << (m - 1)


@dataclass(frozen=True)
class CyclotomicInteger:
    m: int
    coeffs: tuple

    def __post_init__(self):
        k = basis_size(self.m)
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != k:
            raise InvalidInputError(f"expected {k} coefficients for m={self.m}, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def k(self) -> int:
        return len(self.coeffs)

    @property
    def q(self) -> int:
        return 2 * self.k

    @classmethod
    def zero(cls, m: int) -> "CyclotomicInteger":
        return cls(m, (0,) * basis_size(m))

    @classmethod
    def from_int(cls, m: int, value: int) -> "CyclotomicInteger":
        return cls(m, (value,) + (0,) * (basis_size(m) - 1))

    def _check(self, other: "CyclotomicInteger") -> None:
        if not isinstance(other, CyclotomicInteger):
            raise TypeError(f"cannot combine CyclotomicInteger with {type(other).__name__}")
        if other.m != self.m:
            raise DomainError(f"mismatched orders m={self.m} and m={other.m}")

    def __add__(self, other):
        self._check(other)
        return CyclotomicInteger(self.m, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return CyclotomicInteger(self.m, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return scalar_mul(self, int(other))
        self._check(other)
        return CyclotomicInteger(self.m, negacyclic_mul(self.coeffs, other.coeffs).tolist())

    __rmul__ = __mul__

    def __complex__(self) -> complex:
        return complex(embed(self.coeffs))

    def __repr__(self) -> str:
        return f"CyclotomicInteger(m={self.m}, coeffs={self.coeffs})"


def add(z: CyclotomicInteger, w: CyclotomicInteger) -> CyclotomicInteger:
    return z + w


def neg(z: CyclotomicInteger) -> CyclotomicInteger:
    return -z


def scalar_mul(z: CyclotomicInteger, t: int) -> CyclotomicInteger:
    return CyclotomicInteger(z.m, [t * c for c in z.coeffs])


def mul(z: CyclotomicInteger, w: CyclotomicInteger) -> CyclotomicInteger:
    return z * w


def conj(z: CyclotomicInteger) -> CyclotomicInteger:
    """Complex conjugation, w^i -> w^(-i)."""
    return CyclotomicInteger(z.m, conj_coeffs(z.coeffs).tolist())


def norm_sq(z: CyclotomicInteger) -> CyclotomicInteger:
    """``z * conj(z)``, the squared modulus as an element of Z[w]."""
    return z * conj(z)


def omega_pow(m: int, t: int) -> CyclotomicInteger:
    k = basis_size(m)
    t %= 2 * k
    coeffs = [0] * k
    if t < k:
        coeffs[t] = 1
    else:
        coeffs[t - k] = -1
    return CyclotomicInteger(m, coeffs)


def as_scaled_root(z: CyclotomicInteger, scale: int) -> Optional[int]:
    """Exponent ``t`` with ``z == scale * w^t``, or None if there is none."""
    t = scaled_root_exponents(np.asarray(z.coeffs)[None, :], scale)
    return None if t is None else int(t[0])


# --- array forms -----------------------------------------------------------


def negacyclic_mul(a, b) -> np.ndarray:
    """Product in Z[w] of coefficient arrays (last axis length k), broadcasting."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    k = a.shape[-1]
    if b.shape[-1] != k:
        raise DomainError(f"mismatched basis sizes {k} and {b.shape[-1]}")
    out = np.zeros(np.broadcast_shapes(a.shape, b.shape), dtype=np.int64)
    for i in range(k):
        term = a[..., i : i + 1] * b
        # w^i * w^j = w^(i+j), wrapping past k with a sign flip
        out[..., i:] += term[..., : k - i]
        out[..., :i] -= term[..., k - i :]
    return out


def conj_coeffs(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    out = np.empty_like(a)
    out[..., 0] = a[..., 0]
    out[..., 1:] = -a[..., :0:-1]
    return out


def scaled_root_exponents(coeffs, scale: int) -> Optional[np.ndarray]:
    """Per-row exponents t with ``row == scale * w^t``; None if any row fails."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    k = coeffs.shape[-1]
    nonzero = coeffs != 0
    if not np.all(nonzero.sum(axis=-1) == 1):
        return None
    pos = np.argmax(nonzero, axis=-1)
    value = np.take_along_axis(coeffs, pos[..., None], axis=-1)[..., 0]
    if not np.all(np.abs(value) == scale):
        return None
    return pos + np.where(value < 0, k, 0)


def embed(coeffs) -> np.ndarray:
    """Complex value(s) at w = exp(i*pi/k); floating point, for cross-checks only."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    k = coeffs.shape[-1]
    powers = np.exp(1j * np.pi * np.arange(k) / k)
    return coeffs @ powers
