"""Generalized Boolean functions F_2^n -> Z_{2^m}.

The sign function w^f(x) is kept as a ``(2^n, k)`` coefficient array, so the
generalized transform is k ordinary integer transforms run side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .boolean import MAX_VARS, BooleanFunction, _log2_exact, fwht
from .cyclotomic import (
    CyclotomicInteger,
    basis_size,
    conj_coeffs,
    negacyclic_mul,
    scaled_root_exponents,
)
from .errors import DimensionMismatch, DomainError, InvalidInputError


def order_exponent(q: int) -> int:
    if q < 2 or q & (q - 1):
        raise InvalidInputError(f"modulus q={q} is not a power of two >= 2")
    return q.bit_length() - 1


@dataclass(frozen=True)
class GeneralizedBooleanFunction:
    """Value table of ``f: F_2^n -> Z_q``, q = 2^m; index convention as for BooleanFunction."""

    n: int
    m: int
    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != 1 << self.n:
            raise InvalidInputError(f"expected {1 << self.n} values for n={self.n}, got {len(values)}")
        basis_size(self.m)
        q = 1 << self.m
        if any(not 0 <= v < q for v in values):
            raise InvalidInputError(f"values must lie in [0, {q})")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Sequence[int], q: int) -> "GeneralizedBooleanFunction":
        values = [int(v) for v in values]
        n = _log2_exact(len(values))
        if n > MAX_VARS:
            raise InvalidInputError(f"n={n} exceeds {MAX_VARS}")
        return cls(n, order_exponent(q), values)

    @classmethod
    def from_string(cls, text: str, q: int) -> "GeneralizedBooleanFunction":
        """Parse ``"2101"`` (q <= 10) or ``"2,1,0,1"``; whitespace between digits is ignored.

        For q > 10 the table is always read as comma separated, so a lone ``"12"`` is one value.
        """
        text = text.strip()
        try:
            if "," in text or q > 10:
                values = [int(tok) for tok in text.split(",")]
            else:
                values = [int(ch) for ch in "".join(text.split())]
        except ValueError:
            raise InvalidInputError(f"cannot parse value table {text!r}") from None
        if not values:
            raise InvalidInputError("empty value table")
        return cls.from_values(values, q)

    @classmethod
    def from_boolean(cls, f: BooleanFunction, m: int = 1) -> "GeneralizedBooleanFunction":
        """Embed b as ``2^(m-1) * b`` so that w^value equals (-1)^b."""
        return cls(f.n, m, (f.bits << (m - 1)).tolist())

    @property
    def q(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return 1 << (self.m - 1)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def sign_coeffs(self) -> np.ndarray:
        """Coefficients of w^f(x) on the integral basis, shape ``(2^n, k)``."""
        return sign_coeffs(self.array, self.m)

    def shift(self, c: int) -> "GeneralizedBooleanFunction":
        return GeneralizedBooleanFunction(self.n, self.m, (self.array + c) % self.q)

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)


GBF = GeneralizedBooleanFunction


def sign_coeffs(values: np.ndarray, m: int) -> np.ndarray:
    """Map residues (any leading shape) to w^value coefficient vectors on a new last axis."""
    k = basis_size(m)
    values = np.asarray(values, dtype=np.int64) % (2 * k)
    out = np.zeros(values.shape + (k,), dtype=np.int64)
    pos = values % k
    np.put_along_axis(out, pos[..., None], np.where(values < k, 1, -1)[..., None], axis=-1)
    return out


class GeneralizedSpectrum:
    """Spectrum ``H_f(u)`` as a ``(2^n, k)`` coefficient array; items are CyclotomicIntegers."""

    def __init__(self, n: int, m: int, coeffs: np.ndarray):
        self.n = n
        self.m = m
        self.coeffs = np.asarray(coeffs, dtype=np.int64)

    def __len__(self) -> int:
        return self.coeffs.shape[0]

    def __getitem__(self, u: int) -> CyclotomicInteger:
        return CyclotomicInteger(self.m, self.coeffs[u].tolist())

    def __iter__(self) -> Iterator[CyclotomicInteger]:
        return (self[u] for u in range(len(self)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, GeneralizedSpectrum):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.coeffs, other.coeffs)

    def norm_sq(self) -> np.ndarray:
        return negacyclic_mul(self.coeffs, conj_coeffs(self.coeffs))

    def tolist(self) -> list:
        return self.coeffs.tolist()

    def __repr__(self) -> str:
        return f"GeneralizedSpectrum(n={self.n}, m={self.m}, coeffs={self.coeffs.tolist()})"


def gwht(f: GeneralizedBooleanFunction) -> GeneralizedSpectrum:
    """``H_f(u) = sum_x (-1)^{x.u} w^f(x)``, exact in Z[w]."""
    return GeneralizedSpectrum(f.n, f.m, fwht(f.sign_coeffs().T).T)


def _unit(k: int, scale: int) -> np.ndarray:
    e = np.zeros(k, dtype=np.int64)
    e[0] = scale
    return e


def is_gbent(f: GeneralizedBooleanFunction) -> bool:
    """Every ``|H_f(u)|^2`` equals 2^n exactly."""
    return bool(np.all(gwht(f).norm_sq() == _unit(f.k, 1 << f.n)))


def _dual_exponents(f: GeneralizedBooleanFunction) -> Optional[np.ndarray]:
    if f.n % 2:
        return None
    return scaled_root_exponents(gwht(f).coeffs, 1 << (f.n // 2))


def regular_dual(f: GeneralizedBooleanFunction) -> Optional[GeneralizedBooleanFunction]:
    """The dual f^ with ``H_f(u) = 2^{n/2} w^{f^(u)}``, or None when f is not regular.

    Only even n are considered, where 2^{n/2} is a rational integer.
    """
    t = _dual_exponents(f)
    if t is None:
        return None
    return GeneralizedBooleanFunction(f.n, f.m, t.tolist())


def is_regular(f: GeneralizedBooleanFunction) -> bool:
    return _dual_exponents(f) is not None


def is_regular_any_parity(f: GeneralizedBooleanFunction) -> bool:
    """Whether every ``H_f(u)`` is ``2^{n/2}`` times a q-th root of unity, for any n.

    Tested exactly through the squares: ``H_f(u)^2 == 2^n * w^{2t}``. For even
    n this agrees with :func:`is_regular`; for odd n it also catches spectra
    such as ``1 + i = sqrt(2) * w`` at q = 8, where sqrt(2) lies in Z[w].
    """
    h = gwht(f).coeffs
    t = scaled_root_exponents(negacyclic_mul(h, h), 1 << f.n)
    return t is not None and bool(np.all(t % 2 == 0))


def is_self_dual_gbf(f: GeneralizedBooleanFunction) -> bool:
    return regular_dual(f) == f


def is_anti_self_dual_gbf(f: GeneralizedBooleanFunction) -> bool:
    d = regular_dual(f)
    return d is not None and d.shift(f.q // 2) == f


# --- restricted affine action ----------------------------------------------


def gf2_inverse(matrix) -> np.ndarray:
    """Inverse of a square 0/1 matrix over F_2 by Gauss-Jordan elimination."""
    a = np.array(matrix, dtype=np.uint8) & 1
    n = a.shape[0]
    if a.shape != (n, n):
        raise InvalidInputError(f"matrix must be square, got shape {a.shape}")
    aug = np.concatenate([a, np.eye(n, dtype=np.uint8)], axis=1)
    for col in range(n):
        pivots = np.flatnonzero(aug[col:, col]) + col
        if pivots.size == 0:
            raise DomainError("matrix is singular over F_2")
        p = pivots[0]
        if p != col:
            aug[[col, p]] = aug[[p, col]]
        rows = np.flatnonzero(aug[:, col])
        rows = rows[rows != col]
        aug[rows] ^= aug[col]
    return aug[:, n:]


def points(n: int) -> np.ndarray:
    """All points of F_2^n as rows, row j holding the bits of j (x_1 = bit 0)."""
    return (np.arange(1 << n)[:, None] >> np.arange(n)) & 1


def point_index(rows: np.ndarray) -> np.ndarray:
    rows = np.asarray(rows, dtype=np.int64)
    return rows @ (1 << np.arange(rows.shape[-1], dtype=np.int64))


@dataclass(frozen=True)
class AffineTransform:
    """``f -> f(xM + a) + c`` with x a row vector, M in GL(n,2), a in F_2^n, c in Z_q."""

    M: tuple
    a: tuple
    c: int
    q: int

    def __post_init__(self):
        M = tuple(tuple(int(v) & 1 for v in row) for row in np.asarray(self.M).tolist())
        a = tuple(int(v) & 1 for v in self.a)
        n = len(M)
        if any(len(row) != n for row in M) or len(a) != n:
            raise DimensionMismatch(f"M must be {n}x{n} and a of length {n}")
        order_exponent(self.q)
        gf2_inverse(M)
        object.__setattr__(self, "M", M)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", int(self.c) % self.q)

    @classmethod
    def identity(cls, n: int, q: int) -> "AffineTransform":
        return cls(np.eye(n, dtype=int), (0,) * n, 0, q)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.M, dtype=np.int64).reshape(self.n, self.n)

    def point_map(self) -> np.ndarray:
        """``perm[j]`` is the index of ``x_j M + a``."""
        return point_index((points(self.n) @ self.matrix + np.array(self.a)) % 2)

    def inverse(self) -> "AffineTransform":
        minv = gf2_inverse(self.M).astype(np.int64)
        return AffineTransform(minv, (np.array(self.a) @ minv) % 2, -self.c, self.q)

    def then(self, other: "AffineTransform") -> "AffineTransform":
        """Transform equal to applying ``self`` first and ``other`` second."""
        # other(self(f))(x) = f((xM' + a')M + a) + c + c'
        m1, m2 = self.matrix, other.matrix
        return AffineTransform(
            (m2 @ m1) % 2, (np.array(other.a) @ m1 + np.array(self.a)) % 2, self.c + other.c, self.q
        )


def _check_compatible(f: GeneralizedBooleanFunction, T: AffineTransform) -> None:
    if T.n != f.n:
        raise DimensionMismatch(f"transform acts on n={T.n}, function has n={f.n}")
    if T.q != f.q:
        raise DimensionMismatch(f"transform modulus {T.q} differs from function modulus {f.q}")


def apply_affine(f: GeneralizedBooleanFunction, T: AffineTransform) -> GeneralizedBooleanFunction:
    _check_compatible(f, T)
    return GeneralizedBooleanFunction(f.n, f.m, (f.array[T.point_map()] + T.c) % f.q)


def predicted_dual_after_affine(
    f_hat: GeneralizedBooleanFunction, T: AffineTransform
) -> GeneralizedBooleanFunction:
    """Dual of ``apply_affine(f, T)`` computed from the dual of f alone.

    With ``v = u (M^-1)^T``: ``g^(u) = f^(v) + c + (q/2) * (a . v)``.
    """
    _check_compatible(f_hat, T)
    minv = gf2_inverse(T.M).astype(np.int64)
    v = points(f_hat.n) @ minv.T % 2
    av = v @ np.array(T.a) % 2
    values = f_hat.array[point_index(v)] + T.c + (f_hat.q // 2) * av
    return GeneralizedBooleanFunction(f_hat.n, f_hat.m, values % f_hat.q)
