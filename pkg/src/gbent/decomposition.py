"""Splitting a regular bent gBF into k = 2^(m-1) Boolean bent functions and back.

The sign function of f is written on the integral basis as
``w^f = sum_i a_i w^i`` with each ``a_i(x)`` in {-1, 0, 1}; the components
are the Boolean functions whose sign vectors are ``G = H_{m-1} a``, H the
Sylvester matrix of size k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .boolean import BooleanFunction, dual, fwht, is_self_dual
from .errors import (
    DimensionMismatch,
    DomainError,
    DualHadamardViolation,
    HadamardViolation,
    NonBentComponent,
)
from .gbf import GeneralizedBooleanFunction, is_self_dual_gbf, regular_dual


def sylvester(k: int) -> np.ndarray:
    """Sylvester Hadamard matrix of size k (a power of two): entry (-1)^popcount(i & j)."""
    idx = np.arange(k)
    parity = np.vectorize(lambda v: bin(v).count("1") & 1)(idx[:, None] & idx[None, :])
    return 1 - 2 * parity


@dataclass(frozen=True)
class CoefficientVectors:
    n: int
    m: int
    a: np.ndarray  # shape (k, 2^n), entries in {-1, 0, 1}

    def __eq__(self, other):
        if not isinstance(other, CoefficientVectors):
            return NotImplemented
        return (self.n, self.m) == (other.n, other.m) and np.array_equal(self.a, other.a)

    def __hash__(self):
        return hash((self.n, self.m, self.a.tobytes()))


@dataclass(frozen=True)
class DecompositionSystem:
    n: int
    m: int
    components: tuple

    def __post_init__(self):
        components = tuple(self.components)
        k = 1 << (self.m - 1)
        if len(components) != k:
            raise DimensionMismatch(f"m={self.m} needs {k} components, got {len(components)}")
        if any(g.n != self.n for g in components):
            raise DimensionMismatch("all components must have the same number of variables")
        object.__setattr__(self, "components", components)

    @classmethod
    def from_signs(cls, signs, m: int | None = None) -> "DecompositionSystem":
        signs = np.asarray(signs)
        k = signs.shape[0]
        m = k.bit_length() if m is None else m
        comps = [BooleanFunction.from_signs(row) for row in signs]
        return cls(comps[0].n, m, comps)

    @classmethod
    def from_strings(cls, tables: Sequence[str]) -> "DecompositionSystem":
        comps = [BooleanFunction.from_string(t) for t in tables]
        if len({g.n for g in comps}) != 1:
            raise DimensionMismatch("component tables differ in length")
        k = len(comps)
        if k & (k - 1):
            raise DimensionMismatch(f"number of components {k} is not a power of two")
        return cls(comps[0].n, k.bit_length(), comps)

    @property
    def k(self) -> int:
        return len(self.components)

    @property
    def signs(self) -> np.ndarray:
        """Shape ``(k, 2^n)``."""
        return np.stack([g.signs for g in self.components])


def hadamard_violations(signs: np.ndarray) -> np.ndarray:
    """Points whose component column is not +/- a column of the Sylvester matrix.

    ``signs`` has shape ``(..., k, 2^n)``; returns a boolean mask ``(..., 2^n)``.
    Column g equals +/- column j exactly when ``H g`` is +/- k e_j.
    """
    signs = np.asarray(signs, dtype=np.int64)
    k = signs.shape[-2]
    proj = np.abs(fwht(np.swapaxes(signs, -1, -2)))
    ok = (np.count_nonzero(proj, axis=-1) == 1) & (proj.max(axis=-1) == k)
    return ~ok


def has_hadamard_property(sys: DecompositionSystem) -> bool:
    return not hadamard_violations(sys.signs).any()


def extract_coefficients(f: GeneralizedBooleanFunction) -> CoefficientVectors:
    return CoefficientVectors(f.n, f.m, f.sign_coeffs().T.copy())


def decompose(f: GeneralizedBooleanFunction) -> DecompositionSystem:
    if regular_dual(f) is None:
        raise DomainError(f"{f} (q={f.q}) is not regular bent")
    a = extract_coefficients(f).a
    return DecompositionSystem.from_signs(sylvester(f.k) @ a, f.m)


def compose_signs(signs, m: int) -> np.ndarray:
    """Values of the gBF built from component sign vectors, batched.

    ``signs`` has shape ``(..., k, 2^n)`` and must satisfy the Hadamard
    property; returns residues of shape ``(..., 2^n)``. No bentness checks.
    """
    signs = np.asarray(signs, dtype=np.int64)
    k = signs.shape[-2]
    # H^-1 = H / k; exact division once each column is +/- a Sylvester column
    a = np.swapaxes(fwht(np.swapaxes(signs, -1, -2)), -1, -2)
    assert np.all(a % k == 0)
    a //= k
    pos = np.argmax(a != 0, axis=-2)
    val = np.take_along_axis(a, pos[..., None, :], axis=-2)[..., 0, :]
    return pos + np.where(val < 0, k, 0)


def _first(mask: np.ndarray) -> int:
    return int(np.flatnonzero(mask)[0])


def compose(sys: DecompositionSystem) -> GeneralizedBooleanFunction:
    """Inverse of :func:`decompose`; validates every precondition first.

    Raises NonBentComponent, HadamardViolation or DualHadamardViolation,
    reporting the lowest offending component or point index.
    """
    n = sys.n
    if n % 2:
        raise NonBentComponent(0)
    signs = sys.signs
    spectra = fwht(signs)
    scale = 1 << (n // 2)
    bent = np.all(np.abs(spectra) == scale, axis=-1)
    if not bent.all():
        raise NonBentComponent(_first(~bent))
    bad = hadamard_violations(signs)
    if bad.any():
        raise HadamardViolation(_first(bad))
    bad = hadamard_violations(spectra // scale)
    if bad.any():
        raise DualHadamardViolation(_first(bad))
    return GeneralizedBooleanFunction(n, sys.m, compose_signs(signs, sys.m).tolist())


def dual_system(sys: DecompositionSystem) -> DecompositionSystem:
    return DecompositionSystem(sys.n, sys.m, [dual(g) for g in sys.components])


def check_self_dual_decomposition(f: GeneralizedBooleanFunction) -> bool:
    if not is_self_dual_gbf(f):
        raise DomainError(f"{f} (q={f.q}) is not self-dual bent")
    return all(is_self_dual(g) for g in decompose(f).components)


def valid_systems(n: int, m: int, bent: np.ndarray) -> np.ndarray:
    """All k-tuples of the given bent sign vectors passing both Hadamard checks.

    ``bent`` has shape ``(B, 2^n)``; returns index tuples of shape ``(S, k)``
    in lexicographic order. Intended for small B and k only.
    """
    k = 1 << (m - 1)
    bent = np.asarray(bent, dtype=np.int64)
    duals = fwht(bent) >> (n // 2)
    grids = np.stack(np.meshgrid(*[np.arange(len(bent))] * k, indexing="ij"), axis=-1).reshape(-1, k)
    ok = ~hadamard_violations(bent[grids]).any(axis=-1)
    ok &= ~hadamard_violations(duals[grids]).any(axis=-1)
    return grids[ok]
