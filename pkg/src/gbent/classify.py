"""Enumeration and orbit classification of quaternary regular bent functions.

The acting group is ``f -> f(xM + a) + c`` with M in GL(n,2), a in F_2^n and
c in Z_q (no linear term b.x). Functions are handled in bulk as packed
integer keys: value j occupies the bits at ``m * (2^n - 1 - j)``, so numeric
order of keys is lexicographic order of value tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .boolean import ENUMERABLE, BooleanFunction, bent_tables, fwht
from .cyclotomic import negacyclic_mul
from .decomposition import compose_signs
from .errors import DomainError, UnsupportedError
from .gbf import AffineTransform, GeneralizedBooleanFunction, order_exponent, sign_coeffs

SCAN_LIMIT = 10**7
CONVENTIONS = ("lsb", "msb")


def gl_order(n: int) -> int:
    order = 1
    for i in range(n):
        order *= (1 << n) - (1 << i)
    return order


def group_order(n: int, q: int) -> int:
    return gl_order(n) * (1 << n) * q


@dataclass(frozen=True)
class GroupGenerators:
    n: int
    q: int
    gens: tuple = field(default=())

    @property
    def linear_parts(self) -> list:
        return [T.matrix for T in self.gens if not any(T.a) and T.c == 0]


def transvection(n: int) -> np.ndarray:
    M = np.eye(n, dtype=np.int64)
    if n > 1:
        M[0, 1] = 1
    return M


def cycle_matrix(n: int) -> np.ndarray:
    """Permutation matrix sending coordinate i to i+1 (mod n)."""
    return np.roll(np.eye(n, dtype=np.int64), 1, axis=1)


def restricted_ea_generators(n: int, q: int) -> GroupGenerators:
    zero = (0,) * n
    eye = np.eye(n, dtype=np.int64)
    gens = [
        AffineTransform(transvection(n), zero, 0, q),
        AffineTransform(cycle_matrix(n), zero, 0, q),
    ]
    gens += [AffineTransform(eye, eye[i], 0, q) for i in range(n)]
    gens.append(AffineTransform(eye, zero, 1, q))
    return GroupGenerators(n, q, tuple(gens))


def matrix_closure(matrices) -> set:
    """Breadth-first closure of a set of F_2 matrices under multiplication."""
    gens = [np.asarray(M, dtype=np.int64) % 2 for M in matrices]
    n = gens[0].shape[0]
    seen = {np.eye(n, dtype=np.int64).tobytes()}
    frontier = [np.eye(n, dtype=np.int64)]
    while frontier:
        nxt = []
        for A in frontier:
            for G in gens:
                B = (A @ G) % 2
                key = B.tobytes()
                if key not in seen:
                    seen.add(key)
                    nxt.append(B)
        frontier = nxt
    return seen


# --- packed keys -------------------------------------------------------------


def _shifts(n: int, m: int) -> np.ndarray:
    size = 1 << n
    if size * m > 63:
        raise UnsupportedError(f"value table of {size} x {m} bits does not fit a 64-bit key")
    return m * np.arange(size - 1, -1, -1, dtype=np.int64)


def pack(values, n: int, m: int) -> np.ndarray:
    values = np.asarray(values, dtype=np.int64)
    return (values << _shifts(n, m)).sum(axis=-1)


def unpack(keys, n: int, m: int) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    return (keys[..., None] >> _shifts(n, m)) & ((1 << m) - 1)


def act_on_keys(keys: np.ndarray, T: AffineTransform, m: int) -> np.ndarray:
    values = unpack(keys, T.n, m)
    return pack((values[..., T.point_map()] + T.c) % (1 << m), T.n, m)


def orbit_keys(start: int, gens: GroupGenerators) -> np.ndarray:
    """Sorted keys of the orbit of ``start``, by frontier-at-a-time BFS."""
    m = order_exponent(gens.q)
    orbit = np.array([start], dtype=np.int64)
    frontier = orbit
    while frontier.size:
        images = np.unique(np.concatenate([act_on_keys(frontier, T, m) for T in gens.gens]))
        frontier = np.setdiff1d(images, orbit, assume_unique=True)
        orbit = np.union1d(orbit, frontier)
    return orbit


def orbit_of(f: GeneralizedBooleanFunction, gens: GroupGenerators) -> frozenset:
    if (f.n, f.q) != (gens.n, gens.q):
        raise DomainError("function and generators disagree on n or q")
    keys = orbit_keys(int(pack(f.values, f.n, f.m)), gens)
    return frozenset(GeneralizedBooleanFunction(f.n, f.m, v) for v in unpack(keys, f.n, f.m).tolist())


# --- enumeration ---------------------------------------------------------------


def _check_n(n: int) -> None:
    if n not in ENUMERABLE:
        raise UnsupportedError(f"quaternary enumeration supports n in {ENUMERABLE}, got {n}")


def bent_signs(n: int, threads: int = 1) -> np.ndarray:
    tables = bent_tables(n, threads)
    return np.stack([BooleanFunction(n, int(t)).signs for t in tables])


def regular_quaternary_values(n: int, threads: int = 1) -> np.ndarray:
    """Value tables (rows) of compose(b0, b1) over all ordered pairs of bent functions.

    For two components the Hadamard property holds at every point, so every
    pair of bent functions composes; row order follows the pair order.
    """
    _check_n(n)
    bent = bent_signs(n, threads)
    count = len(bent)
    i, j = np.divmod(np.arange(count * count), count)
    rows = []
    step = 1 << 16
    for lo in range(0, count * count, step):
        pair = np.stack((bent[i[lo : lo + step]], bent[j[lo : lo + step]]), axis=1)
        rows.append(compose_signs(pair, 2))
    return np.concatenate(rows)


def enumerate_regular_quaternary(n: int, threads: int = 1) -> Iterator[GeneralizedBooleanFunction]:
    for row in regular_quaternary_values(n, threads).tolist():
        yield GeneralizedBooleanFunction(n, 2, row)


def bit_reversal(n: int) -> np.ndarray:
    """Index permutation converting between the lsb-first and msb-first point orders."""
    idx = np.arange(1 << n)
    return sum((((idx >> i) & 1) << (n - 1 - i) for i in range(n)), np.zeros_like(idx))


@dataclass(frozen=True)
class OrbitReport:
    representative: GeneralizedBooleanFunction
    size: int

    def sort_key(self):
        return (self.size, self.representative.values)


def classify_quaternary(n: int, convention: str = "lsb", threads: int = 1) -> list:
    """Partition all regular bent Z_4-valued functions in n variables into orbits.

    Representatives are lexicographically least value tables in the chosen
    point order; reports are sorted by (size, representative).
    """
    _check_n(n)
    if convention not in CONVENTIONS:
        raise DomainError(f"unknown convention {convention!r}")
    values = regular_quaternary_values(n, threads)
    if convention == "msb":
        values = values[:, bit_reversal(n)]
    keys = np.unique(pack(values, n, 2))
    if keys.size != len(values):
        raise AssertionError("enumeration produced duplicate functions")
    gens = restricted_ea_generators(n, 4)
    visited = np.zeros(keys.size, dtype=bool)
    reports = []
    while not visited.all():
        start = int(np.flatnonzero(~visited)[0])
        orbit = orbit_keys(int(keys[start]), gens)
        idx = np.searchsorted(keys, orbit)
        if np.any(idx >= keys.size) or np.any(keys[np.minimum(idx, keys.size - 1)] != orbit):
            raise AssertionError("orbit left the set of regular bent functions")
        visited[idx] = True
        rep = GeneralizedBooleanFunction(n, 2, unpack(keys[start], n, 2).tolist())
        reports.append(OrbitReport(rep, int(orbit.size)))
    return sorted(reports, key=OrbitReport.sort_key)


# --- odd number of variables ------------------------------------------------------


def verify_odd_n_nonexistence(n: int, q: int) -> int:
    """Count gBFs in n variables whose every spectral value is 2^{n/2} times a root of unity.

    Exhaustive over all q^(2^n) functions, tested exactly through
    ``H_f(u)^2 == 2^n * w^{2t}`` so the irrational scale never appears.
    """
    m = order_exponent(q)
    size = 1 << n
    total = q**size
    if total > SCAN_LIMIT:
        raise UnsupportedError(f"{total} functions exceed the scan limit {SCAN_LIMIT}")
    found = 0
    step = 1 << 14
    for lo in range(0, total, step):
        codes = np.arange(lo, min(lo + step, total), dtype=np.int64)
        values = (codes[:, None] // q ** np.arange(size, dtype=np.int64)) % q
        spectra = np.swapaxes(fwht(np.swapaxes(sign_coeffs(values, m), -1, -2)), -1, -2)
        squares = negacyclic_mul(spectra, spectra).reshape(-1, spectra.shape[-1])
        nonzero = squares != 0
        k = squares.shape[-1]
        single = (nonzero.sum(axis=-1) == 1) & (np.abs(squares).max(axis=-1) == size)
        pos = np.argmax(nonzero, axis=-1)
        val = squares[np.arange(len(squares)), pos]
        even = (pos + np.where(val < 0, k, 0)) % 2 == 0
        found += int(np.all((single & even).reshape(len(codes), size), axis=-1).sum())
    return found
