"""Boolean functions on F_2^n: truth tables, Walsh-Hadamard spectra, bentness.

Point convention: index ``j`` of a truth table is the point ``x`` with
``x_{i+1}`` equal to bit ``i`` of ``j`` (least significant bit first).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

import numpy as np

from .errors import DomainError, InvalidInputError, UnsupportedError

MAX_VARS = 20
ENUMERABLE = (2, 4)


def _log2_exact(size: int) -> int:
    if size < 1 or size & (size - 1):
        raise InvalidInputError(f"length {size} is not a power of two")
    return size.bit_length() - 1


def fwht(values) -> np.ndarray:
    """Integer fast Walsh-Hadamard transform along the last axis.

    Accepts any integer array whose last axis has length ``2^n``; leading
    axes are treated as a batch. Returns a new ``int64`` array.
    """
    a = np.array(values, dtype=np.int64)
    size = a.shape[-1] if a.ndim else 0
    n = _log2_exact(size)
    if n > MAX_VARS:
        raise UnsupportedError(f"n={n} exceeds the transform limit {MAX_VARS}")
    lead = a.shape[:-1]
    h = 1
    while h < size:
        a = a.reshape(*lead, size // (2 * h), 2, h)
        lo, hi = a[..., 0, :], a[..., 1, :]
        a = np.stack((lo + hi, lo - hi), axis=-2)
        h *= 2
    return a.reshape(*lead, size)


@dataclass(frozen=True)
class BooleanFunction:
    """Truth table of ``f: F_2^n -> F_2`` packed into an int (bit j = f(j))."""

    n: int
    table: int

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VARS:
            raise InvalidInputError(f"n={self.n} outside [0, {MAX_VARS}]")
        if not 0 <= self.table < 1 << (1 << self.n):
            raise InvalidInputError("table has bits beyond 2^n points")

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BooleanFunction":
        bits = [int(b) for b in bits]
        n = _log2_exact(len(bits))
        if any(b not in (0, 1) for b in bits):
            raise InvalidInputError("truth table entries must be 0 or 1")
        packed = np.packbits(np.array(bits, dtype=np.uint8), bitorder="little")
        return cls(n, int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def from_signs(cls, signs) -> "BooleanFunction":
        signs = np.asarray(signs)
        if not np.all(np.abs(signs) == 1):
            raise InvalidInputError("sign vector entries must be +1 or -1")
        return cls.from_bits((signs < 0).astype(int))

    @classmethod
    def from_string(cls, text: str) -> "BooleanFunction":
        """Parse a digit string such as ``"0001"`` (digit j is f(j))."""
        text = "".join(text.split())
        if not text or set(text) - {"0", "1"}:
            raise InvalidInputError(f"not a binary truth table: {text!r}")
        return cls.from_bits([int(ch) for ch in text])

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def bits(self) -> np.ndarray:
        raw = self.table.to_bytes((self.size + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return bits[: self.size].astype(np.int64)

    @property
    def signs(self) -> np.ndarray:
        return 1 - 2 * self.bits

    def __str__(self) -> str:
        return "".join(str(int(b)) for b in self.bits)


SignInput = Union[BooleanFunction, Sequence[int], np.ndarray]


def wht(f: SignInput) -> np.ndarray:
    """Walsh-Hadamard spectrum ``W_f(u) = sum_x (-1)^{x.u} (-1)^{f(x)}``.

    ``f`` may be a :class:`BooleanFunction` or a raw integer vector (usually
    a sign vector). The result is an exact ``int64`` array of length 2^n.
    """
    if isinstance(f, BooleanFunction):
        f = f.signs
    return fwht(f)


def _bent_mask(spectra: np.ndarray, n: int) -> np.ndarray:
    return np.all(np.abs(spectra) == 1 << (n // 2), axis=-1)


def is_bent(f: BooleanFunction) -> bool:
    if f.n % 2:
        return False
    return bool(_bent_mask(wht(f), f.n))


def dual(f: BooleanFunction) -> BooleanFunction:
    """Dual bent function, whose sign vector is ``W_f / 2^{n/2}``."""
    if not is_bent(f):
        raise DomainError(f"{f} is not bent")
    return BooleanFunction.from_signs(wht(f) >> (f.n // 2))


def _eigen_check(f: BooleanFunction, sign: int) -> bool:
    if f.n % 2:
        return False
    signs = f.signs
    return bool(np.array_equal(wht(signs), sign * (1 << (f.n // 2)) * signs))


def is_self_dual(f: BooleanFunction) -> bool:
    return _eigen_check(f, 1)


def is_anti_self_dual(f: BooleanFunction) -> bool:
    return _eigen_check(f, -1)


def all_sign_tables(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Sign vectors of the truth tables ``start .. stop-1`` in ascending order."""
    size = 1 << n
    stop = (1 << size) if stop is None else stop
    tables = np.arange(start, stop, dtype=np.int64)
    bits = (tables[:, None] >> np.arange(size, dtype=np.int64)) & 1
    return 1 - 2 * bits


def bent_tables(n: int, threads: int = 1) -> np.ndarray:
    """Packed truth tables of every bent function in ``n`` variables, ascending.

    Scans all ``2^(2^n)`` tables with the batched transform. With
    ``threads > 1`` the scan is split by table prefix; order is unaffected.
    """
    if n not in ENUMERABLE:
        raise UnsupportedError(f"bent enumeration supports n in {ENUMERABLE}, got {n}")
    total = 1 << (1 << n)
    chunk = max(total // max(threads, 1), 1 << 12)
    bounds = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]

    def scan(bound):
        lo, hi = bound
        mask = _bent_mask(fwht(all_sign_tables(n, lo, hi)), n)
        return lo + np.flatnonzero(mask)

    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(scan, bounds))
    else:
        parts = [scan(b) for b in bounds]
    return np.concatenate(parts).astype(np.int64)


def enumerate_bent(n: int, threads: int = 1) -> Iterator[BooleanFunction]:
    for table in bent_tables(n, threads):
        yield BooleanFunction(n, int(table))
