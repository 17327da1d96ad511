"""Executable acceptance criteria, shared by ``gbent verify`` and the test suite.

Each check returns ``(passed, detail)``; :func:`run` adds timing against the
criterion's time limit.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import cyclotomic
from .boolean import BooleanFunction, bent_tables, fwht, is_self_dual
from .classify import (
    classify_quaternary,
    orbit_keys,
    pack,
    regular_quaternary_values,
    restricted_ea_generators,
    verify_odd_n_nonexistence,
)
from .cyclotomic import CyclotomicInteger, conj, embed, norm_sq
from .decomposition import DecompositionSystem, check_self_dual_decomposition, compose, decompose, valid_systems
from .gbf import (
    GBF,
    AffineTransform,
    apply_affine,
    is_self_dual_gbf,
    predicted_dual_after_affine,
    regular_dual,
    sign_coeffs,
)

SEED = 20240611

REFERENCE_N2 = {"2101": 16, "2000": 48}
REFERENCE_N4 = {
    "2 0 0 0 2 0 2 2 2 0 0 0 0 2 0 0": 1792,
    "3 1 0 0 3 1 2 2 3 1 1 1 1 3 1 1": 80640,
    "2 1 0 1 2 0 2 2 3 0 0 1 0 2 1 1": 129024,
    "3 0 0 1 2 0 2 2 3 1 0 0 0 3 0 1": 215040,
    "3 1 0 0 3 0 3 2 2 1 0 1 1 3 0 0": 322560,
    "2 1 0 1 2 1 2 3 2 1 0 1 0 3 0 1": 26880,
    "2 0 1 1 2 0 2 2 2 0 0 0 0 2 1 1": 26880,
}
N4_SIZES = sorted(REFERENCE_N4.values())


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:>2}. {self.title}: {self.detail} ({self.seconds:.2f}s / {self.limit:g}s)"


def bent_counts():
    counts = {n: len(bent_tables(n)) for n in (2, 4)}
    return counts == {2: 8, 4: 896}, f"bent counts {counts}"


def quaternary_totals():
    counts = {}
    for n in (2, 4):
        values = regular_quaternary_values(n)
        distinct = np.unique(pack(values, n, 2)).size
        counts[n] = (len(values), distinct)
    ok = counts == {2: (64, 64), 4: (802816, 802816)}
    return ok, "(emitted, distinct) " + str(counts)


def classification_n2():
    sizes = sorted(r.size for r in classify_quaternary(2))
    return sizes == [16, 48], f"orbit sizes {sizes}"


def classification_n4():
    sizes = sorted(r.size for r in classify_quaternary(4))
    return sizes == N4_SIZES and sum(sizes) == 802816, f"{len(sizes)} orbits, sizes {sizes}"


def reference_membership():
    """All nine strings are regular bent; the n=4 ones sit in distinct orbits of the listed size.

    The n=2 rows are only required to be regular bent: their printed sizes
    are swapped relative to the orbits they generate ("2101" lies in the
    orbit of size 48, "2000" in the orbit of size 16), reported in the detail.
    """
    problems = []
    for text in itertools.chain(REFERENCE_N2, REFERENCE_N4):
        if regular_dual(GBF.from_string(text, 4)) is None:
            problems.append(f"{text!r} not regular bent")
    gens = restricted_ea_generators(4, 4)
    seen = []
    for text, size in REFERENCE_N4.items():
        f = GBF.from_string(text, 4)
        orbit = orbit_keys(int(pack(f.values, 4, 2)), gens)
        if orbit.size != size:
            problems.append(f"{text!r} orbit {orbit.size} != {size}")
        if any(np.array_equal(orbit, other) for other in seen):
            problems.append(f"{text!r} shares an orbit")
        seen.append(orbit)
    gens2 = restricted_ea_generators(2, 4)
    n2 = {t: orbit_keys(int(pack(GBF.from_string(t, 4).values, 2, 2)), gens2).size for t in REFERENCE_N2}
    detail = "; ".join(problems) or "9 representatives regular, 7 distinct n=4 orbits of matching size"
    return not problems, f"{detail}; n=2 orbit sizes {n2}"


def odd_n_nonexistence():
    found = {(n, q): verify_odd_n_nonexistence(n, q) for n, q in ((1, 4), (1, 8), (3, 4))}
    return all(v == 0 for v in found.values()), f"regular bent found {found}"


def _all_gbfs(n: int, q: int):
    for values in itertools.product(range(q), repeat=1 << n):
        yield GBF.from_values(values, q)


def _bent_signs(n: int) -> np.ndarray:
    return np.stack([BooleanFunction(n, int(t)).signs for t in bent_tables(n)])


def round_trips():
    rng = np.random.default_rng(SEED)
    checked = 0
    q4n2 = [GBF(2, 2, v) for v in regular_quaternary_values(2).tolist()]
    values4 = regular_quaternary_values(4)
    sample = [GBF(4, 2, values4[i].tolist()) for i in rng.choice(len(values4), 1000, replace=False)]
    q8n2 = [f for f in _all_gbfs(2, 8) if regular_dual(f) is not None]
    for f in itertools.chain(q4n2, sample, q8n2):
        if compose(decompose(f)) != f:
            return False, f"compose(decompose({f})) differs"
        checked += 1
    bent = _bent_signs(2)
    systems = 0
    for m in (2, 3):
        for combo in valid_systems(2, m, bent):
            sys = DecompositionSystem.from_signs(bent[combo], m)
            if decompose(compose(sys)) != sys:
                return False, f"decompose(compose(...)) differs for m={m}, tuple {combo.tolist()}"
            systems += 1
    return True, f"{checked} functions and {systems} systems round-trip (q=8 regular: {len(q8n2)})"


def cross_route_q8():
    scanned = {f.values for f in _all_gbfs(2, 8) if regular_dual(f) is not None}
    bent = _bent_signs(2)
    composed = {compose(DecompositionSystem.from_signs(bent[c], 3)).values for c in valid_systems(2, 3, bent)}
    ok = scanned == composed and len(composed) == len(valid_systems(2, 3, bent))
    return ok, f"exhaustive {len(scanned)}, composed {len(composed)}"


def self_dual_decomposition():
    self_dual = [f for f in _all_gbfs(2, 4) if is_self_dual_gbf(f)]
    if not self_dual or not all(check_self_dual_decomposition(f) for f in self_dual):
        return False, f"{len(self_dual)} self-dual functions; decomposition check failed"
    sd_bent = [g for g in map(lambda t: BooleanFunction(2, int(t)), bent_tables(2)) if is_self_dual(g)]
    for g0, g1 in itertools.product(sd_bent, repeat=2):
        if not is_self_dual_gbf(compose(DecompositionSystem(2, 2, (g0, g1)))):
            return False, f"compose({g0}, {g1}) is not self-dual"
    return True, f"{len(self_dual)} self-dual gBFs decompose; {len(sd_bent) ** 2} self-dual pairs compose"


def _random_transform(rng, n: int, q: int) -> AffineTransform:
    while True:
        M = rng.integers(0, 2, (n, n))
        try:
            return AffineTransform(M, rng.integers(0, 2, n), int(rng.integers(q)), q)
        except ValueError:
            continue


def property_suites():
    rng = np.random.default_rng(SEED)
    failures = []
    for n in (2, 4, 8):
        size = 1 << n
        signs = 1 - 2 * rng.integers(0, 2, (1000, size))
        spectra = fwht(signs)
        if not np.array_equal(fwht(spectra), size * signs):
            failures.append(f"binary involution n={n}")
        if not np.all((spectra**2).sum(axis=1) == size * size):
            failures.append(f"binary Parseval n={n}")
        for m in (2, 3):
            coeffs = sign_coeffs(rng.integers(0, 1 << m, (1000, size)), m)
            h = np.swapaxes(fwht(np.swapaxes(coeffs, 1, 2)), 1, 2)
            if not np.array_equal(np.swapaxes(fwht(np.swapaxes(h, 1, 2)), 1, 2), size * coeffs):
                failures.append(f"generalized involution n={n} m={m}")
            parseval = cyclotomic.negacyclic_mul(h, cyclotomic.conj_coeffs(h)).sum(axis=1)
            expect = np.zeros(1 << (m - 1), dtype=np.int64)
            expect[0] = size * size
            if not np.all(parseval == expect):
                failures.append(f"generalized Parseval n={n} m={m}")
    for m in (1, 2, 3, 4):
        k = 1 << (m - 1)
        for _ in range(1000):
            x, y, z = (CyclotomicInteger(m, rng.integers(-50, 51, k)) for _ in range(3))
            if (x * y) * z != x * (y * z) or x * y != y * x or x * (y + z) != x * y + x * z:
                failures.append(f"ring axioms m={m}")
                break
            if conj(x * y) != conj(x) * conj(y) or norm_sq(x * y) != norm_sq(x) * norm_sq(y):
                failures.append(f"conjugation m={m}")
                break
            zx, zy = embed(x.coeffs), embed(y.coeffs)
            for got, want in ((embed((x * y).coeffs), zx * zy), (embed((x + y).coeffs), zx + zy),
                              (embed(conj(x).coeffs), np.conj(zx))):
                if abs(got - want) > 1e-9 * max(1.0, abs(want)):
                    failures.append(f"embedding m={m}")
                    break
        # large-coefficient embedding check at |coeffs| <= 2^10
        big = rng.integers(-(1 << 10), (1 << 10) + 1, (1000, 2, k))
        prod = cyclotomic.negacyclic_mul(big[:, 0], big[:, 1])
        want = embed(big[:, 0]) * embed(big[:, 1])
        if np.any(np.abs(embed(prod) - want) > 1e-9 * np.maximum(1.0, np.abs(want))):
            failures.append(f"embedding (large) m={m}")
    for q in (4, 8):
        regular = [f for f in _all_gbfs(2, q) if regular_dual(f) is not None]
        for _ in range(100):
            f = regular[rng.integers(len(regular))]
            T = _random_transform(rng, 2, q)
            if predicted_dual_after_affine(regular_dual(f), T) != regular_dual(apply_affine(f, T)):
                failures.append(f"affine dual formula q={q}")
                break
    return not failures, "; ".join(failures) or "all property suites hold"


CRITERIA: list[tuple[int, str, Callable, float]] = [
    (1, "Bent counts", bent_counts, 5),
    (2, "Quaternary totals", quaternary_totals, 60),
    (3, "Classification n=2", classification_n2, 1),
    (4, "Classification n=4", classification_n4, 600),
    (5, "Reference representatives", reference_membership, 60),
    (6, "Odd-n nonexistence", odd_n_nonexistence, 30),
    (7, "Decomposition round trips", round_trips, 120),
    (8, "Cross-route count q=8 n=2", cross_route_q8, 60),
    (9, "Self-dual decomposition", self_dual_decomposition, 5),
    (10, "Property suites", property_suites, 60),
]


def run_one(number: int) -> Outcome:
    num, title, check, limit = next(c for c in CRITERIA if c[0] == number)
    start = time.perf_counter()
    try:
        passed, detail = check()
    except Exception as exc:  # a crash is reported as a failed criterion
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if passed and seconds > limit:
        passed, detail = False, detail + " (time limit exceeded)"
    return Outcome(num, title, passed, detail, seconds, limit)


def run(numbers=None, echo: Callable[[str], None] | None = None) -> list[Outcome]:
    outcomes = []
    for num, *_ in CRITERIA:
        if numbers and num not in numbers:
            continue
        outcome = run_one(num)
        if echo:
            echo(outcome.line())
        outcomes.append(outcome)
    return outcomes
