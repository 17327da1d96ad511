import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbent.boolean import BooleanFunction, bent_tables, dual, fwht, is_anti_self_dual, is_bent, is_self_dual
from gbent.classify import regular_quaternary_values
from gbent.decomposition import (
    DecompositionSystem,
    check_self_dual_decomposition,
    compose,
    compose_signs,
    decompose,
    dual_system,
    extract_coefficients,
    has_hadamard_property,
    hadamard_violations,
    sylvester,
    valid_systems,
)
from gbent.errors import DimensionMismatch, DomainError, DualHadamardViolation, HadamardViolation, NonBentComponent
from gbent.gbf import GBF, is_anti_self_dual_gbf, is_self_dual_gbf, regular_dual

BENT2 = np.stack([BooleanFunction(2, int(t)).signs for t in bent_tables(2)])


def g(text, q=4):
    return GBF.from_string(text, q)


def system(*tables):
    return DecompositionSystem.from_strings(tables)


def all_gbfs(n, q):
    return [GBF.from_values(v, q) for v in itertools.product(range(q), repeat=1 << n)]


def test_sylvester_matches_tensor_powers():
    H = np.array([[1, 1], [1, -1]])
    assert np.array_equal(sylvester(2), H)
    assert np.array_equal(sylvester(4), np.kron(H, H))
    assert np.array_equal(sylvester(1), [[1]])


def test_hadamard_property_examples():
    for pair in itertools.product(range(16), repeat=2):
        sys = DecompositionSystem(2, 2, [BooleanFunction(2, t) for t in pair])
        assert has_hadamard_property(sys)
    assert has_hadamard_property(system("0110", "0110", "0110", "0110"))
    # column (1, 1, 1, -1) at point 0: H_2 maps it to (2, 2, 2, -2)
    assert np.abs(sylvester(4) @ [1, 1, 1, -1]).tolist() == [2, 2, 2, 2]
    assert not has_hadamard_property(system("0000", "0000", "0000", "1000"))


def test_hadamard_violation_mask_reports_points():
    signs = system("0000", "0000", "0000", "1010").signs
    assert np.flatnonzero(hadamard_violations(signs)).tolist() == [0, 2]


def test_extract_coefficients_examples():
    a = extract_coefficients(g("2101")).a
    assert a.tolist() == [[-1, 0, 1, 0], [0, 1, 0, 1]]
    a = extract_coefficients(g("0000", 8)).a
    assert a.tolist() == [[1] * 4, [0] * 4, [0] * 4, [0] * 4]
    a = extract_coefficients(g("4444", 8)).a
    assert a.tolist() == [[-1] * 4, [0] * 4, [0] * 4, [0] * 4]


def test_coefficient_supports_partition():
    for f in all_gbfs(2, 8)[::37]:
        a = extract_coefficients(f).a
        assert np.all(np.abs(a).sum(axis=0) == 1)


def test_decompose_examples():
    sys = decompose(g("2101"))
    assert sys.signs.tolist() == [[-1, 1, 1, 1], [-1, -1, 1, -1]]
    assert [str(c) for c in sys.components] == ["1000", "1101"]
    assert all(is_bent(c) for c in sys.components)

    sys = decompose(g("0002"))
    assert sys.signs.tolist() == [[1, 1, 1, -1], [1, 1, 1, -1]]
    assert all(is_self_dual(c) for c in sys.components)

    for t in bent_tables(2):
        b = BooleanFunction(2, int(t))
        sys = decompose(GBF(2, 3, (4 * b.bits).tolist()))
        assert all(c == b for c in sys.components)


def test_decompose_rejects_non_regular():
    with pytest.raises(DomainError):
        decompose(g("0000"))
    with pytest.raises(DomainError):
        decompose(g("01"))


def test_compose_examples():
    assert compose(system("1000", "1101")) == g("2101")
    for t in bent_tables(2):
        b = BooleanFunction(2, int(t))
        assert compose(DecompositionSystem(2, 3, [b] * 4)) == GBF(2, 3, (4 * b.bits).tolist())


def test_compose_errors():
    with pytest.raises(NonBentComponent) as exc:
        compose(system("0001", "0000"))
    assert exc.value.index == 1
    with pytest.raises(NonBentComponent) as exc:
        compose(system("0000", "0001"))
    assert exc.value.index == 0
    with pytest.raises(HadamardViolation) as exc:
        compose(system("0001", "0001", "0001", "1110"))
    assert exc.value.point == 0 and not isinstance(exc.value, DualHadamardViolation)
    with pytest.raises(DualHadamardViolation) as exc:
        compose(system("1000", "0100", "0010", "1110"))
    assert exc.value.point == 0
    with pytest.raises(DimensionMismatch):
        system("0001", "00010001")
    with pytest.raises(DimensionMismatch):
        system("0001", "0001", "0001")


def test_dual_hadamard_condition_is_needed():
    sys = system("1000", "0100", "0010", "1110")
    assert has_hadamard_property(sys)
    assert not has_hadamard_property(dual_system(sys))
    f = GBF(2, 3, compose_signs(sys.signs, 3).tolist())
    assert regular_dual(f) is None


def test_round_trip_all_q4_n2():
    regular = [f for f in all_gbfs(2, 4) if regular_dual(f) is not None]
    assert len(regular) == 64 == len(BENT2) ** 2
    for f in regular:
        assert compose(decompose(f)) == f


def test_round_trip_all_q8_n2_and_forward_properties():
    regular = [f for f in all_gbfs(2, 8) if regular_dual(f) is not None]
    for f in regular:
        sys = decompose(f)
        assert all(is_bent(c) for c in sys.components)
        assert has_hadamard_property(sys)
        assert has_hadamard_property(dual_system(sys))
        assert compose(sys) == f


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 802816 - 1))
def test_round_trip_sampled_q4_n4(i):
    values = _q4n4()[i]
    f = GBF(4, 2, values.tolist())
    assert regular_dual(f) is not None
    sys = decompose(f)
    assert has_hadamard_property(dual_system(sys))
    assert compose(sys) == f


_cache = {}


def _q4n4():
    if "v" not in _cache:
        _cache["v"] = regular_quaternary_values(4)
    return _cache["v"]


@pytest.mark.parametrize("m, expected", [(2, 64), (3, 320)])
def test_decompose_compose_all_valid_systems(m, expected):
    combos = valid_systems(2, m, BENT2)
    assert len(combos) == expected
    for combo in combos:
        sys = DecompositionSystem.from_signs(BENT2[combo], m)
        assert decompose(compose(sys)) == sys


def test_valid_systems_matches_brute_force():
    brute = []
    for combo in itertools.product(range(len(BENT2)), repeat=4):
        sys = DecompositionSystem.from_signs(BENT2[list(combo)], 3)
        if has_hadamard_property(sys) and has_hadamard_property(dual_system(sys)):
            brute.append(list(combo))
    assert valid_systems(2, 3, BENT2).tolist() == brute


def test_quaternary_count_is_square_of_bent_count_n2():
    scanned = sum(regular_dual(f) is not None for f in all_gbfs(2, 4))
    assert scanned == len(bent_tables(2)) ** 2


def test_self_dual_decomposition_q4():
    self_dual = [f for f in all_gbfs(2, 4) if is_self_dual_gbf(f)]
    assert self_dual
    for f in self_dual:
        assert check_self_dual_decomposition(f)
        assert all(is_self_dual(c) for c in decompose(f).components)
    sd = [BooleanFunction(2, int(t)) for t in bent_tables(2) if is_self_dual(BooleanFunction(2, int(t)))]
    for pair in itertools.product(sd, repeat=2):
        sys = DecompositionSystem(2, 2, pair)
        assert dual_system(sys) == sys
        assert is_self_dual_gbf(compose(sys))


def test_self_dual_decomposition_q8():
    self_dual = [f for f in all_gbfs(2, 8) if is_self_dual_gbf(f)]
    assert self_dual
    assert all(check_self_dual_decomposition(f) for f in self_dual)


def test_check_self_dual_decomposition_rejects():
    with pytest.raises(DomainError):
        check_self_dual_decomposition(g("2101"))


def test_anti_self_dual_analogue_q4_n2():
    anti = [f for f in all_gbfs(2, 4) if is_anti_self_dual_gbf(f)]
    assert anti
    for f in anti:
        assert all(is_anti_self_dual(c) for c in decompose(f).components)
    asd = [BooleanFunction(2, int(t)) for t in bent_tables(2) if is_anti_self_dual(BooleanFunction(2, int(t)))]
    for pair in itertools.product(asd, repeat=2):
        assert is_anti_self_dual_gbf(compose(DecompositionSystem(2, 2, pair)))


def test_m1_decomposition_is_the_function_itself():
    for t in bent_tables(2):
        b = BooleanFunction(2, int(t))
        f = GBF.from_boolean(b, 1)
        assert decompose(f).components == (b,)
        assert compose(DecompositionSystem(2, 1, (b,))) == f


def test_duals_of_components_decompose_the_dual():
    # the dual system corresponds to the dual function
    for f in all_gbfs(2, 8):
        d = regular_dual(f)
        if d is None:
            continue
        assert decompose(d).components == tuple(dual(c) for c in decompose(f).components)


def test_compose_signs_batch_matches_scalar():
    pairs = BENT2[np.array(list(itertools.product(range(8), repeat=2)))]
    batch = compose_signs(pairs, 2)
    for row, pair in zip(batch, pairs):
        assert compose(DecompositionSystem.from_signs(pair, 2)).values == tuple(row.tolist())
    assert fwht(pairs).shape == pairs.shape
