import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gbent.cli import main
from gbent.errors import InvalidInputError
from gbent.gbf import GBF
from gbent.records import (
    ClassificationReport,
    format_record,
    parse_record,
    record_from_json,
    record_to_json,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


records = st.tuples(st.integers(0, 4), st.sampled_from([2, 4, 8, 16, 32])).flatmap(
    lambda nq: st.lists(st.integers(0, nq[1] - 1), min_size=1 << nq[0], max_size=1 << nq[0]).map(
        lambda v: GBF.from_values(v, nq[1])
    )
)


@given(records, st.sampled_from(["lsb", "msb"]))
def test_text_round_trip(f, convention):
    assert parse_record(format_record(f, convention), f.q, f.n, convention) == f


@given(records)
def test_json_round_trip(f):
    assert record_from_json(record_to_json(f)) == f


def test_json_field_order():
    assert record_to_json(GBF.from_string("2101", 4)) == '{"q":4,"n":2,"values":[2,1,0,1]}'


def test_compact_forms():
    assert format_record(GBF.from_values([2, 1, 0, 1], 4)) == "2101"
    assert format_record(GBF.from_values([15, 1, 0, 9], 16)) == "15,1,0,9"
    assert parse_record("15,1,0,9", 16).values == (15, 1, 0, 9)
    # msb-first: digit j is the point whose x_1 is the top bit of j
    assert format_record(GBF.from_values([0, 1, 2, 3], 4), "msb") == "0213"


def test_parse_errors():
    with pytest.raises(InvalidInputError):
        parse_record("2101", 4, n=3)
    with pytest.raises(InvalidInputError):
        parse_record('{"q":4,"n":3,"values":[2,1,0,1]}', 4)
    with pytest.raises(InvalidInputError):
        parse_record('{"q":4}', 4)


def test_report_total_and_text():
    report = ClassificationReport(4, 2, [{"representative": "0002", "size": 16}, {"representative": "0013", "size": 48}], 96)
    assert report.total == 64
    assert report.to_dict()["total"] == 64
    assert report.to_text().splitlines()[-1].split() == ["Total", "64"]


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "-q", "4", "2101")
    assert code == 0
    assert "regular: true" in out and "dual: 1322" in out

    code, out, _ = run(capsys, "analyze", "0000", "--json")
    data = json.loads(out)
    assert data["gbent"] is False and data["regular"] is False and data["dual"] is None

    code, out, _ = run(capsys, "analyze", "0002", "--json")
    data = json.loads(out)
    assert data["self_dual"] is True
    assert data["dual"] == {"q": 4, "n": 2, "values": [0, 0, 0, 2]}


def test_analyze_json_record_input(capsys):
    code, out, _ = run(capsys, "analyze", '{"q":8,"n":2,"values":[4,0,0,0]}', "--json")
    assert code == 0
    assert json.loads(out)["record"]["q"] == 8


def test_analyze_malformed(capsys):
    for bad in ("21x1", "210", "2104"):
        code, _, err = run(capsys, "analyze", "-q", "4", bad)
        assert code == 2 and err


def test_decompose_compose(capsys):
    code, out, _ = run(capsys, "decompose", "2101")
    assert code == 0 and out.split() == ["1000", "1101"]
    code, out, _ = run(capsys, "compose", "-q", "4", "1000", "1101")
    assert code == 0 and out.strip() == "2101"
    code, out, _ = run(capsys, "compose", "-q", "4", "1000", "1101", "--json")
    assert json.loads(out) == {"q": 4, "n": 2, "values": [2, 1, 0, 1]}


def test_decompose_compose_msb_round_trip(capsys):
    _, out, _ = run(capsys, "decompose", "--convention", "msb", "2101")
    code, back, _ = run(capsys, "compose", "--convention", "msb", *out.split())
    assert code == 0 and back.strip() == "2101"


def test_compose_violations(capsys):
    code, _, err = run(capsys, "compose", "-q", "4", "0000", "0001")
    assert code == 3 and "NonBentComponent(0)" in err
    code, _, err = run(capsys, "compose", "-q", "8", "1000", "0100", "0010", "1110")
    assert code == 3 and "DualHadamardViolation(0)" in err
    code, _, err = run(capsys, "compose", "-q", "8", "1000", "1101")
    assert code == 2


def test_decompose_non_regular(capsys):
    code, _, err = run(capsys, "decompose", "0000")
    assert code == 3


def test_enumerate_bent(capsys):
    code, out, _ = run(capsys, "enumerate-bent", "-n", "2")
    lines = out.split()
    assert code == 0 and len(lines) == 8 and "0001" in lines
    code, out, _ = run(capsys, "enumerate-bent", "-n", "4", "--threads", "2")
    assert len(out.split()) == 896


def test_enumerate_regular(capsys):
    code, out, _ = run(capsys, "enumerate-regular", "-n", "2", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 64
    assert all(list(r) == ["q", "n", "values"] for r in rows)


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "-n", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["total"] == 64 and [c["size"] for c in data["classes"]] == [16, 48]
    assert data["group_order"] == 96 and data["convention"] == "lsb"
    _, again, _ = run(capsys, "classify", "-n", "2", "--json")
    assert again == out


def test_classify_errors(capsys):
    code, _, _ = run(capsys, "classify", "-n", "6")
    assert code == 4
    code, _, _ = run(capsys, "classify", "-n", "2", "-q", "8")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify"])
    assert exc.value.code == 2


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--only", "1", "3")
    assert code == 0
    assert out.count("[PASS]") == 2
