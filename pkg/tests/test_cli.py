import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from truncated_tableaux.cli import Family, main, parse_shape
from truncated_tableaux.errors import ParseError

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_all_methods_agree(capsys):
    code, out, _ = run(capsys, "count", "--shape", "shifted:delta(4)\\delta(1)", "--method", "all", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["agreement"] is True
    assert {r["count"] for r in rec["results"]} == {"4"}
    assert all("elapsed_ms" in r for r in rec["results"])


def test_count_formula(capsys):
    code, out, _ = run(capsys, "count", "--shape", "rect(3,3)\\delta(1)", "--json")
    rec = json.loads(out)
    assert code == 0 and rec["count"] == "12" and rec["method"] == "formula"


def test_count_is_a_decimal_string(capsys):
    _, out, _ = run(capsys, "count", "--shape", "rect(6,6)\\delta(2)", "--json")
    assert isinstance(json.loads(out)["count"], str)


def test_unsupported_family(capsys):
    code, _, err = run(capsys, "count", "--shape", "straight:[3,2]\\[3]", "--method", "formula")
    assert code == 3 and "unsupported" in err


def test_budget_exceeded(capsys):
    code, _, _ = run(capsys, "count", "--shape", "rect(6,6)", "--method", "oracle", "--max-cells", "10")
    assert code == 4


def test_all_without_oracle_reports_no_agreement(capsys):
    code, out, _ = run(capsys, "count", "--shape", "rect(6,6)", "--method", "all", "--max-cells", "10", "--json")
    assert code == 4 and json.loads(out)["agreement"] is False


def test_bad_shape(capsys):
    code, _, err = run(capsys, "count", "--shape", "rect(3)")
    assert code == 1 and "cannot parse" in err


def test_gf_oracle_chain(capsys):
    code, out, _ = run(capsys, "gf", "--shape", "shifted:delta(3)\\delta(1)", "--order", "6", "--method", "oracle")
    # a five-element chain: partitions into at most five parts
    assert code == 0 and json.loads(out) == ["1", "1", "2", "3", "5", "7", "10"]


def test_gf_order_zero(capsys):
    _, out, _ = run(capsys, "gf", "--shape", "shifted:delta(3)\\delta(1)", "--order", "0", "--method", "oracle")
    assert json.loads(out) == ["1"]


def test_gf_closed_vs_oracle(capsys):
    code, out, _ = run(capsys, "gf", "--shape", "rect(3,3)\\almostsq(2)", "--order", "8", "--method", "all")
    rec = json.loads(out)
    assert code == 0 and rec["agreement"] and rec["closed"] == rec["oracle"]


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "staircase-box", "--max-n", "5")
    assert code == 0 and "PASS" in out and "FAIL" not in out
    code, out, _ = run(capsys, "verify", "--suite", "rsk")
    assert code == 0 and "worked example P" in out
    code, out, _ = run(capsys, "verify", "--suite", "boxed", "--json")
    rec = json.loads(out)
    assert code == 0 and any(c["informational"] for c in rec["cases"])


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 3 and "unknown suite" in err


def test_phi_files(tmp_path, capsys):
    src = FIXTURES / "phi_shifted_example.json"
    out_path = tmp_path / "p.json"
    assert main(["phi", "--input", str(src), "--output", str(out_path)]) == 0
    rec = json.loads(out_path.read_text())
    expected = json.loads(src.read_text())
    assert rec["roundtrip"] and rec["P"] == expected["P"]
    back = tmp_path / "t.json"
    assert main(["phi", "--inverse", "--input", str(src), "--output", str(back)]) == 0
    assert json.loads(back.read_text())["filling"] == expected["filling"]


def test_phi_straight_file(tmp_path):
    src = FIXTURES / "phi_straight_example.json"
    out_path = tmp_path / "pq.json"
    assert main(["phi", "--kind", "straight", "--input", str(src), "--output", str(out_path)]) == 0
    rec = json.loads(out_path.read_text())
    expected = json.loads(src.read_text())
    assert rec["P"] == expected["P"] and rec["Q"] == expected["Q"] and rec["roundtrip"]
    back = tmp_path / "t.json"
    assert main(["phi", "--kind", "straight", "--inverse", "--input", str(src), "--output", str(back)]) == 0
    assert json.loads(back.read_text())["filling"] == expected["filling"]


def test_phi_zero_filling(tmp_path, capsys):
    src = tmp_path / "zero.json"
    src.write_text(json.dumps([[0, 0, 0], [0, 0], [0]]))
    assert main(["phi", "--input", str(src)]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["P"]["rows"] == [] and rec["roundtrip"]


def test_phi_rejects_garbage(tmp_path, capsys):
    src = tmp_path / "bad.json"
    src.write_text("{not json")
    assert main(["phi", "--input", str(src)]) == 1
    src.write_text(json.dumps([[0, 1], [0]]))
    assert main(["phi", "--input", str(src)]) == 1


def test_rsk_file_roundtrip(tmp_path, capsys):
    src = FIXTURES / "rsk_example.json"
    assert main(["rsk", "--input", str(src)]) == 0
    rec = json.loads(capsys.readouterr().out)
    expected = json.loads(src.read_text())
    assert rec["P"] == expected["P"] and rec["Q"] == expected["Q"] and rec["roundtrip"]
    assert main(["rsk", "--inverse", "--input", str(src)]) == 0
    assert json.loads(capsys.readouterr().out)["matrix"] == expected["matrix"]


@settings(max_examples=30)
@given(st.lists(st.lists(st.integers(0, 3), min_size=3, max_size=3), min_size=1, max_size=3))
def test_rsk_random_roundtrip(A):
    from truncated_tableaux.cli import cmd_rsk

    rec = cmd_rsk({"matrix": A}, False)
    assert rec["roundtrip"]
    back = cmd_rsk({"P": rec["P"], "Q": rec["Q"], "size": [len(A), 3]}, True)
    assert back["matrix"] == A and back["roundtrip"]


@pytest.mark.parametrize(
    "text,family",
    [
        ("shifted:delta(5)\\delta(1)", Family.STAIRCASE_BOX),
        ("shifted:[3,2,1]\\[1]", Family.STAIRCASE_BOX),
        ("rect(4,3)\\delta(1)", Family.RECT_STAIRCASE),
        ("straight:[3,3,3,3]\\[1]", Family.RECT_STAIRCASE),
        ("rect(5,5)\\almostsq(3)", Family.RECT_ALMOSTSQ),
        ("straight:[6,6,6,6,5]\\[3,2]", None),
        ("shifted:delta(4)\\delta(2)", None),
    ],
)
def test_family_detection(text, family):
    assert parse_shape(text).family is family


def test_rect_rows_then_length():
    spec = parse_shape("rect(4,3)\\delta(1)")
    assert spec.shape.row_lengths == (2, 3, 3, 3)
    assert spec.params == (3, 4, 1)


@pytest.mark.parametrize(
    "text",
    ["shifted:delta(5)\\delta(1)", "rect(4,3)\\delta(2)", "rect(5,5)\\almostsq(3)", "straight:[6,6,6,6,5]\\[3,2]", "shifted:[8,7,6,2]\\[5,2]", "straight:[2,1]\\[]"],
)
def test_canonical_printer_roundtrips(text):
    spec = parse_shape(text)
    again = parse_shape(spec.canonical())
    assert again.shape == spec.shape and again.canonical() == spec.canonical()


@pytest.mark.parametrize("text", ["", "rect(3,3)\\delta(5)", "shifted:[2,2]", "straight:[1,2]", "delta(3)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_shape(text)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "truncated_tableaux", "count", "--shape", "rect(3,3)\\delta(1)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip().endswith("12")
