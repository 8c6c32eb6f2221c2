import json
import subprocess
import sys

import pytest

from grmrad.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_field_json(capsys):
    code, out, _ = _run(capsys, "field", "--p", "2", "--r", "3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"p": 2, "r": 3, "q": 8, "modulus": [1, 1, 0, 1], "alpha": 2}


def test_field_text_by_order(capsys):
    code, out, _ = _run(capsys, "field", "--q", "9")
    assert code == 0
    assert "q: 9" in out and "points:" in out


def test_hpoly_forms_agree(capsys):
    code, out, _ = _run(capsys, "hpoly", "--q", "8", "--i", "6", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["agree"] and d["forms"]["definition"]["degree"] == 6
    code, out, _ = _run(capsys, "hpoly", "--p", "5", "--i", "3", "--ordering", "natural", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["agree"]
    assert set(d["forms"]) == {"definition", "coeff_form", "product_form", "recurrence_form"}


def test_basis_csv_header(capsys):
    code, out, _ = _run(capsys, "basis", "--q", "4", "--m", "2", "--d", "5", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# ") and "m=2" in lines[0] and "d=5" in lines[0]
    assert len(lines) == 1 + 3
    assert all(len(l.split(",")) == 16 for l in lines[1:])


def test_code_gen_json_roundtrip(capsys, tmp_path):
    path = tmp_path / "g.json"
    code, out, _ = _run(capsys, "code", "gen", "--q", "2", "--m", "3", "--nu", "1", "--format", "json", "--out", str(path))
    assert code == 0 and out == ""
    d = json.loads(path.read_text())
    assert d["header"]["nu"] == 1
    assert len(d["rows"]) == 4 and d["rows"][0] == [1] * 8
    assert d["row_labels"] == [[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0]]


def test_dim(capsys):
    code, out, _ = _run(capsys, "dim", "--q", "4", "--m", "2", "--format", "json")
    assert code == 0
    dims = json.loads(out)["dims"]
    assert [r["radical_dim"] for r in dims] == [r["code_dim"] for r in dims]
    assert dims[0]["radical_dim"] == 16


def test_verify_exit_codes(capsys):
    assert _run(capsys, "verify", "bch", "--p", "2", "--m", "3")[0] == 0
    assert _run(capsys, "verify", "nonprime", "--q", "4", "--m", "1")[0] == 0
    assert _run(capsys, "verify", "section6")[0] == 0
    assert _run(capsys, "verify", "duality", "--q", "8", "--m", "3")[0] == 0
    # the printed second-interpolant form fails in odd characteristic
    code, out, _ = _run(capsys, "verify", "interp", "--q", "5")
    assert code == 1
    assert "FAIL  interp.h2_printed " in out and "counterexample" in out


def test_verify_json_lines(capsys):
    code, out, _ = _run(capsys, "verify", "nonprime", "--q", "4", "--m", "2", "--format", "json")
    assert code == 0
    reports = [json.loads(l) for l in out.splitlines()]
    assert len(reports) == 3 + 4
    assert all(r["verdict"] == "pass" and "elapsed" not in r for r in reports)
    _, again, _ = _run(capsys, "verify", "nonprime", "--q", "4", "--m", "2", "--format", "json")
    assert again == out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "nonprime", "--q", "6", "--m", "1"],
        ["verify", "nonprime", "--q", "5", "--m", "1"],
        ["verify", "bch", "--q", "4", "--m", "1"],
        ["code", "gen", "--q", "8", "--m", "6", "--nu", "1"],
        ["field", "--p", "4"],
        ["field", "--q", "4", "--p", "2"],
        ["hpoly", "--q", "4", "--i", "4"],
        ["basis", "--q", "4", "--m", "0", "--d", "0"],
        ["nonsense"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert _run(capsys, *argv)[0] == 2


def test_max_size_override(capsys):
    assert _run(capsys, "basis", "--q", "4", "--m", "2", "--d", "0", "--max-size", "8")[0] == 2
    assert _run(capsys, "basis", "--q", "4", "--m", "2", "--d", "6", "--max-size", "16")[0] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "grmrad", "dim", "--q", "3", "--m", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert "dim M^0 = 3" in proc.stdout
