"""Command-line driver: outputs, determinism, exit codes."""

import csv
import io
import json

import pytest

from bisetfun.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_groups_listing(capsys):
    code, out, _ = run_cli(capsys, "groups")
    assert code == 0
    data = json.loads(out)
    names = {g["name"] for g in data["groups"]}
    assert {"1", "C2", "C3", "C4", "V4", "C6", "S3", "C8", "D8",
            "Q8"} <= names
    s3 = next(g for g in data["groups"] if g["name"] == "S3")
    assert s3["subgroupClassCount"] == 4


def test_groups_detail(capsys):
    code, out, _ = run_cli(capsys, "groups", "--group", "S3")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 6
    assert len(data["subgroupClasses"]) == 4


def test_groups_unknown_group_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "groups", "--group", "nope")
    assert code == 2
    assert "unknown group" in err


def test_marks_csv(capsys):
    code, out, _ = run_cli(capsys, "marks", "S3")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 5
    assert rows[1][1:] == ["6", "0", "0", "0"]
    assert rows[4][1:] == ["1", "1", "1", "1"]


def test_marks_trivial_group(capsys):
    code, out, _ = run_cli(capsys, "marks", "1")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[1][1:] == ["1"]


def test_ring_table_burnside_trivial(capsys):
    code, out, _ = run_cli(capsys, "ring-table", "1")
    data = json.loads(out)
    assert code == 0
    assert data["dim"] == 1
    assert data["compositionTable"] == [[["1"]]]


def test_ring_table_c2_dimension(capsys):
    code, out, _ = run_cli(capsys, "ring-table", "C2")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 5
    assert len(data["basisLabels"]) == 5


def test_ring_table_matrix_instance(capsys):
    code, out, _ = run_cli(capsys, "ring-table", "1", "--functor", "M2")
    data = json.loads(out)
    assert code == 0 and data["dim"] == 4
    # composition of matrix units: E01 o E10 = E00, E01 o E01 = 0
    table = data["compositionTable"]
    assert table[1][2] == ["1", "0", "0", "0"]
    assert table[1][1] == ["0", "0", "0", "0"]


def test_units_c2(capsys):
    code, out, _ = run_cli(capsys, "units", "C2")
    data = json.loads(out)
    assert code == 0
    assert data["unitCount"] == 4
    wanted = {(("0", 1), ("1", 2)): False}
    # one unit must be [C2/1] - [C2/C2]
    found = any(
        sorted((t["classIndex"], t["coeff"]) for t in u["terms"]) ==
        [(0, "1"), (1, "-1")]
        for u in data["units"])
    assert found


def test_orth_reports(capsys):
    code, out, _ = run_cli(capsys, "--bound", "2", "orth", "C2")
    data = json.loads(out)
    assert code == 0
    assert data["orthogonalUnits"]["exact"] is True
    assert len(data["orthogonalUnits"]["elements"]) == 4
    auts = data["orthogonalAutomorphisms"]
    assert auts["bound"] == 2
    assert auts["groupTableVerified"] is True
    assert ["1", "0", "0", "0", "0"] not in auts["elements"]  # not identity!
    # identity endomorphism has the diagonal-class coordinate set
    assert any(e.count("0") == 4 for e in auts["elements"])


def test_orth_m1_matches_burnside(capsys):
    code1, out1, _ = run_cli(capsys, "orth", "C2", "--functor", "M1")
    code2, out2, _ = run_cli(capsys, "orth", "C2", "--functor", "B")
    u1 = json.loads(out1)["orthogonalUnits"]["elements"]
    u2 = json.loads(out2)["orthogonalUnits"]["elements"]
    assert code1 == code2 == 0
    assert sorted(u1) == sorted(u2)


def test_verify_tiny_window_passes(capsys):
    code, out, _ = run_cli(capsys, "--window", "1,C2", "--seed", "7",
                           "verify", "green-axioms")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failures" in out


def test_verify_detects_injected_star_defect(capsys):
    code, out, _ = run_cli(capsys, "--window", "1,C2", "--seed", "7",
                           "--inject-defect", "star-negate",
                           "verify", "star")
    assert code == 1
    assert "FAIL" in out


def test_verify_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nope"])
    assert exc.value.code == 2


def test_verify_writes_report(tmp_path, capsys):
    code, _, _ = run_cli(capsys, "--window", "1,C2", "--seed", "3",
                         "--out", str(tmp_path), "verify", "category")
    assert code == 0
    report = json.loads((tmp_path / "verify_category.json").read_text())
    assert report["passed"] is True
    assert report["seed"] == 3


def test_outputs_are_deterministic(tmp_path, capsys):
    d1, d2 = tmp_path / "a", tmp_path / "b"
    for d in (d1, d2):
        code, _, _ = run_cli(capsys, "--window", "1,C2", "--seed", "7",
                             "--out", str(d), "verify", "star")
        assert code == 0
    b1 = (d1 / "verify_star.json").read_bytes()
    b2 = (d2 / "verify_star.json").read_bytes()
    assert b1 == b2


def test_custom_catalog(tmp_path, capsys):
    path = tmp_path / "cat.json"
    path.write_text(json.dumps([{
        "name": "Z7", "order": 7,
        "table": [[(i + j) % 7 for j in range(7)] for i in range(7)],
    }]))
    code, out, _ = run_cli(capsys, "--catalog", str(path), "groups")
    assert code == 0
    names = {g["name"] for g in json.loads(out)["groups"]}
    assert "Z7" in names


def test_bad_catalog_is_input_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run_cli(capsys, "--catalog", str(path), "groups")
    assert code == 2
    assert "catalog" in err
