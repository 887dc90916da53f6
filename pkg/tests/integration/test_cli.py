import csv

import pytest
from unittest.mock import patch

from qenum.cli import main
from qenum.gf4_codes import parse_code
from qenum.schemas import EnumerationReport


def test_krawtchouk_value(capsys):
    assert main(["krawtchouk", "--n", "5", "--i", "1", "--x", "0"]) == 0
    assert capsys.readouterr().out.strip() == "5"


def test_krawtchouk_table(capsys):
    assert main(["krawtchouk", "table", "--n", "3"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "i,0,1,2,3"
    assert lines[2] == "1,3,1,-1,-3"
    assert len(lines) == 5


def test_example_513(capsys):
    assert main(["example", "513"]) == 0
    out = capsys.readouterr().out
    assert "B(X,Y) = X^5 + 15 X Y^4" in out
    assert "B⊥(X,Y) = X^5 + 30 X^2 Y^3 + 15 X Y^4 + 18 Y^5" in out
    assert "MISMATCH" not in out
    assert out.strip().endswith("ALL IDENTITIES HOLD")


def test_enumerate_text(capsys):
    assert main(["enumerate", "--code", "five_qubit"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("n=5 K=2")
    assert "D(X,Y,Z,W) = W^5 + 5 W X^2 Y^2 + 5 W X^2 Z^2 + 5 W Y^2 Z^2" in out


def test_enumerate_json(capsys):
    assert main(["enumerate", "--code", "five_qubit", "--format", "json"]) == 0
    report = EnumerationReport.model_validate_json(capsys.readouterr().out)
    assert report.primal.K == "2/1"
    assert report.primal.B[4] == "15/1"
    assert report.dual.B == ["1/1", "0/1", "0/1", "30/1", "15/1", "18/1"]
    assert report.self_orthogonal


def test_enumerate_csv(capsys):
    assert main(["enumerate", "--code", "four_two_two", "--format", "csv"]) == 0
    rows = list(csv.reader(capsys.readouterr().out.splitlines()))
    assert rows[0] == ["table", "i", "j", "k", "value"]
    assert ["B", "4", "", "", "3"] in rows


def test_enumerate_with_projector(capsys):
    assert main(["enumerate", "--code", "four_two_two", "--projector"]) == 0
    assert capsys.readouterr().out.startswith("n=4 K=4")


def test_projector_budget_exit_status():
    with patch("qenum.config.MAX_PROJECTOR_N", 4):
        assert main(["enumerate", "--code", "five_qubit", "--projector"]) == 5


def test_dual(capsys):
    assert main(["dual", "--code", "four_two_two"]) == 0
    dual = parse_code(capsys.readouterr().out)
    assert (dual.n, dual.g) == (4, 6)


def test_macwilliams_check(capsys):
    assert main(["macwilliams-check", "--code", "steane"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    assert out.strip().endswith("ALL IDENTITIES HOLD")


def test_distances(capsys):
    assert main(["distances", "--code", "five_qubit"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "d = 3"
    assert out[1] == "frontier (d_x, d_z): (1,5) (2,2) (5,1)"
    assert out[2] == "dominance C <= C⊥: yes"


@pytest.mark.parametrize(
    "kind, n, d, expected",
    [
        ("singleton", 10, 3, "singleton: K <= 64"),
        ("hamming", 5, 3, "hamming: K <= 128"),
    ],
)
def test_finite_bounds(capsys, kind, n, d, expected):
    assert main(["bound", kind, "--n", str(n), "--dx", str(d), "--dz", str(d)]) == 0
    assert capsys.readouterr().out.splitlines()[0] == expected


def test_singleton_k_check(capsys):
    assert main(["bound", "singleton", "--n", "5", "--dx", "3", "--dz", "3", "--k", "1"]) == 0
    assert "  singleton_holds: True" in capsys.readouterr().out


def test_lp_corner_violation_exit_status(capsys):
    assert main(["bound", "lp", "--n", "10", "--dx", "3", "--dz", "3"]) == 7
    out = capsys.readouterr().out
    assert out.startswith("lp: K <= no valid certificate")
    assert "  violation:" in out


def test_asymptotic_bounds(capsys):
    assert main(["bound", "hamming", "--asymptotic", "--deltax", "0.1", "--deltaz", "0.1"]) == 0
    assert capsys.readouterr().out.startswith("hamming: rate <= ")
    assert main(["bound", "hamming", "--asymptotic", "--deltax", "0.3", "--deltaz", "0.1"]) == 7


def test_emit_curve(tmp_path):
    target = tmp_path / "singleton.csv"
    assert main(["bound", "singleton", "--emit-curve", str(target)]) == 0
    rows = target.read_text(encoding="utf-8").splitlines()
    assert rows[0] == "delta,bound"
    assert len(rows) == 102
    assert rows[1] == "0.000,1.00000000"


def test_unknown_code_is_an_io_error():
    assert main(["enumerate", "--code", "no_such_code"]) == 3


def test_malformed_code_file(tmp_path):
    path = tmp_path / "bad.code"
    path.write_text("n=3 format=f4\n1 q 0\n", encoding="utf-8")
    assert main(["enumerate", "--code", str(path)]) == 4


def test_missing_flags_are_usage_errors():
    assert main(["bound", "singleton", "--n", "10", "--dz", "3"]) == 2
    assert main(["krawtchouk", "--n", "5"]) == 2


def test_argparse_rejects_unknown_bound():
    with pytest.raises(SystemExit) as excinfo:
        main(["bound", "plotkin"])
    assert excinfo.value.code == 2


@pytest.mark.parametrize(
    "extra",
    [
        ["--asymptotic"],
        ["--asymptotic", "--deltax", "0.1"],
        ["--n", "10"],
        ["--n", "10", "--dx", "3"],
    ],
)
def test_emit_curve_with_incomplete_point_flags_is_a_usage_error(tmp_path, extra):
    target = tmp_path / "curve.csv"
    assert main(["bound", "singleton", *extra, "--emit-curve", str(target)]) == 2
    assert not target.exists()


def test_emit_curve_with_finite_point(tmp_path, capsys):
    target = tmp_path / "curve.csv"
    assert main(["bound", "singleton", "--n", "10", "--dx", "3", "--dz", "3", "--emit-curve", str(target)]) == 0
    assert target.exists()
    assert capsys.readouterr().out.splitlines()[0] == "singleton: K <= 64"
