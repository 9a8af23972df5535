import csv
import io
import json

import pytest

from su2particle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_algebra(capsys):
    code, out, _ = run(capsys, "check", "algebra", "--degree", "4")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_check_degree_zero_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "algebra", "--degree", "0")
    assert code == 2 and "--degree" in err


def test_check_poisson_default_points(capsys):
    code, out, _ = run(capsys, "check", "poisson", "--seed", "7")
    report = json.loads(out)
    assert code == 0 and len(report["points"]) == 20


def test_check_ladders_names_variant(capsys):
    code, out, _ = run(capsys, "check", "ladders", "--degree", "3")
    audit = json.loads(out)["audit"]
    assert code == 0 and audit["hamiltonian_form_holding"]


def test_spectrum_rows(capsys):
    code, out, _ = run(capsys, "spectrum", "--jmax", "1")
    assert code == 0 and len(json.loads(out)["rows"]) == 14


def test_spectrum_csv(capsys):
    code, out, _ = run(capsys, "spectrum", "--jmax", "0.5", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["j", "l", "r", "E", "degree", "verified"] and len(rows) == 6


def test_eigenfunction(capsys):
    code, out, _ = run(capsys, "eigenfunction", "--j", "1/2", "--l", "1/2", "--r", "1/2")
    obj = json.loads(out)
    assert code == 0 and obj["degree"] == 1 and obj["E"] == "3/4"


def test_eigenfunction_negative_label(capsys):
    code, out, _ = run(capsys, "eigenfunction", "--j", "1", "--l", "-1", "--r", "0")
    assert code == 0 and json.loads(out)["l"] == "-1/1"


@pytest.mark.parametrize("argv,needle", [
    (["eigenfunction", "--j", "1", "--l", "2", "--r", "0"], "-j..j"),
    (["eigenfunction", "--j", "1", "--l", "1/2", "--r", "0"], "integer"),
    (["geodesic", "--steps", "-1"], "--steps"),
    (["geodesic", "--R", "1,2"], "three"),
    (["quadrature", "--monomial", "1,0,0"], "four"),
    (["quadrature", "--samples", "10"], "1000"),
    (["spectrum", "--jmax", "1/3"], "half-integer"),
    (["spectrum", "--jmax", "4"], "budget"),
])
def test_usage_errors(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and needle in err


def test_argparse_errors_exit_2(capsys):
    code, _, err = run(capsys, "geodesic", "--format", "xml")
    assert code == 2 and "invalid choice" in err


def test_help_exits_0(capsys):
    code, out, _ = run(capsys, "coset", "--help")
    assert code == 0 and "--jmax" in out


def test_gram(capsys):
    code, out, _ = run(capsys, "gram", "--jmax", "1/2")
    obj = json.loads(out)
    assert code == 0 and len(obj["matrix"]) == 5 and obj["off_diagonal_zero"]


def test_geodesic_full_turn(capsys):
    code, out, _ = run(capsys, "geodesic", "--g0", "0,0,0", "--R", "0,0,1", "--t", "6.2832",
                       "--steps", "1000", "--method", "exact")
    obj = json.loads(out)
    g = obj["final_g"]
    assert code == 0
    assert abs(g[0][0][0] - 1) < 1e-7 and abs(g[1][1][0] - 1) < 1e-7
    assert obj["conservation"]["max_L"] <= 1e-12


def test_geodesic_csv_has_trailing_report(capsys):
    code, out, _ = run(capsys, "geodesic", "--steps", "4", "--format", "csv")
    lines = out.splitlines()
    assert lines[0].startswith("t,g11_re")
    assert len([x for x in lines if not x.startswith("#")]) == 6
    assert any(x.startswith("# max_L=") for x in lines)


def test_coset_labels(capsys):
    code, out, _ = run(capsys, "coset", "--jmax", "2")
    obj = json.loads(out)
    assert code == 0 and len(obj["constraint"]["survivors"]) == 9
    assert all(m["status"] == "proportional" for m in obj["matches"])


def test_coset_trajectory(capsys):
    code, out, _ = run(capsys, "coset", "--R", "0.2,1,0.4", "--steps", "100", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["t", "x1", "x2", "x3", "kinetic"] and len(rows) == 102


def test_quadrature(capsys):
    code, out, _ = run(capsys, "quadrature", "--monomial", "1,0,0,1", "--samples", "20000")
    obj = json.loads(out)
    assert code == 0 and obj["exact"] == {"re": "1/2", "im": "0/1"}


def test_output_file(capsys, tmp_path):
    target = tmp_path / "gram.json"
    code, out, _ = run(capsys, "gram", "--jmax", "0", "--output", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["matrix"] == [["1/1"]]


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "csv", "spectrum", "--jmax", "0")
    assert code == 0 and out.startswith("j,l,r")


def test_failure_exit_code(capsys):
    # an impossible tolerance makes the floating Poisson checks fail
    code, out, _ = run(capsys, "check", "poisson", "--points", "2", "--tolerance", "0")
    assert code == 1 and json.loads(out)["status"] == "fail"


@pytest.mark.parametrize("argv", [
    ["check", "all", "--degree", "3", "--points", "5", "--seed", "3"],
    ["quadrature", "--monomial", "2,1,1,2", "--samples", "5000", "--seed", "11"],
    ["geodesic", "--R", "0.3,0.1,-2", "--steps", "50", "--method", "rk4_projected", "--format", "csv"],
])
def test_byte_identical_reruns(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
