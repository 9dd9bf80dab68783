import json
import subprocess
import sys

import pytest

from riordan_moments import cli
from riordan_moments.errors import NonPolynomialResult
from riordan_moments.gfspec import GfSpec
from riordan_moments.verify import Check


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize(
    "argv, want",
    [
        (["transform", "--egf-rational", "1/(1-x)", "--direction", "T", "-n", "8"], "1 1 2 5 14 42 132 429"),
        (["transform", "--fixture", "A000670", "--direction", "T", "-n", "6"], "1 1 3 11 45 197"),
        (["transform", "--fixture", "A064641", "--direction", "T_inv", "-n", "8"],
         "1 2 7 35 232 1919 19045 220502"),
        (["transform", "--num", "1", "--den", "1,-1", "-n", "5"], "1 1 2 5 14"),
        (["cf", "extract", "--fixture", "A000142", "--depth", "5"], "alpha 1 3 5 7 9\nbeta 1 4 9 16"),
        (["cf", "map", "--alpha", "1,1,1,1", "--beta", "1,1,1", "--direction", "T_inv", "--scaling", "squares"],
         "alpha 1 2 3 4\nbeta 1 4 9"),
        (["cf", "evaluate", "--alpha", "0,3,2,2,2", "--beta", "1,1,1,1", "-n", "8"], "1 0 1 3 11 41 156 601"),
        (["cf", "map", "--alpha", "1,2", "--beta", "3", "--direction", "T", "--weights", "3"],
         "alpha 1 1\nbeta 1"),
        (["cf", "extract", "--egf-rational", "1/(1-x)", "--depth", "3"], "alpha 1 3 5\nbeta 1 4"),
        (["triangle", "--family", "G", "--a", "1", "--b", "2", "--rows", "5"],
         "1\n1 1\n1 6 1\n1 19 19 1\n1 48 126 48 1"),
        (["triangle", "--family", "symmetric-image", "--rows", "5"], "1\n1 1\n1 4 1\n1 9 9 1\n1 16 38 16 1"),
        (["triangle", "--family", "eulerian", "--a", "0", "--b", "1", "--rows", "3"], "1\n0 1\n0 1 1"),
        (["triangle", "--family", "symmetric", "--rows", "4"], "1\n1 1\n1 4 1\n1 11 11 1"),
        (["riordan", "matrix", "--g", "1/(1-x)", "--f", "x/(1-x)", "--rows", "4"], "1\n1 1\n1 2 1\n1 3 3 1"),
        (["riordan", "moments", "--ortho", "0,0,1,1", "--rows", "6"], "1 1 2 4 9 21"),
        (["riordan", "moments", "--eulerian", "1,1", "--rows", "4"], "1 1 1+y 1+4*y+y^2"),
        (["riordan", "production", "--g", "1/(1-x)", "--f", "x/(1-x)", "--flavor", "exponential", "--rows", "3"],
         "1 1\n1 3 1\n0 4 5 1"),
        (["riordan", "inverse", "--g", "1/(1+x)", "--f", "x/(1+x)", "--flavor", "exponential", "--rows", "3"],
         "1\n1 1\n2 4 1"),
    ],
)
def test_outputs(capsys, argv, want):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == want


def test_json_outputs_round_trip(capsys):
    code, out, _ = run(capsys, "--json", "cf", "extract", "--fixture", "A000142", "--depth", "4")
    payload = json.loads(out)
    assert code == 0 and payload == {"alpha": [1, 3, 5, 7], "beta": [1, 4, 9]}
    code, out, _ = run(capsys, "cf", "evaluate", "--spec", out, "--json")
    assert json.loads(out)["terms"] == [1, 1, 2, 6, 24, 120, 720, 5040]

    code, out, _ = run(capsys, "transform", "--ogf-rational", "x(1-x)/(1-x+x^2)+1", "--direction", "T_inv",
                       "-n", "4", "--json")
    payload = json.loads(out)
    spec = GfSpec.from_dict(payload["input"])
    assert spec == GfSpec.from_infix("x(1-x)/(1-x+x^2)+1")
    code, out2, _ = run(capsys, "transform", "--spec", json.dumps(payload["input"]), "--direction", "T_inv",
                        "-n", "4", "--json")
    assert json.loads(out2)["terms"] == payload["terms"]

    code, out, _ = run(capsys, "triangle", "--family", "eulerian", "--a", "1", "--b", "3", "--rows", "3", "--json")
    assert json.loads(out) == [[1], [1, 2], [1, 13, 4]]


def test_fractional_output_is_exact(capsys):
    code, out, _ = run(capsys, "triangle", "--family", "G", "--a", "1/2", "--b", "3", "--rows", "2")
    assert out == "1\n1/2 5/2"
    code, out, _ = run(capsys, "--json", "cf", "map", "--alpha", "1,1", "--beta", "1", "--direction", "T",
                       "--scaling", "triangular")
    assert json.loads(out) == {"alpha": [1, 0], "beta": [1]}


def test_pipeline_errors_exit_2(capsys):
    code, _, err = run(capsys, "transform", "--egf-rational", "1/(1-x)", "--direction", "T_inv")
    assert code == 2 and "OGF" in err
    code, _, err = run(capsys, "transform", "--egf-rational", "x", "--direction", "T", "-n", "4")
    assert code == 2 and "stage: invert" in err
    code, _, err = run(capsys, "transform", "--fixture", "A000108", "--egf-rational", "1")
    assert code == 2 and "exactly one" in err
    code, _, err = run(capsys, "transform", "--fixture", "A000108", "-n", "30")
    assert code == 2
    code, _, err = run(capsys, "transform", "--egf-rational", "1/(1-x")
    assert code == 2


def test_order_limit(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--order", "65", "transform", "--fixture", "A000142"])
    assert exc.value.code == 2
    code, out, _ = run(capsys, "--order", "5", "transform", "--egf-rational", "1/(1-x)")
    assert out == "1 1 2 5 14"


def test_zero_hankel_exit_3(capsys):
    code, _, err = run(capsys, "cf", "extract", "--ogf-rational", "1/(1-x)", "--depth", "3")
    assert code == 3 and "depth 1" in err


def test_non_polynomial_exit_4(capsys, monkeypatch):
    def boom(n):
        raise NonPolynomialResult("row 2 is not a polynomial")

    monkeypatch.setattr(cli, "symmetric_image_triangle", boom)
    code, _, err = run(capsys, "triangle", "--family", "symmetric-image")
    assert code == 4 and "polynomial" in err


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "transform-pairs")
    assert code == 0 and out.count("PASS") == 6
    monkeypatch.setattr(cli, "run_suite", lambda name: [Check("x", True), Check("y", False, "broken")])
    code, out, _ = run(capsys, "verify")
    assert code == 5 and "FAIL y: broken" in out


def test_fetch_offline_falls_back_to_embedded(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("RIORDAN_MOMENTS_CACHE", str(tmp_path))
    code, out, err = run(capsys, "--offline", "fetch", "A000108", "-n", "5")
    assert code == 0 and out.endswith("1 1 2 5 14") and "embedded" in out
    code, _, err = run(capsys, "--offline", "fetch", "a999999")
    assert code == 2 and "network" in err
    code, out, _ = run(capsys, "fetch", "A006318", "--offline", "--json")
    assert json.loads(out)["terms"][:5] == [1, 2, 6, 22, 90]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "riordan_moments", "triangle", "--family", "eulerian",
                          "--rows", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.split() == ["1", "0", "1"]
