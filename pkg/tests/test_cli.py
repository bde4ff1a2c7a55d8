import json
import subprocess
import sys

import pytest

from orbiring.cli import main
from orbiring.quotient import FiniteGradedAlgebra, cr_algebra
from orbiring.sectors import CircleWeightSystem, Mode


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_single_product(capsys):
    status, out, _ = run(capsys, "inertial", "--weights", "2", "--mode", "symplectic",
                         "--order", "3", "--product", "1,1")
    assert (status, out) == (0, "2 u^1 a2\n")


def test_single_product_json(capsys):
    _, out, _ = run(capsys, "inertial", "--weights", "2,1,1", "--mode", "hyper", "--product", "1,1",
                    "--format", "json")
    assert json.loads(out) == {"target": 0, "coefficient": 1, "u_exponent": 4}


def test_inertial_presentation(capsys):
    _, out, _ = run(capsys, "inertial", "--weights", "2,1,1", "--mode", "hyper")
    assert out.splitlines()[-1] == "a1*a1 = 1 u^4 a0"


def test_cr_text(capsys):
    status, out, _ = run(capsys, "cr", "--weights", "2,1,1", "--mode", "symplectic", "--format", "text")
    assert status == 0
    assert "relations:\n  u^3 = 0\n  u*a1 = 0\n  a1^2 = u^2\n" in out


def test_cr_json_round_trip(capsys):
    _, out, _ = run(capsys, "cr", "--weights", "3,1,2", "--mode", "hyper", "--format", "json")
    A = FiniteGradedAlgebra.from_json(out)
    assert A.constants() == cr_algebra(CircleWeightSystem((3, 1, 2), Mode.HYPER)).constants()


def test_cr_latex(capsys):
    _, out, _ = run(capsys, "cr", "--weights", "2,1,1", "--mode", "hyper", "--format", "latex")
    assert out == "\\mathbb{Q}[u, \\alpha_{1}]/\\langle u^{3}, u\\alpha_{1}, \\alpha_{1}^2\\rangle\n"


def test_cr_integral(capsys):
    _, out, _ = run(capsys, "cr", "--weights", "2,1,1", "--integral")
    assert out.splitlines()[0].endswith("CONJECTURAL")
    assert "  2*u^3 = 0" in out


def test_present(capsys):
    _, out, _ = run(capsys, "present", "--weights", "2,1,1", "--mode", "hyper")
    lines = out.splitlines()
    assert lines[lines.index("J:") + 1:lines.index("K:")] == ["u1 - u2", "u0 - 2*u2"]
    _, out, _ = run(capsys, "present", "--weights", "2,1,1", "--format", "json")
    assert json.loads(out)["K"] == ["a0*(2 u0)(1 u1)(1 u2)", "a1*(2 u0)"]


def test_compare(capsys):
    _, out, _ = run(capsys, "compare", "--weights", "2,1,1", "--mode", "symplectic",
                    "--weights-b", "2,1,1", "--mode-b", "hyper")
    assert out == "DISTINGUISHED hilbert at degree 2: 2 vs 1\n"
    _, out, _ = run(capsys, "compare", "--weights", "1,1,1", "--weights-b", "1,1,1", "--mode-b", "hyper",
                    "--format", "json")
    assert json.loads(out) == {"verdict": "INDISTINGUISHABLE", "witness": None}


@pytest.mark.parametrize("a,b,want", [("2", "", "false"), ("1", "1,0,0", "true")])
def test_rep_homotopy(capsys, a, b, want):
    _, out, _ = run(capsys, "rep-homotopy", "--weights", a, "--weights-b", b)
    assert out == want + "\n"


@pytest.mark.parametrize("argv", [
    ["cr", "--weights", "2,x"],
    ["cr", "--weights", "2,1", "--bogus"],
    ["cr", "--weights", ""],
    ["inertial", "--weights", "2", "--order", "0"],
    ["inertial", "--weights", "2", "--product", "1"],
    ["compare", "--weights", "1"],
    ["frobnicate"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv,name", [
    (["cr", "--weights", "2,-1,1"], "PositivityRequired"),
    (["cr", "--weights", "2,1", "--order", "4"], "OrderMismatch"),
    (["present", "--weights", "0,1"], "PositivityRequired"),
])
def test_domain_errors(capsys, argv, name):
    status, _, err = run(capsys, *argv)
    assert status == 3 and err.startswith(name + ":")


def test_check_requires_seed(capsys, monkeypatch):
    monkeypatch.delenv("ORBIRING_SEED", raising=False)
    with pytest.raises(SystemExit) as exc:
        main(["check", "--suite", "smooth"])
    assert exc.value.code == 2


def test_check_env_seed_and_determinism(capsys, monkeypatch):
    monkeypatch.setenv("ORBIRING_SEED", "9")
    argv = ["check", "--suite", "oracle", "--suite", "homotopy", "--trials", "10", "--max-n", "3"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    assert first[0] == 0
    assert first[1].splitlines()[0].startswith("PASS oracle checked=")
    _, out, _ = run(capsys, *argv, "--seed", "9", "--format", "json")
    assert [json.loads(line)["suite"] for line in out.splitlines()] == ["oracle", "homotopy"]


def test_check_reports_counterexample(capsys, monkeypatch):
    import orbiring.checks as checks

    def broken(weight_list, seed=0):
        res = checks.SuiteResult("oracle", checked=1)
        res.counterexample = {"check": "oracle == closed form", "weights": [2], "mode": "HYPER",
                              "m": 2, "g": 1, "h": 1, "values": ["1 u^0 a0", "2 u^1 a0"]}
        return res

    monkeypatch.setattr(checks, "suite_oracle", broken)
    status, out, _ = run(capsys, "check", "--seed", "1", "--suite", "oracle", "--suite", "smooth")
    assert status == 1
    lines = out.splitlines()
    assert lines[0] == "FAIL oracle checked=1"
    cx = json.loads(lines[1].split("counterexample: ", 1)[1])
    assert cx["values"] == ["1 u^0 a0", "2 u^1 a0"] and cx["g"] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbiring", "cr", "--weights", "1,1", "--format", "json"],
                          capture_output=True, text=True, check=True)
    again = subprocess.run([sys.executable, "-m", "orbiring", "cr", "--weights", "1,1", "--format", "json"],
                           capture_output=True, text=True, check=True)
    assert proc.stdout == again.stdout
    assert json.loads(proc.stdout)["hilbert"] == {"0": 1, "2": 1}
