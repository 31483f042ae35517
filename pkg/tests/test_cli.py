import json
import subprocess
import sys

import pytest

from pencil_lab.cli import main

LORENZINI = "(x^3+y^3+(1+x+y)^3)/(x*y*(1+x+y))"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_x_over_y(capsys):
    code, out, _ = run(capsys, "analyze", "--vars", "x,y", "--json", "x/y")
    data = json.loads(out)
    assert code == 0
    assert data["rho"] == 0 and data["composite"] is False


def test_analyze_lorenzini(capsys):
    code, out, _ = run(capsys, "analyze", "--vars", "x,y", "--json", LORENZINI)
    data = json.loads(out)
    assert code == 0
    assert data["rho"] == 8
    assert data["bounds"]["lorenzini"] == "pass" and data["bounds"]["theorem1"] == "pass"


def test_analyze_composite_includes_decomposition(capsys):
    code, out, _ = run(capsys, "analyze", "--json", "(x^2*y^2+1)/(x*y)")
    data = json.loads(out)
    assert data["composite"] is True and data["rho"] == "infinite"
    assert data["decomposition"]["inner_num"] == "x*y"


def test_text_output(capsys):
    code, out, _ = run(capsys, "spectrum", LORENZINI)
    assert "rho = 8" in out


def test_rho_and_composite(capsys):
    assert run(capsys, "rho", "x^2/y^2")[1].strip() == "infinite"
    assert run(capsys, "composite", "x^2/y^2")[1].strip() == "true"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--json", "x^2/y^2")
    assert json.loads(out) == {"outer_num": "t^2", "outer_den": "1", "inner_num": "x",
                               "inner_den": "y", "field": "Q"}


def test_jacobian_depend_express(capsys):
    assert run(capsys, "jacobian", "x/y", "x")[1].strip() == "(x)/(y^2)"
    assert run(capsys, "depend", "x/y", "x^2/y^2")[1].strip() == "true"
    code, out, _ = run(capsys, "express", "--json", "(x^2+y^2)/(x*y)", "x/y")
    assert json.loads(out) == {"in_kf": True, "num": "t^2+1", "den": "t"}
    assert run(capsys, "express", "x", "x/y")[1].strip() == "not in K(f)"


@pytest.mark.parametrize("argv", [
    ["analyze", "x+"],
    ["analyze", "x*w"],
    ["analyze", "1/(x-x)"],
    ["analyze", "3"],
    ["analyze", "--max-degree", "2", "x^3+y"],
    ["express", "x", "x^2/y^2"],
])
def test_input_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("PENCIL_LAB_SEED", "17")
    _, out, _ = run(capsys, "spectrum", "--json", "x/y")
    assert json.loads(out)["seed"] == 17
    _, out, _ = run(capsys, "spectrum", "--json", "--seed", "3", "x/y")
    assert json.loads(out)["seed"] == 3


def test_deterministic_json(capsys):
    argv = ["analyze", "--vars", "x,y,z", "--json", "--seed", "5", "x/(y*z)"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second


def test_corpus_run_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.jsonl"
    good.write_text(json.dumps({"name": "a", "nvars": 2, "f": "x/y", "expect": {"rho": 0}}) + "\n")
    assert run(capsys, "corpus", "run", str(good), "--seed", "7")[0] == 0
    bad = tmp_path / "bad.jsonl"
    bad.write_text(json.dumps({"name": "a", "nvars": 2, "f": "x/y", "expect": {"rho": 1}}) + "\n")
    code, out, _ = run(capsys, "corpus", "run", str(bad))
    assert code == 3
    assert "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pencil_lab", "rho", "x*y"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"
