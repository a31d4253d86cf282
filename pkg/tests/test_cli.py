import csv
import io
import json
import subprocess
import sys

import pytest

from arlab.cli import run


def call(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sweep_example(capsys):
    code, out, _ = call(capsys, ["gcd-sweep", "--f", "T", "--g", "T+1", "--max", "24"])
    d = json.loads(out)
    assert code == 0 and d["schema"] == 1 and d["command"] == "gcd-sweep"
    assert d["summary"]["stable_divisor"] == "T^2 + T + 1" and d["summary"]["violations"] == []
    assert d["inputs"]["family"]["fs"] == ["T"] and "version" in d


def test_bounds_example(capsys):
    code, out, _ = call(capsys, ["bounds", "--theorem", "genar1", "--df", "1", "--dg", "1", "--dh1", "1", "--dh2", "1"])
    assert code == 0 and json.loads(out)["records"][0]["value"] == "44"


def test_independence_example(capsys):
    code, out, _ = call(capsys, ["independence", "--polys", "T^2", "T^3", "--mode", "plain"])
    assert code == 0 and json.loads(out)["records"][0]["certificate"] == [3, -2]


def test_parse_error_exit_1(capsys):
    code, _, err = call(capsys, ["independence", "--polys", "T^(-1)"])
    assert code == 1 and "negative exponent at offset 2" in err


def test_hypothesis_exit_2(capsys):
    code, out, _ = call(capsys, ["gcd-sweep", "--f", "T^2", "--g", "T^4", "--max", "4"])
    assert code == 2 and json.loads(out)["certificate"] == [2, -1]
    code, _, _ = call(capsys, ["torsion-count", "--curve", "X1-X2"])
    assert code == 2
    code, _, err = call(capsys, ["mason", "--A", "T", "--B", "1", "--C", "T"])
    assert code == 2 and "sum mismatch" in err


def test_injected_bound_exit_3(capsys):
    code, out, _ = call(capsys, ["gcd-sweep", "--f", "T", "--g", "T+1", "--max", "6", "--inject-bound", "1"])
    assert code == 3 and json.loads(out)["summary"]["violations"]
    code, _, _ = call(capsys, ["multivar-check", "--h1", "T-1", "--h2", "T-1", "--F", "X1*X2", "--G",
                               "X1*X2+1", "--n", "3", "--m", "6", "--inject-bound", "2"])
    assert code == 3


def test_csv_and_output_file(tmp_path, capsys):
    path = tmp_path / "r.csv"
    assert run(["gcd-sweep", "--f", "T", "--g", "T+1", "--max", "4", "--format", "csv", "--output", str(path)]) == 0
    rows = list(csv.DictReader(io.StringIO(path.read_text())))
    assert len(rows) == 16 and rows[0]["exps"] == "[1, 1]"


@pytest.mark.parametrize("argv", [
    ["genar1", "--h1", "T-1", "--h2", "T+1", "--f", "T", "--g", "T+1", "--n", "3", "--m", "3", "--precheck"],
    ["sunit-gcd", "--fs", "T", "--phis", "2-T", "--gs", "T+1", "--psis", "3*T-1", "--exps", "1", "1", "1", "1"],
    ["torsion-count", "--curve", "X1+X2-1", "--max-order", "12", "--certify"],
    ["torsion-zeros", "--f", "T", "--g", "T+1", "--window", "6"],
    ["abc-check", "--fs", "T", "--gs", "T+1", "--ns", "2", "--ms", "1"],
    ["mason", "--A", "T^2", "--B", "1-T^2", "--C", "1"],
    ["kronecker", "--poly", "X1*X2", "--d", "2"],
    ["specialize", "--polys", "X1", "X2", "--kronecker", "2", "--budget", "10"],
    ["multivar-check", "--h1", "T-1", "--h2", "T-1", "--F", "X1", "--G", "X2", "--n", "2", "--m", "2"],
    ["annihilate", "--polys", "X1", "X1^2"],
    ["coset-check", "--polys", "T", "T+1", "--n-cap", "6", "--b-cap", "4"],
    ["density", "--f", "T", "--g", "T+1", "--max", "8"],
])
def test_subcommands_succeed(capsys, argv):
    code, out, err = call(capsys, argv)
    assert code == 0, err
    d = json.loads(out)
    assert d["command"] == argv[0] and d["summary"]["violations"] == []


def test_specialize_budget_exit_2(capsys):
    code, _, _ = call(capsys, ["specialize", "--polys", "X1", "X2", "--budget", "5"])
    assert code == 2


def test_console_script_and_env(tmp_path):
    env = {"ARLAB_WORKERS": "2", "PATH": __import__("os").environ["PATH"]}
    outs = []
    for _ in range(2):
        p = subprocess.run([sys.executable, "-m", "arlab.cli", "gcd-sweep", "--f", "T", "--g", "T+1", "--max", "8"],
                           capture_output=True, env=env, check=True)
        outs.append(p.stdout)
    assert outs[0] == outs[1]
