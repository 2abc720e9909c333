import json
import subprocess
import sys

import pytest

from uvmac import displays
from uvmac.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_P_text(capsys):
    code, out, _ = run(capsys, "eval-P", "--lambda", "2,1", "--n", "2")
    assert code == 0
    assert out.strip() == displays.p21_corrected().render()


def test_eval_P_spec(capsys):
    code, out, _ = run(capsys, "eval-P", "--lambda", "2,1", "--n", "2", "--spec", "u=0,v=0")
    assert code == 0
    assert out.split("\n")[:2] == ["x1^2 x2^1 : 1", "x1^1 x2^2 : 1"]


def test_eval_P_spec_to_hall_littlewood(capsys):
    code, out, _ = run(capsys, "eval-P", "--lambda", "2", "--n", "2", "--spec", "u=0,v=0", "--spec", "q=0")
    assert code == 0
    assert "x1^1 x2^1 : 1 - t" in out


def test_eval_f_json(capsys):
    code, out, _ = run(capsys, "eval-f", "--mu", "2,1", "--n", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "f" and doc["mu"] == [2, 1] and doc["nvars"] == 2
    assert doc["terms"] == displays.f21().to_json()


def test_eval_f_no_simplify(capsys):
    a = run(capsys, "eval-f", "--mu", "1,2")[1]
    b = run(capsys, "eval-f", "--mu", "1,2", "--no-simplify")[1]
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ["eval-P", "--lambda", "2,x", "--n", "2"],
        ["eval-P", "--lambda", "2,1", "--bogus"],
        ["eval-P", "--lambda", "2,1", "--spec", "w=1"],
        ["eval-f", "--mu", "2,1", "--n", "0"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [["eval-P", "--lambda", "1,2", "--n", "2"], ["eval-f", "--mu", "2,1", "--n", "3"], ["oracle", "bp", "--lambda", "1,1,1", "--n", "2"]],
)
def test_precondition_errors_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_oracles(capsys):
    code, out, _ = run(capsys, "oracle", "hall-littlewood", "--lambda", "2,1", "--n", "2")
    assert code == 0 and out.strip() == "x1^2 x2^1 : 1\nx1^1 x2^2 : 1"
    outs = {route: run(capsys, "oracle", "bp", "--lambda", "2,1", "--n", "2", "--route", route)[1] for route in ("mpa", "sym", "lattice")}
    assert len(set(outs.values())) == 1
    code, out, _ = run(capsys, "oracle", "macdonald", "--lambda", "2", "--n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["kind"] == "macdonald"


def test_checks(capsys):
    assert run(capsys, "check", "hecke", "--n", "3", "--degree", "2", "--trials", "5", "--seed", "7")[0] == 0
    assert run(capsys, "check", "rll", "--rank", "2", "--cutoff", "3")[0] == 0
    assert run(capsys, "check", "zf", "--rank", "1")[0] == 0
    assert run(capsys, "check", "amazing", "--rank", "2", "--mmax", "2")[0] == 0
    assert run(capsys, "check", "exchange", "--lambda", "2,1", "--n", "3")[0] == 0
    assert run(capsys, "check", "reduction", "--which", "bp", "--lambda", "2,1", "--n", "2")[0] == 0
    assert run(capsys, "check", "reduction", "--lambda", "2,1", "--n", "3")[0] == 0
    assert run(capsys, "check", "colour", "--lambda", "3,1", "--n", "2")[0] == 0


def test_check_all_subset(capsys):
    code, out, _ = run(capsys, "check", "all", "--scale", "desk", "--criteria", "1,5,7")
    assert code == 0
    assert [line.split()[2] for line in out.splitlines()] == ["PASS"] * 3


def test_check_all_reports_failure_with_exit_1(capsys):
    code, out, _ = run(capsys, "check", "all", "--criteria", "2")
    assert code == 1
    assert "FAIL" in out and "P_21 (as transcribed)" in out


def test_lattice_json(capsys):
    code, out, _ = run(capsys, "lattice", "enumerate", "--lambda", "2,1", "--n", "2", "--colored", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["colored"] is True and len(doc["configurations"]) > 0


def test_lattice_group_by_profile(capsys):
    code, out, _ = run(
        capsys, "lattice", "enumerate", "--lambda", "4,3,3,1", "--n", "4", "--colored", "--group-by-profile", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    from uvmac.lattice import enumerate_colored

    assert sum(len(p["colored"]) for p in doc["profiles"]) == sum(1 for _ in enumerate_colored((4, 3, 3, 1), 4))
    assert 6 in {len(p["colored"]) for p in doc["profiles"]}


def test_lattice_text(capsys):
    code, out, _ = run(capsys, "lattice", "enumerate", "--lambda", "1", "--n", "1")
    assert code == 0 and out.rstrip().endswith("# 1 configurations")


def test_golden_compare(capsys):
    code, out, _ = run(capsys, "golden")
    assert code == 0 and "[PASS]" in out


def test_deterministic_output_across_processes():
    argv = [sys.executable, "-m", "uvmac", "eval-P", "--lambda", "2,1", "--n", "3", "--format", "json"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv + ["--route", "product"], capture_output=True, check=True).stdout
    c = subprocess.run([sys.executable, "-m", "uvmac", "--jobs", "2"] + argv[3:], capture_output=True, check=True).stdout
    assert a == b == c
