import json
import subprocess
import sys

import pytest

from torus_garside.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_present_g12(capsys):
    code, out, _ = run(capsys, "present", "--n", "3", "--m", "4", "--variant", "practical")
    assert code == 0
    assert out.splitlines() == ["r1 r3 r1 = r2 r3", "r1 r3 r2 = r3^2"]


def test_left_lcm_of_atoms(capsys):
    code, out, _ = run(capsys, "lcm", "--n", "3", "--m", "5", "--side", "left", "r1", "r2", "r3")
    assert (code, out.strip()) == (0, "r2 r3^2")
    code, out, _ = run(capsys, "lcm", "--n", "3", "--m", "5", "r1", "r2", "r3")
    assert out.strip() == "r3^4"


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--m", "5", "--checks", "all")
    assert code == 0
    assert all(line.endswith("pass") for line in out.splitlines())


def test_json_outputs_parse(capsys):
    cases = [
        ("params", "--n", "3", "--m", "5"),
        ("present", "--n", "3", "--m", "5", "--variant", "r2"),
        ("equal", "--n", "3", "--m", "5", "r1 r3 r1", "r2 r3^2"),
        ("divides", "--n", "3", "--m", "5", "r2", "r1 r3 r1"),
        ("gcd", "--n", "3", "--m", "5", "r1 r3 r1", "r2 r3 r2"),
        ("nf", "--n", "3", "--m", "5", "r1 r3 r1 r2"),
        ("simples", "--n", "2", "--m", "3"),
        ("cube-check", "--n", "3", "--m", "5", "--table", "eta"),
        ("oracle", "--n", "2", "--m", "3", "--max-lambda", "7", "--samples", "500"),
        ("verify", "--n", "2", "--m", "5", "--checks", "cube,lcm"),
        ("dihedral", "present", "--n", "2"),
    ]
    for argv in cases:
        code, out, _ = run(capsys, *argv, "--json")
        assert code == 0, argv
        json.loads(out)


def test_params_table(capsys):
    code, out, _ = run(capsys, "params", "--n", "3", "--m", "5", "--json")
    data = json.loads(out)
    assert data["k"] == [2, 1, 3] and data["D"] == [1, 0, 1] and data["B"]["1,2"] == 1


def test_swap_flag(capsys):
    code, _, err = run(capsys, "params", "--n", "5", "--m", "3")
    assert code == 2 and "swap" in err
    code, out, _ = run(capsys, "params", "--n", "5", "--m", "3", "--swap")
    assert code == 0 and out.startswith("n=3 m=5")


@pytest.mark.parametrize(
    "argv",
    [
        ["params", "--n", "4", "--m", "6"],
        ["equal", "--n", "3", "--m", "5", "r1 r7", "r1"],
        ["equal", "--n", "3", "--m", "5", "r1^0", "r1"],
        ["frobnicate"],
        ["lcm", "--n", "3"],
        ["verify", "--n", "3", "--m", "5", "--checks", "nonsense"],
        ["dihedral", "verify", "--n", "0"],
        ["dihedral", "verify"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_failure_exit_code(capsys):
    code, out, _ = run(capsys, "cube-check", "--n", "3", "--m", "5", "--table", "practical", "--json")
    assert code == 1
    assert json.loads(out)["failures"]


def test_divides_and_equal(capsys):
    assert run(capsys, "equal", "--n", "3", "--m", "4", "r1 r3 r1", "r2 r3")[1].strip() == "true"
    out = run(capsys, "divides", "--n", "3", "--m", "5", "r2", "r1 r3 r1")[1]
    assert out.strip() == "true (quotient r3^2)"
    out = run(capsys, "divides", "--n", "3", "--m", "5", "--side", "right", "r3", "r1")[1]
    assert out.strip() == "false"


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--n", "2", "--m", "3", "--dot")
    assert code == 0 and out.startswith('digraph "left_divisibility"')
    assert 's0 [label="1"]' in out and 's7 [label="r2^3"]' in out
    target = tmp_path / "lat.json"
    run(capsys, "export", "--n", "3", "--m", "5", "--json", "--side", "right", "-o", str(target))
    data = json.loads(target.read_text())
    assert len(data["nodes"]) == 30 and data["side"] == "right"


def test_dihedral_commands(capsys):
    code, out, _ = run(capsys, "dihedral", "present", "--preset", "g13")
    assert out.splitlines()[1] == "r2 r3 r1 = r3^2"
    code, out, _ = run(capsys, "dihedral", "verify", "--n", "1", "--no-oracle")
    assert code == 0
    code, out, _ = run(capsys, "dihedral", "export", "--n", "1")
    assert out.count("label=") == 12


def test_sweep_small(capsys):
    code, out, _ = run(capsys, "verify", "--sweep", "--n-max", "3", "--m-max", "5",
                       "--checks", "cube,defects", "--json")
    data = json.loads(out)
    assert code == 0 and [(r["n"], r["m"]) for r in data["pairs"]] == [(2, 3), (2, 5), (3, 4), (3, 5)]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "torus_garside", "lcm", "--n", "3", "--m", "5", "--side", "left",
         "r1", "r2", "r3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0 and res.stdout.strip() == "r2 r3^2"
