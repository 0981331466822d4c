import json
import subprocess
import sys

import pytest

from boundary_residue.cli import main


def run(*args):
    return subprocess.run([sys.executable, "-m", "boundary_residue", *args], capture_output=True, text=True)


def test_compute_case_2(capsys):
    assert main(["compute", "--case", "2", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "printed: (29/64)h1^2 - (3/8)h2 [x pi*Omega3]" in out
    assert "MISMATCH" in out and "note:" in out


def test_compute_case_1(capsys):
    assert main(["compute", "--case", "1"]) == 0
    out = capsys.readouterr().out
    assert "engine : 0 [x pi*Omega3]  MATCH" in out


def test_compute_all_json(tmp_path):
    target = tmp_path / "audit.json"
    assert main(["compute", "--all", "--format", "json", "--out", str(target)]) == 0
    d = json.loads(target.read_text())
    assert len(d["cases"]) == 15 and d["totals"] and d["geometric"]


def test_latex_output(capsys):
    assert main(["compute", "--format", "latex"]) == 0
    assert capsys.readouterr().out.startswith(r"\documentclass")


@pytest.mark.parametrize("argv", [
    ["compute", "--case", "16"],
    ["compute", "--case", "2", "--all"],
    ["compute", "--format", "pdf"],
    ["frobnicate"],
    [],
    ["verify", "--oracle-trials", "0"],
])
def test_usage_errors_exit_1(argv, capsys):
    assert main(argv) == 1
    assert capsys.readouterr().err


def test_corrupted_constants_file(tmp_path, capsys):
    bad = tmp_path / "constants.txt"
    bad.write_text('case=3 monomial=SB re=-1/4 im=0 pi=3 source="ok"\ncase=8 monomial=SB re=three im=0 pi=3 source="x"\n')
    assert main(["compute", "--case", "3", "--constants", str(bad)]) == 1
    assert f"{bad}:2:23:" in capsys.readouterr().err
    assert main(["verify", "--constants", str(bad)]) == 1


def test_missing_constants_file(tmp_path, capsys):
    assert main(["compute", "--constants", str(tmp_path / "nope.txt")]) == 1


def test_custom_constants_are_used(tmp_path, capsys):
    path = tmp_path / "c.txt"
    path.write_text('case=3 monomial=SB re=1 im=0 pi=3 source="test value"\n')
    assert main(["compute", "--case", "3", "--constants", str(path)]) == 0
    out = capsys.readouterr().out
    assert "(1/2)s_bd" in out and "test value" in out


def test_verify_is_seeded_and_repeatable():
    a = run("verify", "--oracle-trials", "40", "--seed", "7", "--format", "json")
    b = run("verify", "--oracle-trials", "40", "--seed", "7", "--format", "json")
    assert a.returncode == 0 and a.stdout == b.stdout
    d = json.loads(a.stdout)
    assert d["environment"]["seed"] == 7 and d["flags"]["invariants_ok"]
    names = [i["name"] for i in d["invariants"]]
    assert "case 9 = case 10" in names and "sigma(p o q) = 1 through order -3" in names
    assert any(c["label"].startswith("published per-case re-sum") for c in d["comparisons"])
