"""End-to-end checks of the vk command surface."""

import json
import subprocess
import sys

import pytest

from vknot import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_inv_virtual_trefoil(capsys):
    code, out, _ = run(capsys, "inv", "--kind", "virtual", "O1+O2+U1+U2+")
    assert code == 0
    assert "W = t^-1 - 2 + t" in out
    assert "writhe = 2" in out
    assert "L = 2*[O1|U1] - 2*[|]" in out


def test_inv_flat_link(capsys):
    code, out, _ = run(capsys, "inv", "--kind", "flat-link", "O1|U1")
    assert code == 0
    assert "lk = 1" in out


def test_gen_lattice_then_inv_flat(capsys):
    code, out, _ = run(capsys, "gen", "lattice", "1", "1")
    assert code == 0
    assert out.strip() == "O1O2U1U2"
    code, out, _ = run(capsys, "gen", "lattice", "2", "1")
    lattice_code = out.strip()
    code, out, _ = run(capsys, "inv", "--kind", "flat", lattice_code)
    assert code == 0
    assert "flat_writhe = -1" in out


def test_gen_random_is_deterministic(capsys):
    _, first, _ = run(capsys, "gen", "random", "4", "42")
    _, second, _ = run(capsys, "gen", "random", "4", "42")
    assert first == second
    _, third, _ = run(capsys, "gen", "random", "4", "43")
    assert third != first


def test_gen_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "gen", "lattice", "0", "1")
    assert code == 2
    assert "error:" in err


def test_compare_equal_with_witness(capsys):
    code, out, _ = run(capsys, "compare", "--kind", "virtual", "O1+U1+", "")
    assert code == 0
    assert out.splitlines()[0] == "Equal"
    assert "witness:" in out


def test_compare_distinct(capsys):
    code, out, _ = run(capsys, "compare", "--kind", "virtual",
                       "O1+O2+U1+U2+", "")
    assert code == 1
    assert out.splitlines()[0] == "Distinct"


def test_compare_unknown_when_starved(capsys):
    code, out, _ = run(capsys, "compare", "--budget-nodes", "0",
                       "--budget-extra", "0", "--kind", "virtual",
                       "O1+O2+U1+U2+", "O1+U2+O3+U1+O2+U3+O4+O5+U4+U5+")
    assert code == 3
    assert out.splitlines()[0] == "Unknown"


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "inv", "--kind", "virtual", "O1+O2+U1+")
    assert code == 2
    assert "error:" in err and "chord 2" in err
    code, _, err = run(capsys, "inv", "--kind", "flat", "O1x1")
    assert code == 2
    assert "position" in err


def test_smooth(capsys):
    code, out, _ = run(capsys, "smooth", "--chord", "1", "--resolution", "1",
                       "O1+O2+U1+U2+")
    assert code == 0
    assert out.strip() == "O1+|U1+"
    code, _, err = run(capsys, "smooth", "--chord", "5", "O1+O2+U1+U2+")
    assert code == 2
    assert "chord" in err


def test_project(capsys):
    code, out, _ = run(capsys, "project", "--n", "0",
                       "O1+O2+U1+O3+U2+O4+U3+U4+")
    assert code == 0
    assert out.strip() == "O1+O2+U1+U2+"


def test_simplify(capsys):
    code, out, _ = run(capsys, "simplify", "--kind", "virtual",
                       "O1+U1+O2+O3-U3-U2+")
    assert code == 0
    assert "chords: 3 -> 0" in out


def test_check_axioms_clean(capsys):
    code, out, _ = run(capsys, "check-axioms", "--trials", "60", "--seed", "7")
    assert code == 0
    assert "total violations = 0" in out
    assert "chord-index-axioms" in out and "move-invariance" in out


def test_check_axioms_sabotage_trips(capsys):
    code, out, _ = run(capsys, "check-axioms", "--trials", "60", "--seed", "7",
                       "--sabotage", "sign-flip")
    assert code == 4
    assert "total violations = 0" not in out


def test_census_command(capsys, tmp_path):
    out_path = tmp_path / "census.jsonl"
    code, out, _ = run(capsys, "census", "--max-chords", "1",
                       "--out", str(out_path))
    assert code == 0
    assert "wrote 3 records" in out
    lines = out_path.read_text().splitlines()
    assert len(lines) == 3
    assert all(json.loads(line)["W"] == "0" for line in lines)
    code, _, err = run(capsys, "census", "--max-chords", "12",
                       "--out", str(out_path))
    assert code == 2


def test_json_mode(capsys):
    code, out, _ = run(capsys, "inv", "--json", "--kind", "virtual",
                       "O1+O2+U1+U2+")
    assert code == 0
    rec = json.loads(out)
    assert rec["W"] == "t^-1 - 2 + t"
    assert rec["chords"] == 2
    code, out, _ = run(capsys, "compare", "--json", "--kind", "virtual",
                       "O1+U1+", "")
    assert json.loads(out)["status"] == "Equal"
    code, out, _ = run(capsys, "gen", "--json", "lattice", "1", "1")
    assert json.loads(out)["code"] == "O1O2U1U2"


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("VK_BUDGET_NODES", "0")
    code, out, _ = run(capsys, "compare", "--budget-extra", "0",
                       "--kind", "virtual",
                       "O1+O2+U1+U2+", "O1+U2+O3+U1+O2+U3+O4+O5+U4+U5+")
    assert code == 3  # starved by the environment, not the flags
    monkeypatch.delenv("VK_BUDGET_NODES")


def test_upper_bound_annotation(capsys):
    code, out, _ = run(capsys, "inv", "--budget-nodes", "0",
                       "--budget-extra", "0", "--kind", "virtual",
                       "O1+O2+U3-O4-O5+U1+O3-U5+U2+U4-")
    assert code == 0
    assert "(upper-bound form)" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "vknot.cli", "gen", "lattice", "1", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "O1O2U1U2"
