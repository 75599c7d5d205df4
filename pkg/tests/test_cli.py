"""CLI verbs, exit codes, JSON round-trips, byte-determinism."""

import json
import os
import subprocess
import sys

import pytest

from drgtrades.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_build_johnson(capsys):
    code, out = run_cli(capsys, "build", "--family", "johnson:6,3")
    assert code == 0
    assert "vertices: 20" in out and "degree 9" in out


def test_build_json_schema(capsys):
    code, out = run_cli(capsys, "build", "--family", "hamming:2,2", "--json")
    doc = json.loads(out)
    assert doc["family"] == "hamming" and doc["params"] == [2, 2]
    assert doc["vertices"] == ["00", "01", "10", "11"]
    assert all(u < v for u, v in doc["edges"])


def test_cliques_verb(capsys):
    code, out = run_cli(capsys, "cliques", "--family", "hamming:3,3")
    assert code == 0
    assert "(k,s,m) = (6,2,1)" in out and "27" in out


def test_verify_min_johnson(capsys):
    code, out = run_cli(capsys, "verify", "--family", "johnson:6,3",
                        "--bitrade", "min")
    assert code == 0
    assert "criterion a" in out and "pass" in out
    assert "(3,2,1;1,2,3)" in out
    assert "minimal: yes" in out


def test_verify_single_criterion(capsys):
    code, out = run_cli(capsys, "verify", "--family", "johnson:6,3",
                        "--bitrade", "min", "--criterion", "b")
    assert code == 0
    assert "criterion b" in out and "criterion a" not in out


def test_verify_bitrade_file_roundtrip(tmp_path, capsys):
    code, out = run_cli(capsys, "bitrade", "--family", "johnson:6,3", "--json")
    assert code == 0
    path = tmp_path / "pasch.json"
    path.write_text(out)
    code, out = run_cli(capsys, "verify", "--family", "johnson:6,3",
                        "--bitrade", str(path))
    assert code == 0 and "overall: pass" in out


def test_verify_corrupted_file_fails(tmp_path, capsys):
    code, out = run_cli(capsys, "bitrade", "--family", "johnson:6,3", "--json")
    doc = json.loads(out)
    doc["T1"] = doc["T1"][:-1]  # drop one block: every criterion breaks
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, out = run_cli(capsys, "verify", "--family", "johnson:6,3",
                        "--bitrade", str(path))
    assert code == 1
    assert "FAIL" in out


def test_verify_doob_pseudo(capsys):
    code, out = run_cli(capsys, "verify", "--family", "doob:1,1",
                        "--bitrade", "min")
    assert code == 0
    assert "eigenfunction criterion" in out and "overall: pass" in out


def test_wd_bound_grassmann(capsys):
    code, out = run_cli(capsys, "wd-bound", "--family", "grassmann:6,3,2")
    assert code == 0
    assert "w.d. bound: 30" in out


def test_wd_bound_formula_path_is_fast_for_large_q(capsys):
    # no graph construction: q = 5 would have ~6e9 vertices
    code, out = run_cli(capsys, "wd-bound", "--family", "grassmann:6,3,5")
    assert code == 0
    assert "w.d. bound: 312" in out


def test_spectrum_verb(capsys):
    code, out = run_cli(capsys, "spectrum", "--family", "johnson:6,3")
    assert code == 0
    assert "9 3 -1 -3" in out and "theta_min: -3" in out


def test_check_dr_verb(capsys):
    code, out = run_cli(capsys, "check-dr", "--family", "dual_polar_D:3,2")
    assert code == 0
    assert "(7,6,4;1,3,7)" in out and "matches closed form" in out


def test_identity_verb(capsys):
    code, out = run_cli(capsys, "identity", "--d", "4", "--q", "3")
    assert code == 0
    lines = [l for l in out.splitlines() if ":" in l]
    lhs = lines[0].split(":")[1].strip()
    rhs = lines[1].split(":")[1].strip()
    assert lhs == rhs and "equal: yes" in out


def test_unknown_family_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["build", "--family", "petersen:1"])
    assert exc.value.code == 2


def test_unknown_verb_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_cap_guard(capsys):
    code = main(["build", "--family", "hamming:8,3", "--cap", "100"])
    assert code == 1


def test_env_cap(capsys, monkeypatch):
    monkeypatch.setenv("DRG_CAP", "100")
    code = main(["build", "--family", "hamming:8,3"])
    assert code == 1
    monkeypatch.delenv("DRG_CAP")


def test_byte_identical_across_hash_seeds():
    # determinism must survive different PYTHONHASHSEED values
    cmd = [sys.executable, "-m", "drgtrades.cli", "verify",
           "--family", "grassmann:4,2,2", "--bitrade", "min", "--json"]
    outs = []
    for seed in ("0", "1"):
        env = dict(os.environ, PYTHONHASHSEED=seed,
                   PYTHONPATH="src" + os.pathsep + os.environ.get("PYTHONPATH", ""))
        res = subprocess.run(cmd, capture_output=True, cwd=os.path.dirname(
            os.path.dirname(os.path.abspath(__file__))), env=env)
        assert res.returncode == 0, res.stderr
        outs.append(res.stdout)
    assert outs[0] == outs[1]
