import io
import json
import subprocess
import sys

import pytest

from z4cosets.cli import main, parse_weights, simulate
from z4cosets.codes import Code, pentacode_direct


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_and_analyze_round_trip(capsys, tmp_path, monkeypatch):
    code, out, _ = run(capsys, "build", "pentacode")
    assert code == 0
    assert Code.deserialize(out) == pentacode_direct()
    path = tmp_path / "p.code"
    path.write_text(out)
    code, report, _ = run(capsys, "analyze", str(path), "--format", "json")
    data = json.loads(report)
    assert code == 0
    assert (data["n"], data["M"], data["min_distance"]) == (5, 40, 4)
    assert data["gray_parameters"] == [10, 40, 4]
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    code, report2, _ = run(capsys, "analyze", "--format", "json")
    assert json.loads(report2) == data


def test_output_file(capsys, tmp_path):
    target = tmp_path / "h.code"
    assert main(["build", "heptacode", "-o", str(target)]) == 0
    assert Code.deserialize(target.read_text()).parameters() == (7, 56, 6)


def test_decode(capsys):
    code, out, _ = run(capsys, "decode", "03210")
    assert code == 0
    assert json.loads(out) == {"status": "corrected", "message": [0, 0, 0, 0], "codeword": "33210"}
    code, out, _ = run(capsys, "decode", "13210")
    assert json.loads(out)["status"] == "detected"


def test_verify_decoder(capsys):
    code, out, _ = run(capsys, "verify-decoder")
    assert code == 0 and "1800" in out


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "spectrum")
    rows = [line for line in out.splitlines() if line.strip()]
    assert code == 0 and len(rows) >= 20
    code, out, _ = run(capsys, "tables", "representations")
    assert "f_1,1 = (3,1,1,0,0)" in out


def test_search_footers(capsys):
    code, out, _ = run(capsys, "search", "subgroups")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 156
    assert json.loads(lines[-1]) == {"summary": "155 subgroups", "count": 155}
    code, out, _ = run(capsys, "search", "pentacode-scan")
    assert json.loads(out.strip().splitlines()[-1])["summary"] == "2 subgroups, 4 cosets"


def test_search_parameter_scan_and_budget(capsys):
    code, out, _ = run(capsys, "search", "parameter-scan", "--n", "3", "--min-d", "4")
    assert code == 0
    params = {tuple(json.loads(l)["params"]) for l in out.strip().splitlines()[:-1]}
    assert (6, 4, 4) in params
    code, _, _ = run(capsys, "search", "parameter-scan", "--n", "5", "--max-subgroups", "1")
    assert code == 3


def test_simulate(capsys):
    code, out, _ = run(capsys, "simulate", "--trials", "300", "--weights", "0:1,1:2,2:1", "--seed", "3")
    stats = json.loads(out)
    assert code == 0 and stats["trials"] == 300 and stats["miscorrected"] == 0
    assert stats["decoded"] + stats["detected"] == 300
    assert simulate(50, {1: 1.0}, seed=1) == simulate(50, {1: 1.0}, seed=1)
    assert parse_weights("0:1,1:1") == {0: 1.0, 1: 1.0}


def test_usage_errors(capsys):
    assert main(["decode", "0321"]) == 1
    assert main(["build", "nonsense"]) == 1
    assert main(["simulate", "--weights", "x"]) == 1
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 1


def test_analyze_malformed(capsys, tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("not a code\n")
    assert main(["analyze", str(bad)]) == 1
    assert main(["analyze", str(tmp_path / "missing")]) == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "z4cosets", "decode", "33210"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "ok"
