import json
import subprocess
import sys

import pytest

from witt_uniq import designs, reference
from witt_uniq.cli import main


def test_design_count(capsys):
    assert main(["design", "--count"]) == 0
    assert capsys.readouterr().out.strip() == "5040"
    assert main(["design", "--count", "--heuristic", "leftmost"]) == 0
    assert capsys.readouterr().out.strip() == "5040"


def test_design_enumerate(capsys):
    assert main(["design", "--enumerate"]) == 0
    out = capsys.readouterr().out
    assert out.count("v=11 k=5 b=66") == 5040


def test_design_out_and_scheme(tmp_path, capsys):
    p = tmp_path / "w11.txt"
    assert main(["design", "--out", str(p)]) == 0
    assert p.read_text() == designs.format_design(designs.construct_witt_design())
    assert main(["scheme", str(p)]) == 0
    out = capsys.readouterr().out
    assert "lambda = 1" in out and "multiplicities: [1, 10, 44, 11]" in out
    assert "angle set: 4/15, -1/10, -7/15" in out
    assert main(["scheme", str(p), "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["Q"] == reference.Q.to_strings()
    assert data["krein_nonnegative"] and data["q_polynomial"]


def test_run_stage_and_report(tmp_path, capsys):
    out = tmp_path / "out"
    assert main(["run", "--stage", "3", "--out", str(out), "--format", "json"]) == 3
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "partial"
    cert = out / "certificate.json"
    assert json.loads(cert.read_text())["stages"][2]["status"] == "pass"
    assert (out / "report.txt").read_text().startswith("witt-uniq certificate")
    assert main(["report", str(cert)]) == 3
    assert "stage 3 eigenmatrices" in capsys.readouterr().out


def test_bad_arguments():
    with pytest.raises(SystemExit):
        main(["run", "--threads", "0"])
    with pytest.raises(SystemExit):
        main(["run", "--stage", "9"])
    with pytest.raises(SystemExit):
        main(["design", "--count", "--enumerate"])


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "witt_uniq", "design", "--count"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.strip() == "5040"
