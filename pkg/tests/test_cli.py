import io
import json
import subprocess
import sys

import pytest

from crystaldeg.cli import main

FIXTURE = __import__("conftest").FIXTURES / "figure1_x22.json"


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_correspond_2_2():
    code, text = run("correspond", "--shape", "2,2", "--n", "4")
    assert code == 0
    assert "identified: 2,2\n" in text
    assert "ax4: pass" in text


def test_correspond_parity():
    code, text = run("correspond", "--shape", "3,2,2,1", "--n", "4", "--mode", "parity")
    assert code == 0 and "identified: 3,1\n" in text


def test_correspond_empty_space():
    code, text = run("correspond", "--shape", "2,1", "--n", "4")
    assert code == 1 and "identified: none" in text


def test_correspond_general():
    code, text = run("correspond", "--shape", "4", "--n", "2")
    assert code == 1 and "no induced graph" in text


def test_verify_deg_single_vertex():
    assert run("verify", "deg", "--shape", "1")[0] == 0


def test_verify_regular():
    code, text = run("verify", "regular", "--shape", "2,2", "--n", "4")
    assert code == 0 and text.count(": pass") == 6


def test_verify_regular_from_file(tmp_path):
    assert run("verify", "regular", "--input", str(FIXTURE))[0] == 0
    doc = json.loads(FIXTURE.read_text())
    # drop the color-1 edge 2,3/1,1 -> 2,3/1,2
    rows = {v["id"]: v["tableau"] for v in doc["vertices"]}
    doc["edges"] = [e for e in doc["edges"]
                    if (rows[e["source"]], rows[e["target"]]) != ([[1, 1], [2, 3]], [[1, 2], [2, 3]])]
    assert len(doc["edges"]) == 29
    path = tmp_path / "mutant.json"
    path.write_text(json.dumps(doc))
    code, text = run("verify", "regular", "--input", str(path))
    assert code == 1 and "FAIL" in text and "at vertex" in text


def test_verify_deg_from_file(tmp_path):
    path = tmp_path / "g.json"
    assert run("deg", "--shape", "3,2", "--output", str(path))[0] == 0
    assert run("verify", "deg", "--input", str(path))[0] == 0
    doc = json.loads(path.read_text())
    doc["edges"].pop(0)
    path.write_text(json.dumps(doc))
    code, text = run("verify", "deg", "--input", str(path))
    assert code == 1 and "ax1: FAIL" in text


def test_schema_error_exit(tmp_path, capsys):
    path = tmp_path / "bad.json"
    doc = json.loads(FIXTURE.read_text())
    doc["edges"][0]["colors"] = [0]
    path.write_text(json.dumps(doc))
    assert run("verify", "regular", "--input", str(path))[0] == 2
    assert "/edges/0/colors/0" in capsys.readouterr().err


def test_wrong_document_kind(tmp_path):
    path = tmp_path / "g.json"
    run("deg", "--shape", "2,1", "--output", str(path))
    assert run("verify", "regular", "--input", str(path))[0] == 2


def test_usage_errors(capsys):
    assert run()[0] == 2
    assert run("crystal", "--shape", "9,x", "--n", "2")[0] == 2
    assert run("crystal", "--shape", "1,2", "--n", "2")[0] == 2
    assert run("crystal", "--shape", "1,1,1", "--n", "2")[0] == 2
    assert run("verify", "regular", "--shape", "2")[0] == 2
    assert run("verify", "regular", "--shape", "2", "--n", "2", "--input", str(FIXTURE))[0] == 2
    assert run("verify", "deg")[0] == 2
    assert run("sweep", "--max-n", "0")[0] == 2
    assert "usage:" in capsys.readouterr().err


def test_missing_input_file(tmp_path):
    assert run("verify", "deg", "--input", str(tmp_path / "nope.json"))[0] == 2


def test_crystal_json_and_dot():
    code, text = run("crystal", "--shape", "2,2", "--n", "4")
    assert code == 0 and json.loads(text)["kind"] == "colored_digraph"
    code, text = run("crystal", "--shape", "2,2", "--n", "4", "--format", "dot")
    assert code == 0 and text.startswith("digraph G {") and text.count("->") == 30


def test_zero_weight():
    code, text = run("zero-weight", "--shape", "2,2", "--n", "4")
    assert code == 0
    assert text == "3,4/1,2  +-+\n2,4/1,3  -+-\n"
    code, text = run("zero-weight", "--shape", "4", "--n", "2", "--general")
    assert code == 0 and text.startswith("warning:") and "1,1,2,2  eps=(2)" in text


def test_character():
    code, text = run("character", "--shape", "2,1", "--n", "3")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 7
    assert "1,1,1\t2" in lines


def test_sweep_small():
    code, text = run("sweep", "--max-n", "4")
    assert code == 0
    assert text.splitlines()[-1] == "11 shapes, all checks passed"


def test_sweep_parallel_bytes(monkeypatch):
    serial = run("sweep", "--max-n", "4")[1]
    assert run("sweep", "--max-n", "4", "--parallel", "2")[1] == serial
    monkeypatch.setenv("CRYSTAL_DEG_THREADS", "3")
    assert run("sweep", "--max-n", "4")[1] == serial


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "crystaldeg", "correspond", "--shape", "2,2", "--n", "4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "identified: 2,2" in proc.stdout


def test_sweep_six():
    code, text = run("sweep", "--max-n", "6")
    assert code == 0
    lines = text.splitlines()
    assert lines[-1] == "29 shapes, all checks passed"
    assert sum(1 for line in lines if line.lstrip().startswith("6 ")) == 11
