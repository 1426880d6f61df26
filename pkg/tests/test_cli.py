import json
import subprocess
import sys

import jsonschema
import pytest

from homore import __version__
from homore.cli import main
from homore.report import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_hom_weyl_passes(capsys):
    code, out, _ = run(capsys, "verify", "--family", "weyl", "--k", "3/2", "--deg-x", "3", "--deg-y", "3",
                       "--suite", "axioms")
    assert code == 0
    assert "4096 cases" in out


def test_verify_plain_quantum_plane_fails(capsys):
    code, out, _ = run(capsys, "verify", "--family", "quantum_plane", "--q", "2", "--k", "3",
                       "--mode", "plain", "--suite", "axioms")
    assert code == 1
    first_fail = out[out.index("FAIL"):]
    assert "a=X, b=Y, c=Y" in first_fail.splitlines()[1]
    assert "lhs = 4*Y^2*X" in out and "rhs = 12*Y^2*X" in out


def test_verify_all_associative_weyl(capsys):
    code, out, _ = run(capsys, "verify", "--family", "weyl", "--k", "0", "--suite", "all")
    assert code == 0
    for suite in ("[axioms]", "[corollaries]", "[general-table]", "[reduce]", "[unitalization]"):
        assert suite in out


def test_reduce_commands(capsys):
    code, out, _ = run(capsys, "reduce", "--k", "0", "--poly", "Y^2*X")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "length: 4"
    assert lines[-2].split()[-1] == "1"
    code, out, _ = run(capsys, "reduce", "--k", "1", "--poly", "1")
    assert code == 0 and int(out.strip().splitlines()[-1].split()[-1]) <= 2
    code, _, err = run(capsys, "reduce", "--k", "0", "--poly", "0")
    assert code == 2 and "zero" in err


def test_reduce_json(capsys):
    code, out, _ = run(capsys, "reduce", "--k", "-2", "--poly", "Y*X + Y^3", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["final"] == "1" and doc["verified"]
    assert doc["length"] == len(doc["trace"]) <= 3 + 1 + 2


@pytest.mark.parametrize("argv", [
    ["verify", "--k", "0.5"],
    ["verify", "--family", "enveloping", "--k", "0"],
    ["verify", "--family", "quantum_plane", "--q", "0"],
    ["verify", "--deg-x", "0"],
    ["reduce", "--k", "1", "--poly", "X*Y"],
    ["reduce", "--k", "symbolic", "--poly", "Y"],
    ["reduce", "--k", "1"],
    ["unitalize", "--base", "Z/x"],
    ["unitalize", "--family", "enveloping", "--k", "2", "--base", "Z/6"],
    ["verify", "--family", "enveloping", "--k", "1", "--suite", "reduce"],
])
def test_invalid_input_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--family", "heisenberg"])
    assert exc.value.code == 2


def test_json_schema_and_verdicts_match_text(capsys):
    args = ["verify", "--family", "quantum_plane", "--q", "2", "--k", "3", "--mode", "plain",
            "--suite", "all", "--deg-x", "1", "--deg-y", "1", "--samples", "3"]
    code_text, text, _ = run(capsys, *args)
    code_json, out, _ = run(capsys, *args, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["version"] == __version__
    assert code_text == code_json == 1
    verdicts = [line.split()[0] for line in text.splitlines() if line.startswith("  ") and line.split()[0] in ("PASS", "FAIL")]
    assert verdicts == [s["status"].upper() for s in doc["suites"]]
    names = [s["name"].split(".")[0] for s in doc["suites"]]
    assert names == sorted(names)


def test_symbolic_verify(capsys):
    code, out, _ = run(capsys, "verify", "--family", "quantum_plane", "--k", "symbolic", "--q", "symbolic",
                       "--suite", "axioms", "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert code == 0


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"family": "enveloping", "k": "2", "deg-x": 1, "deg_y": 1, "suite": "axioms"}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["config"]["family"] == "enveloping" and doc["config"]["k"] == "2"
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--k", "5", "--format", "json")
    assert json.loads(out)["config"]["k"] == "5"


@pytest.mark.parametrize("content", ["{not json", json.dumps({"colour": 1}), json.dumps([1]),
                                     json.dumps({"k": 0.5}), json.dumps({"deg_x": "2"})])
def test_bad_config_exit_2(tmp_path, capsys, content):
    cfg = tmp_path / "bad.json"
    cfg.write_text(content)
    code, _, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 2


def test_out_path(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--deg-x", "1", "--deg-y", "1", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    jsonschema.validate(json.loads(target.read_text()), REPORT_SCHEMA)


def test_unitalize_subcommand(capsys):
    code, out, _ = run(capsys, "unitalize", "--family", "weyl", "--k", "1", "--base", "Z/6", "--samples", "5")
    assert code == 0
    assert "characteristic" in out and "[unitalization]" in out


def test_threads_env(monkeypatch, capsys):
    monkeypatch.setenv("HOMORE_THREADS", "1")
    code, _, _ = run(capsys, "verify", "--deg-x", "1", "--deg-y", "1")
    assert code == 0
    monkeypatch.setenv("HOMORE_THREADS", "zero")
    code, _, _ = run(capsys, "verify", "--deg-x", "1", "--deg-y", "1")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "homore", "reduce", "--k", "0", "--poly", "Y*X"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().endswith("length: 3")
