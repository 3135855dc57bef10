import json

import pytest

from siltlab import io as fio
from siltlab.algebra import linear_a2
from siltlab.cli import main

XPQ = {"algebra": "a2.json", "terms": {"-1": {"projective": ["v0"]}, "0": {"projective": ["v-1"]}},
       "differentials": {"-1": {"vertexMaps": {"v-1": [], "v0": [["1"]]}}}}
XPQ_Q = {"algebra": "a2.json", "terms": {"-1": {"projective": ["v0"]}, "0": {"projective": ["v-1", "v-1"]}},
         "differentials": {"-1": {"vertexMaps": {"v-1": [], "v0": [["1"], ["0"]]}}}}


@pytest.fixture()
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    fio.write_json("a2.json", fio.algebra_doc(linear_a2()))
    fio.write_json("xpq.json", XPQ)
    fio.write_json("t.json", XPQ_Q)
    fio.write_json("s.json", {"algebra": "a2.json", "dims": {"v-1": 1, "v0": 0}})
    fio.write_json("p.json", {"algebra": "a2.json", "projective": ["v0"]})
    return tmp_path


def run(capsys, *argv):
    code = main([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_algebra_info(workdir, capsys):
    code, out = run(capsys, "algebra", "info", "--algebra", "a2.json")
    assert code == 0 and out["schemaVersion"] == 1
    assert out["dimension"] == 3 and "timingMs" not in out


def test_module_ext(workdir, capsys):
    code, out = run(capsys, "module", "ext", "--source", "s.json", "--target", "p.json", "-j", "1")
    assert code == 0 and out["dim"] == 1


def test_silting_exit_codes(workdir, capsys):
    code, out = run(capsys, "silting", "check", "--complex", "t.json")
    assert code == 0 and out["verdict"] is True and out["window"] == [-1, 0]
    code, out = run(capsys, "silting", "check", "--complex", "xpq.json")
    assert code == 1 and out["verdict"] is False


def test_enumerate(workdir, capsys):
    code, out = run(capsys, "silting", "enumerate2", "--algebra", "a2.json")
    assert code == 0 and len(out["classes"]) == 5


def test_bridge_build_and_correspondence(workdir, capsys):
    code, out = run(capsys, "bridge", "build", "--algebra", "a2.json", "-n", "2", "--out", "b2.json")
    assert code == 0 and out["dimension"] == 9
    assert (workdir / "b2.sidecar.json").exists()
    code, out = run(capsys, "bridge", "to-tilting", "--complex", "xpq.json", "-n", "2")
    assert code == 1 and out["error"] == "NotNSilting"
    code, out = run(capsys, "bridge", "to-tilting", "--complex", "t.json", "-n", "2", "--out", "tilt.json")
    assert code == 0
    code, out = run(capsys, "bridge", "to-silting", "--module", "tilt.json")
    assert code == 0


def test_input_errors(workdir, capsys):
    (workdir / "broken.json").write_text("{")
    code, out = run(capsys, "silting", "check", "--complex", "broken.json")
    assert code == 2 and out["error"] == "MalformedInput"
    code, out = run(capsys, "silting", "check", "--complex", "missing.json")
    assert code == 2


def test_unknown_flag(workdir):
    with pytest.raises(SystemExit) as exc:
        main(["algebra", "info", "--algebra", "a2.json", "--bogus"])
    assert exc.value.code == 2


def test_timing_flag(workdir, capsys):
    code, out = run(capsys, "algebra", "info", "--algebra", "a2.json", "--timing")
    assert "timingMs" in out


def test_deterministic_suite_output(capsys):
    assert main(["suite", "ar-quiver", "--format", "json"]) == 0
    first = capsys.readouterr().out
    assert main(["suite", "ar-quiver", "--format", "json"]) == 0
    assert capsys.readouterr().out == first


def test_text_output(workdir, capsys):
    assert main(["complex", "check", "--complex", "xpq.json"]) == 0
    assert capsys.readouterr().out.strip()
