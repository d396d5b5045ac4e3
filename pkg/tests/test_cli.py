from __future__ import annotations

import json
import subprocess
import sys

import jsonschema
import pytest

from slicegroupoids.cli import main
from slicegroupoids.emit import CHECK_REPORT_SCHEMA, EXPLORE_REPORT_SCHEMA, KERNEL_REPORT_SCHEMA

from conftest import FIXTURES

Z4 = str(FIXTURES / "z4_mod2.gd")
PAIR = str(FIXTURES / "pair2.gd")
BAD = str(FIXTURES / "bad_assoc.gd")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_mod2(capsys):
    code, out, _ = run(capsys, "check", Z4)
    assert code == 0
    assert "kernel at o: size 2 [e, a2]; partition 2 classes of sizes 2x2" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", Z4, "--format", "json")
    r = json.loads(out)
    jsonschema.validate(r, CHECK_REPORT_SCHEMA)
    assert r["passed"] and code == 0
    functor = next(s for s in r["suites"] if s["suite"] == "functor")
    k = functor["data"]["kernel_reports"]["o"]
    assert k["kernel_size"] == 2 and k["class_sizes"] == [2, 2]


def test_slice_dot(capsys):
    code, out, _ = run(capsys, "slice", PAIR, "-g", "P", "-x", "O1", "--format", "dot")
    assert code == 0
    lines = out.splitlines()
    assert sum(1 for ln in lines if "->" in ln) == 4
    assert sum(1 for ln in lines if "->" not in ln and "[label=" in ln) == 2


def test_validate_bad_assoc(capsys):
    code, _, err = run(capsys, "validate", BAD)
    assert code == 1
    assert "AssociativityViolation" in err
    assert f"{BAD}:10:11:" in err


def test_kernel_text_and_json(capsys):
    code, out, _ = run(capsys, "kernel", Z4, "-f", "mod2", "-x", "o")
    assert code == 0 and "kernel (2): e, a2" in out and "e, a2  ->  e" in out
    code, out, _ = run(capsys, "kernel", Z4, "-f", "mod2", "-x", "o", "--format", "json")
    jsonschema.validate(json.loads(out), KERNEL_REPORT_SCHEMA)


def test_action_and_coset(capsys):
    code, out, _ = run(capsys, "action", PAIR, "-g", "P", "--format", "json")
    assert code == 0 and len(json.loads(out)["morphisms"]) == 8
    code, out, _ = run(capsys, "coset", Z4, "-g", "Z4", "-s", "Even", "--format", "json")
    r = json.loads(out)
    assert (len(r["objects"]), len(r["morphisms"])) == (2, 8)
    assert r["classes"] == {"[e]": ["e", "a2"], "[a]": ["a", "a3"]}
    code, out, _ = run(capsys, "coset", PAIR, "-g", "P", "-s", "whole")
    assert code == 0 and out.startswith("(whole:P)//P: 2 objects, 4 morphisms")


def test_sliced_coset(capsys):
    code, out, _ = run(capsys, "sliced-coset", Z4, "-g", "Z4", "-s", "Even", "-x", "o", "--format", "dot")
    assert code == 0 and out.count('[label="[') == 2


def test_explore(capsys):
    code, out, _ = run(capsys, "explore-question", Z4, "-f", "mod2", "-x", "o", "--format", "json")
    r = json.loads(out)
    jsonschema.validate(r, EXPLORE_REPORT_SCHEMA)
    assert r["satisfying"] == [["e", "a2"]]
    code, _, err = run(capsys, "explore-question", Z4, "-f", "mod2", "-x", "o", "--budget", "2")
    assert code == 3 and "limit" in err


def test_size_limit_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("GDSL_SIZE_LIMIT", "5")
    code, _, err = run(capsys, "action", Z4, "-g", "Z4")
    assert code == 3


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["slice", PAIR],
        ["slice", PAIR, "-g", "Nope", "-x", "O1"],
        ["slice", PAIR, "-g", "P", "-x", "Nope"],
        ["kernel", Z4, "-f", "mod2", "-x", "o", "--format", "dot"],
        ["validate", str(FIXTURES / "missing.gd")],
        ["coset", Z4, "-g", "Z2", "-s", "Even"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "k.json"
    code, out, _ = run(capsys, "kernel", Z4, "-f", "mod2", "-x", "o", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["kernel"] == ["e", "a2"]


def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "slicegroupoids", "check", Z4, "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
