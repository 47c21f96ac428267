import io
import json
import subprocess
import sys

import pytest

from hmknf.cli import run
from conftest import FIXTURES

FIXTURE_NAMES = ["example1", "example2", "example3", "example4", "example5", "example6", "example6_split"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def fx(name):
    return FIXTURES / f"{name}.kb"


def test_solve_example2_json():
    code, out, _ = call("solve", fx("example2"), "--all", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "model"
    assert data["models"] == [{"true": ["b"], "false": ["a"]}]
    assert set(data["stats"]) == {"decisions", "conflicts", "checks"}


def test_solve_no_model():
    code, out, _ = call("solve", fx("example4"), "--json")
    assert code == 1
    assert json.loads(out)["status"] == "no_model"
    code, out, _ = call("solve", fx("example4"))
    assert "no model" in out


def test_unfounded_exact():
    code, out, _ = call("unfounded", fx("example1"), "--true", "b", "--exact", "--json")
    assert code == 0
    assert json.loads(out) == {"status": "unfounded_set", "set": ["a", "a_p", "c", "f"], "exact": True}


def test_unfounded_approx_text():
    code, out, _ = call("unfounded", fx("example6"))
    assert code == 0 and out.startswith("unfounded: {}") and "approximation" in out
    code, out, _ = call("unfounded", fx("example6"), "--exact")
    assert out.strip() == "unfounded: {c}"


def test_check():
    code, out, _ = call("check", fx("example4"), "--true", "a", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "check" and data["result"] is False
    code, out, _ = call("check", fx("example2"), "--true", "b", "--false", "a")
    assert code == 0 and out.startswith("MKNF model")


def test_check_partial_partition_is_an_error():
    code, _, err = call("check", fx("example1"), "--true", "a", "--false", "b")
    assert code == 2 and "not total" in err


def test_propagate():
    code, out, _ = call("propagate", fx("example1"), "--true", "b", "--json")
    assert code == 1
    data = json.loads(out)
    assert data["status"] == "conflict"
    assert data["conflict"] == {"kind": "overlap", "atoms": ["f"]}
    code, out, _ = call("propagate", fx("example2"), "--false", "a", "--json")
    assert code == 0
    assert json.loads(out)["partition"] == {"true": ["b"], "false": ["a"]}


@pytest.mark.parametrize(
    "argv",
    [
        ("propagate", "example1", "--true", "zz"),
        ("propagate", "example1", "--true", "a", "--false", "a"),
        ("unfounded", "example1", "--true", "a,b", "--false", "c,a"),
        ("solve", "missing"),
        ("frobnicate",),
    ],
)
def test_usage_errors(argv, tmp_path):
    argv = [str(fx(a)) if a.startswith(("example", "missing")) else a for a in argv]
    code, _, err = call(*argv)
    assert code == 2


def test_ontology_only_atom_rejected(tmp_path):
    path = tmp_path / "k.kb"
    path.write_text("a :- not b.\n#clause a | x.\n")
    code, _, err = call("propagate", path, "--true", "x")
    assert code == 2 and "does not occur in any rule" in err


def test_parse_error_exit(tmp_path):
    path = tmp_path / "bad.kb"
    path.write_text("a :- b\n")
    code, _, err = call("solve", path)
    assert code == 2 and ":1:7:" in err


def test_size_guard_exit(tmp_path):
    path = tmp_path / "wide.kb"
    path.write_text("\n".join(f"a{i} ; b{i} ; c{i}." for i in range(13)) + "\n")
    code, _, err = call("unfounded", path, "--exact")
    assert code == 2 and "exceeds" in err


def test_encode(tmp_path):
    path = tmp_path / "f.cnf"
    path.write_text("p cnf 1 2\n1 0\n-1 0\n")
    code, out, _ = call("encode-3sat", path)
    assert code == 0 and "sat :- sat." in out and "v1_t :- not v1_f." in out
    code, out, _ = call("encode-3sat", path, "--disjunctive")
    assert "v1_f ; v1_t." in out
    bad = tmp_path / "bad.cnf"
    bad.write_text("1 0\n")
    assert call("encode-3sat", bad)[0] == 2


def test_json_is_byte_stable():
    for name in FIXTURE_NAMES:
        first = call("solve", fx(name), "--all", "--json")[1]
        assert first == call("solve", fx(name), "--all", "--json")[1]
        assert list(json.loads(first)) == ["status", "models", "stats"]


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_brute_force_agrees(name):
    a = json.loads(call("solve", fx(name), "--all", "--json")[1])
    b = json.loads(call("solve", fx(name), "--all", "--brute-force", "--json")[1])
    assert a["status"] == b["status"] and a["models"] == b["models"]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hmknf.cli", "solve", str(fx("example3")), "--all"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[:2] == ["Model 1: true: {a}  false: {b}", "Model 2: true: {b}  false: {a}"]
