import json
import subprocess
import sys

import pytest

from qtpaths.cli import run
from qtpaths.qt_field import QtScalar, q
from qtpaths.symfunc import SymFunc, e, s


def call(*argv):
    code, text = run(list(argv))
    return code, (json.loads(text) if text and not text.startswith(("==", "[")) else text)


def test_r_apply_one():
    code, out = call("r-apply", "--beta", "1", "--input", "1")
    assert code == 0
    assert SymFunc.from_json(out) == -e(1)


def test_negative_beta_with_equals():
    code, out = call("r-apply", "--beta=-1,2", "--input", "1", "--engine", "paths")
    assert code == 0
    assert isinstance(SymFunc.from_json(out), SymFunc)


def test_mac_degree_two():
    code, out = call("mac", "--n", "2")
    assert code == 0
    first = out["polynomials"][0]
    assert first["partition"] == [2]
    assert SymFunc.from_json(first["htilde"]) == s(2) + q * s(1, 1)


def test_output_is_deterministic():
    a = run(["tau", "--g1", "1,1", "--g2", "1,1/2", "--zmax", "2"])
    b = run(["tau", "--g1", "1,1", "--g2", "1,1/2", "--zmax", "2"])
    assert a == b
    assert a[1] == json.dumps(json.loads(a[1]), sort_keys=True, separators=(",", ":"))


def test_expansion_matches_explicit():
    _, rhs = call("explicit-rhs", "--betas", "1,0;1", "--basis", "s")
    _, c = call("expansion", "--beta", "1,0;1", "--lambda", "2", "--side", "schur")
    assert SymFunc.from_json(rhs)[(2,)] == QtScalar.from_json(c)


def test_verify_reports():
    code, out = call("verify", "ext-delta", "--n", "2", "--k", "1", "--l", "1", "--no-timing")
    assert code == 0
    assert out["passed"]
    assert out["reports"][0]["suite"] == "ext-delta"


def test_pretty_table():
    code, text = run(["verify", "ext-delta", "--n", "1", "--k", "1", "--l", "0", "--pretty"])
    assert code == 0
    assert text.splitlines()[-1] == "overall: pass"


@pytest.mark.parametrize("argv", [
    ["r-apply", "--beta", "1", "--input", "{not json"],
    ["r-apply", "--beta", "x", "--input", "1"],
    ["tau", "--g1", "2,1", "--g2", "1"],
    ["mac", "--n", "-1"],
    ["verify", "ext-delta", "--n", "2"],
    ["nonsense"],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_stdin_and_env_window():
    env = {"QTPATHS_WINDOW": "2", "PATH": ""}
    proc = subprocess.run([sys.executable, "-m", "qtpaths.cli", "r-apply", "--beta", "1",
                           "--input", "-"], input="1", capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert SymFunc.from_json(json.loads(proc.stdout)) == -e(1)
    proc = subprocess.run([sys.executable, "-m", "qtpaths.cli", "mac", "--n", "1"],
                          capture_output=True, text=True, env={"QTPATHS_WINDOW": "x"})
    assert proc.returncode == 2
