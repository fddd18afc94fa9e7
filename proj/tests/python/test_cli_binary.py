import json
import os
import subprocess

import pytest

CLI = os.environ.get("CYCLRES_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="CYCLRES_CLI not set")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("CYCLRES_MAX_M", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env)


def test_faces():
    r = run("faces", "--d", "4", "--m", "6", "--subset", "1,3,5")
    assert r.returncode == 0
    assert r.stdout.splitlines()[0] == "nonface"
    r = run("faces", "--d", "4", "--m", "7")
    assert r.stdout.splitlines()[0] == "f-vector: 1,7,21,28,14"


def test_eta():
    r = run("eta", "--d", "3", "--m", "7", "--i", "1")
    assert (r.returncode, r.stdout) == (0, "6\n")


def test_betti_both():
    r = run("betti", "--d", "4", "--m", "8", "--source", "both")
    assert r.returncode == 0
    assert "total: 1 16 30 16 1" in r.stdout


def test_resolve_writes_file(tmp_path):
    out = tmp_path / "c.json"
    r = run("resolve", "--d", "2", "--m", "6", "--checks", "d2,minimal,euler,rank",
            "--format", "json", "--out", str(out))
    assert r.returncode == 0, r.stderr
    assert json.loads(r.stdout)["ok"] is True
    data = out.read_bytes()
    assert data.endswith(b"\n") and b"\r" not in data
    doc = json.loads(data)
    assert set(doc) == {"ctx", "modules", "diffs"}


def test_usage_errors_exit_2():
    assert run("resolve", "--d", "2").returncode == 2
    assert run("resolve", "--d", "2", "--m", "6", "--format", "xml").returncode == 2
    assert run("resolve", "--d", "2", "--m", "6", "--checks", "nope").returncode == 2
    assert run("ideal", "--d", "4", "--m", "6", "--which", "K").returncode == 2
    assert run("bogus").returncode == 2
    assert run("resolve", "--d", "2", "--m", "13").returncode == 2


def test_cap_override():
    r = run("resolve", "--d", "2", "--m", "13", env={"CYCLRES_MAX_M": "13"})
    assert r.returncode == 0, r.stderr
