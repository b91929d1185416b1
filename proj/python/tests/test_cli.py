# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exit codes and outputs of the `prophet` command-line tool."""

import json
import os
import pathlib
import shutil
import subprocess

import pytest

CLI = os.environ.get("PROPHET_CLI") or shutil.which("prophet")
pytestmark = pytest.mark.skipif(CLI is None, reason="prophet binary not found")


def prophet(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("PROPHET_ENUM_CAP", None)
    full_env.update(env or {})
    return subprocess.run(
        [CLI, *map(str, args)], capture_output=True, text=True, env=full_env
    )


@pytest.fixture
def instance(tmp_path):
    path = tmp_path / "g.json"
    r = prophet("gen", "--vertices", 4, "--edges", 5, "--seed", 7, "--out", path)
    assert r.returncode == 0, r.stderr
    return path


def test_gen_is_reproducible(tmp_path, instance):
    again = tmp_path / "again.json"
    prophet("gen", "--vertices", 4, "--edges", 5, "--seed", 7, "--out", again)
    assert again.read_bytes() == instance.read_bytes()


def test_run_exact_and_mc(tmp_path, instance):
    r = prophet("run", "--instance", instance, "--mode", "exact", "--out", tmp_path / "x")
    assert r.returncode == 0, r.stderr
    summary = json.loads((tmp_path / "x.summary.json").read_text())
    assert summary["ratio"] >= 1 / 32

    for name in ("a", "b"):
        r = prophet("run", "--instance", instance, "--mode", "mc", "--trials", 500,
                    "--seed", 3, "--order", "random", "--out", tmp_path / name)
        assert r.returncode == 0, r.stderr
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_validation_errors(tmp_path, instance):
    assert prophet("run", "--instance", instance, "--mode", "mc").returncode == 1
    assert prophet("run", "--instance", tmp_path / "missing.json").returncode == 1
    assert prophet("run", "--instance", instance, "--algo", "nope").returncode == 1
    assert prophet("bogus").returncode == 1


def test_cap_exit_code(instance):
    assert prophet("run", "--instance", instance, "--cap", 2).returncode == 2
    r = prophet("run", "--instance", instance, env={"PROPHET_ENUM_CAP": "2"})
    assert r.returncode == 2


def test_verify_exit_code(instance):
    r = prophet("verify", "--instance", instance)
    assert r.returncode == 3
    failing = [line for line in r.stdout.splitlines() if line.startswith("FAIL")]
    assert len(failing) == 1
    assert "coupling value per realization" in failing[0]
    assert sum(line.startswith("PASS") for line in r.stdout.splitlines()) >= 9


def test_verify_bundled_suite():
    suite = pathlib.Path(__file__).resolve().parents[2] / "data" / "suite_graphic"
    r = prophet("verify", "--instance", suite)
    assert r.returncode == 3
    rows = [l for l in r.stdout.splitlines() if "PASS" in l or "FAIL" in l]
    assert [l.split()[0] for l in rows if "FAIL" in l] == ["coupling"]


def test_reduce_and_orient(tmp_path, instance):
    r = prophet("reduce", "--instance", instance, "--out", tmp_path / "pinned.json")
    assert r.returncode == 0, r.stderr
    pinned = json.loads((tmp_path / "pinned.json").read_text())
    assert len(pinned["reduction"]["p"]) == 5
    r = prophet("orient", "--instance", tmp_path / "pinned.json")
    assert r.returncode == 0, r.stderr
    assert json.loads(r.stdout)["max_in_mass"] <= 0.5 + 1e-12
