import json
import os
import subprocess

import pytest

CLI = os.environ.get("CURCOH_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="CURCOH_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def run_json(*args):
    r = run(*args, "--json")
    assert r.returncode == 0, r.stderr
    out = json.loads(r.stdout)
    assert out["schema"] == "v1"
    return out


def test_gl_predict_json():
    out = run_json("gl-predict", "--type", "A1", "--degree", "2")
    assert out["factors"] == [{"weight": [4], "mult": 1, "t_degree": 3}]
    assert out["params"] == {"type": "A1", "degree": 2}


def test_table1_text():
    r = run("table1", "--type", "G2")
    assert r.returncode == 0
    assert r.stdout.strip().splitlines()[-1] == "j = 2"


def test_cohomology_gIs():
    out = run_json("cohomology", "--algebra", "gIs", "--type", "A1", "--points", "0,1", "--s", "3",
                   "--degree", "2", "--arity", "2")
    pairs = sorted((f["weight"], f["weight2"]) for f in out["factors"])
    assert pairs == [([0], [2]), ([0], [4]), ([2], [0]), ([2], [2]), ([4], [0])]
    assert out["truncation_level"] == 3
    assert out["stabilization"]["stable"] is True
    assert out["block_stats"]["dd_checked"] is True


def test_defaults_recorded():
    assert run_json("cohomology", "--type", "A1", "--degree", "1")["params"]["s"] == 5
    assert run_json("cohomology", "--algebra", "gIs", "--type", "A1", "--points", "0,1",
                    "--degree", "1")["params"]["s"] == 4
    assert run_json("hc1")["params"]["cutoff"] == 12


def test_thread_count_does_not_change_output():
    args = ("cohomology", "--type", "A2", "--s", "4", "--degree", "2", "--json")
    one = run(*args, "--threads", "1")
    four = run(*args, "--threads", "4")
    assert one.returncode == 0
    assert one.stdout == four.stdout


def test_hc1_detm_ext():
    assert run_json("hc1", "--cutoff", "9")["dim"] == 2
    assert run_json("detm", "--D", "7")["det"] == "-15"
    assert run_json("ext1", "--type", "A1", "--pi", "0:[2];1:[1]", "--pi2", "0:[4];1:[1]")["dim"] == 1
    assert run_json("self-ext2-sl2", "--lams", "2,0", "--points", "0,1")["dim"] == 1
    rep = run_json("ext2-report", "--type", "A2", "--pi", "", "--pi2", "0:[3,0]", "--s", "3")
    assert rep["dim"] == 1
    assert rep["annotations"] == ["truncation-based"]


def test_verify_exit_status():
    r = run("verify", "hc1")
    assert r.returncode == 0
    assert r.stdout.strip().endswith("hc1: pass")


def test_exit_codes():
    assert run("hc1", "--points", "1,1").returncode == 2
    assert run("cohomology", "--type", "A9", "--degree", "1").returncode == 2
    assert run("table1", "--type", "G2", "--bogus").returncode == 2
    assert run("verify", "nonsense").returncode == 2
    assert run("ext2-sl2", "--lams", "1,1", "--mus", "1,1").returncode == 2
    r = run("cohomology", "--algebra", "gtp", "--type", "A1", "--s", "1", "--degree", "1")
    assert r.returncode == 2
    assert "s ≥ 2" in r.stderr
