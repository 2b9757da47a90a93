"""End-to-end CLI tests driven through subprocess.

The binary path comes from SPECFACTOR_CLI (set by the ctest harness); the
whole module is skipped when it is absent.
"""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("SPECFACTOR_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="SPECFACTOR_CLI not set")


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, input=stdin, timeout=300
    )


def test_construct_graph6_and_stats():
    r = run("construct", "complete", "4")
    assert r.returncode == 0
    assert r.stdout == "C~\n"

    r = run("construct", "t_graph", "20", "1", "2", "--json")
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["order"] == 20
    assert j["size"] == 142
    assert j["min_degree"] == 2
    assert j["connected"] is True
    assert list(j)[0] == "graph6"

    r = run("construct", "g_unique_pm", "6", "--stats")
    assert r.returncode == 0
    line, rest = r.stdout.split("\n", 1)
    assert json.loads(rest)["size"] == 9

    # k = 1 specializes to the unique-matching maximizer (same order and size)
    j = json.loads(run("construct", "g_unique_kfactor", "6", "1", "--json").stdout)
    assert j["order"] == 6 and j["size"] == 9 and j["connected"] is True


def test_construct_errors():
    assert run("construct", "h_na", "6").returncode == 2  # missing parameter
    assert run("construct", "nosuch", "3").returncode == 2
    r = run("construct", "complete", "65")
    assert r.returncode == 4
    assert "capacity" in r.stderr


def test_rho_json_and_compare():
    k5 = run("construct", "complete", "5").stdout.strip()
    r = run("rho", k5)
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["rho"] == "4.000000000000"
    assert float(j["residual"]) <= 1e-8

    r = run("rho", k5, "--compare", "C~")
    j = json.loads(r.stdout)
    assert j["verdict"] == "Greater"
    assert j["margin"] == "1.000000000000"

    r = run("rho", stdin=k5 + "\n")  # graph argument defaults to stdin
    assert json.loads(r.stdout)["rho"] == "4.000000000000"


def test_factor_queries():
    # K_{1,4} has no odd [1,3]-factor; the hub is the witness
    r = run("factor", "Ds_", "--a", "1", "--b", "3", "--odd")
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["outcome"] == "Refuted"
    assert j["witness"] == [0]

    c5 = run("construct", "circulant", "5", "1").stdout.strip()
    r = run("factor", c5, "--fractional")
    j = json.loads(r.stdout)
    assert j["outcome"] == "Found"
    assert [e["weight"] for e in j["weights"]] == ["0.500000000000"] * 5
    assert j["method"] == "double_cover"

    r = run("factor", "C~", "--a", "1", "--b", "1")
    j = json.loads(r.stdout)
    assert j["outcome"] == "Found"
    assert len(j["factor_edges"]) == 2


def test_verify_exit_codes():
    r = run("verify", "cor1.1", "--n", "4", "--k", "1")
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["verdict"] == "pass"
    assert j["checked"] == 64

    r = run(
        "verify", "thm1.2", "--n", "16", "--b", "1", "--delta", "1",
        "--samples", "30", "--seed", "2",
    )
    assert r.returncode == 5  # clean sampled run is distinguishable from a proof
    j = json.loads(r.stdout)
    assert j["verdict"] == "no_counterexample_in_samples"
    assert j["samples"] == 30

    # hypothesis violation: a*n odd
    assert run("verify", "thm1.3", "--n", "5", "--a", "1", "--b", "2").returncode == 2


def test_verify_out_file(tmp_path):
    out = tmp_path / "report.json"
    r = run("verify", "lemmas", "--n-max", "3", "--out", str(out))
    assert r.returncode == 0
    j = json.loads(out.read_text())
    assert j["theorem"] == "lemmas"
    assert j["checked"] == 11


def test_explore():
    r = run("explore", "--two-n", "6", "--k", "1")
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert any(n == "argmax isomorphic to the construction: yes" for n in j["notes"])


def test_g6_stream_tools(tmp_path):
    stream = tmp_path / "mixed.g6"
    stream.write_text("Bw\nA_\nB~\nB?\n")

    r = run("g6", "validate", str(stream))
    assert r.returncode == 2
    assert "line 3: trailing bits nonzero" in r.stderr
    assert json.loads(r.stdout) == {"valid": 2, "invalid": 1}

    r = run("g6", "validate", str(stream), "--lenient")
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"valid": 3, "invalid": 1}

    clean = tmp_path / "clean.g6"
    clean.write_text("Bw\nBW\nB?\n")
    r = run("g6", "stats", str(clean))
    assert r.returncode == 0
    j = json.loads(r.stdout)
    assert j["n"] == 3
    assert j["count"] == 3
    assert j["orders"] == {"3": 3}

    r = run("g6", "convert", str(clean))
    assert r.returncode == 0
    assert r.stdout == "Bw\nBW\nB?\n"

    assert run("g6", "stats", str(tmp_path / "missing.g6")).returncode == 2


def test_parse_errors_exit_2():
    assert run("nosuchcommand").returncode == 2
    assert run("verify", "thm1.1").returncode == 2  # missing required --two-n
    assert run().returncode == 2
