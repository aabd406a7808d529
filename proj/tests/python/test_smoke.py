"""Smoke tests for the python module and the CLI binary.

The module path and the CLI location come from the environment (PYTHONPATH
and SUBZETA_CLI), which ctest wires up to the build tree.
"""

import json
import os
import subprocess

import pytest

import subzeta as sz

CLI = os.environ.get("SUBZETA_CLI")


def run_cli(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    assert proc.returncode == expect, proc.stderr
    return proc.stdout


def test_count_basics():
    assert sz.count_index(sz.split_ring(4), 7, 1) == 10
    assert sz.count_index(sz.split_ring(2), 3, 2) == 4
    assert sz.count_index(sz.split_ring(5), 3, 1, unital=True) == 10
    assert sz.count_for_diagonal(sz.split_ring(2), 3, [1, 0]) == 2
    assert sz.mu_volume(sz.split_ring(2), 3, [1, 0]) == (2, 1)


def test_duality_and_oracle():
    for d in (2, 3):
        for m in (0, 1, 2):
            unital = sz.count_index(sz.split_ring(d), 3, m, unital=True)
            lower = sz.count_index(sz.split_ring(d - 1), 3, m)
            assert unital == lower
    assert sz.count_global(sz.split_ring(2), 6) == 9


def test_rings_and_types():
    ring = sz.unramified_product(3, [2, 1])
    assert ring.rank == 3
    assert ring.validate() is None
    assert sz.splitting_type("x^2+1", 5) == [1, 1]
    assert sz.splitting_type("x^2+1", 3) == [2]
    with pytest.raises(sz.InputError):
        sz.splitting_type("x^2+1", 2)
    assert sz.verify_a1(5, [1, 1, 1, 1, 1]) == {"formula": 10, "brute": 10, "match": True}


def test_groups():
    rows = sz.table1_rows()
    assert len(rows) == 12
    assert all(r["match"] for r in rows)
    assert sz.r2_orbits(4, [[[1, 2], [3, 4]], [[1, 4], [2, 3]]]) == 3
    assert sz.burnside_r(4, [[[1, 2, 3, 4]]]) == (2, 1)
    assert sz.r2_closed_form("D", 5) == 2


def test_series():
    prof = sz.assemble_series("split:3", 10)
    assert prof["f"][1:7] == [1, 3, 3, 4, 3, 9]
    assert prof["N"][10] == sum(prof["f"][1:11])


def test_cli_count_and_determinism():
    out = run_cli("count", "--ring", "split:4", "--p", "7", "--m", "1")
    assert out.strip() == "10"
    a = run_cli("count", "--ring", "split:3", "--p", "2,3,5", "--m", "0..3", "--format", "csv")
    b = run_cli("count", "--ring", "split:3", "--p", "2,3,5", "--m", "0..3", "--format", "csv")
    assert a == b
    assert a.splitlines()[0] == "p,m,unital,count"


def test_cli_r2_table():
    out = run_cli("r2", "--table1")
    lines = out.strip().splitlines()
    assert len(lines) == 13
    assert lines[1] == "Z/3Z,3,3,1,1,yes"
    # the shipped group file must agree with the builtin table
    table = os.path.join(os.environ["SUBZETA_DATA"], "table1.json")
    assert run_cli("r2", "--groups", table) == out


def test_cli_series():
    out = run_cli("series", "--family", "split:3", "--B", "10")
    assert out.splitlines()[2] == "2,3,4"


def test_cli_series_fit():
    proc = subprocess.run([CLI, "series", "--family", "split:3", "--B", "200", "--fit", "1,3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    fit = json.loads(proc.stderr.splitlines()[-1])
    assert fit["beta"] == 3 and fit["C"] > 0


def test_cli_dump_reps():
    proc = subprocess.run([CLI, "count", "--ring", "split:2", "--p", "3", "--m", "1",
                           "--dump-reps"], capture_output=True, text=True)
    assert proc.returncode == 0
    reps = [json.loads(line) for line in proc.stderr.splitlines() if line.startswith("{")]
    assert len(reps) == 3  # a(3) = 3 for the rank-2 split ring
    assert {tuple(r["diag"]) for r in reps} == {(1, 0), (0, 1)}


def test_cli_errors():
    proc = subprocess.run([CLI, "count", "--ring", "split:0", "--p", "3", "--m", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 3
    err = json.loads(proc.stderr.splitlines()[-1])
    assert err["kind"] == "input"

    proc = subprocess.run([CLI, "count", "--ring", "split:4", "--p", "5", "--m", "3",
                           "--budget", "50"], capture_output=True, text=True)
    assert proc.returncode == 2


def test_cli_verify_reports():
    out = run_cli("verify", "--suite", "a1", "--n", "4", "--p", "3")
    reports = json.loads(out)
    assert reports[0]["violations"] == []


def test_cli_workers_and_cache_determinism(tmp_path):
    args = ["count", "--ring", "split:4", "--p", "2,3", "--m", "0..3", "--format", "csv"]
    base = run_cli(*args, "--workers", "1")
    assert run_cli(*args, "--workers", "4") == base

    cache = str(tmp_path / "cache.jsonl")
    cold = run_cli(*args, "--cache", cache)
    warm = run_cli(*args, "--cache", cache)
    audited = run_cli(*args, "--cache", cache, "--audit-cache")
    assert cold == warm == audited == base
