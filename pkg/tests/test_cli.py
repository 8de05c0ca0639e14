import json
import subprocess
import sys

import pytest

from cliffsample import parse, sample_clifford
from cliffsample.cli import EXIT_IO, EXIT_USAGE, EXIT_VERIFY, RunConfig, main
from cliffsample import tableau as tableau_mod


def run(*args):
    return subprocess.run([sys.executable, "-m", "cliffsample", *args], capture_output=True, text=True)


def test_sample_deterministic_text():
    a = run("sample", "--n", "4", "--count", "1", "--seed", "7", "--format", "text")
    b = run("sample", "--n", "4", "--count", "1", "--seed", "7", "--format", "text")
    assert a.returncode == 0 and a.stdout == b.stdout
    (c,) = parse(a.stdout, "text")
    assert c == sample_clifford(4, RunConfig(4, seed=7).circuit_seed(0))


@pytest.mark.parametrize("fmt", ["qasm", "jsonl", "text"])
def test_parallel_equals_serial(fmt, tmp_path):
    outs = []
    for mode in ("serial", "parallel"):
        path = tmp_path / f"{mode}.{fmt}"
        args = ["sample", "--n", "5", "--count", "3", "--seed", "11", "--format", fmt, "--segments"]
        assert main(args + ["--mode", mode, "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    circuits = parse(outs[0], fmt)
    assert len(circuits) == 3
    assert all(c.n == 5 and len(c.segments) == 5 for c in circuits)


def test_parallel_single_circuit(tmp_path):
    p1, p2 = tmp_path / "a", tmp_path / "b"
    main(["sample", "--n", "12", "--seed", "3", "--out", str(p1)])
    main(["sample", "--n", "12", "--seed", "3", "--mode", "parallel", "--workers", "2", "--out", str(p2)])
    assert p1.read_bytes() == p2.read_bytes()


@pytest.mark.parametrize(
    "args",
    [
        ["sample", "--n", "0"],
        ["sample", "--n", "3", "--count", "0"],
        ["sample", "--n", "3", "--format", "svg"],
        ["sample", "--n", "3", "--seed", "-1"],
        ["stats", "--n", "2", "--count", "0"],
        ["bogus"],
    ],
)
def test_usage_errors(args):
    r = run(*args)
    assert r.returncode == EXIT_USAGE
    assert "usage" in r.stderr


def test_io_error(tmp_path):
    r = run("sample", "--n", "2", "--out", str(tmp_path / "missing" / "x.txt"))
    assert r.returncode == EXIT_IO


def test_stats(capsys):
    assert main(["stats", "--n", "4", "--count", "1000", "--json"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["gates_max"] <= report["gate_bound"] == 52
    assert report["depth_max"] <= report["depth_bound"] == 42
    assert report["passed"] is True
    assert report["gates_min"] <= report["gates_mean"] <= report["gates_max"]


def test_stats_n1_depth(capsys):
    assert main(["stats", "--n", "1", "--count", "300"]) == 0
    out = capsys.readouterr().out
    assert "bound=8" in out and "bounds: PASS" in out


def test_verify_quick(capsys):
    assert main(["verify", "quick"]) == 0
    out = capsys.readouterr().out
    assert "[PASS] dense-oracle" in out and "[PASS] uniformity-n1" in out


def test_verify_fails_on_corrupted_sign_rule(monkeypatch, capsys):
    def h_without_sign(t, a):
        t.xs[a], t.zs[a] = t.zs[a], t.xs[a]

    monkeypatch.setitem(tableau_mod.SINGLE_QUBIT_UPDATES, "H", h_without_sign)
    assert main(["verify", "quick"]) == EXIT_VERIFY
    out = capsys.readouterr().out
    assert "[FAIL] dense-oracle" in out
    assert "verification failed: dense-oracle" in out


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(0)
    with pytest.raises(ValueError):
        RunConfig(2, mode="async")
    assert RunConfig(2, seed=5).circuit_seed(0) != RunConfig(2, seed=5).circuit_seed(1)
