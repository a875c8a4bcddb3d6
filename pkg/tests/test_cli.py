import json
import subprocess
import sys

P3_EDGES = "1 2\n2 3\n"


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "zagreb.cli", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


def test_stirling_value_and_row():
    r = run_cli("stirling", "--k", "4", "--m", "2")
    assert r.returncode == 0 and r.stdout.strip() == "7"
    r = run_cli("stirling", "--k", "0", "--m", "0")
    assert r.returncode == 0 and r.stdout.strip() == "1"
    r = run_cli("stirling", "--k", "3")
    assert r.returncode == 0 and r.stdout.strip() == "1 3 1"


def test_stirling_out_of_range_exits_1():
    r = run_cli("stirling", "--k", "100", "--m", "2")
    assert r.returncode == 1 and "error" in r.stderr


def test_index_golden(tmp_path):
    f = tmp_path / "p3.edges"
    f.write_text(P3_EDGES)
    r = run_cli("index", "--input", str(f), "--k", "2", "--stars")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["command"] == "index"
    assert payload["version"] == "0.1.0"
    assert payload["results"] == {
        "n": 3,
        "edges": 2,
        "zagreb": ["4", "6"],
        "identity_check": True,
        "stars": ["4", "1"],
    }


def test_index_k3_complete_graph(tmp_path):
    f = tmp_path / "k4.edges"
    f.write_text("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n")
    r = run_cli("index", "--input", str(f), "--k", "3")
    payload = json.loads(r.stdout)
    assert payload["results"]["zagreb"] == ["12", "36", "108"]
    assert "stars" not in payload["results"]


def test_index_malformed_file_exits_1(tmp_path):
    f = tmp_path / "bad.edges"
    f.write_text("1 2\n2 2\n")
    r = run_cli("index", "--input", str(f), "--k", "2")
    assert r.returncode == 1
    assert "line 2" in r.stderr and "self-loop" in r.stderr


def test_moments_exact_golden():
    r = run_cli("moments", "--n", "3", "--p", "0.5", "--k", "2", "--mode", "exact")
    payload = json.loads(r.stdout)
    assert payload["results"]["mean"] == [3.0, 4.5]
    assert payload["results"]["var"] == [3.0, 12.75]


def test_moments_enumerate_agrees_with_exact():
    exact = json.loads(run_cli("moments", "--n", "3", "--p", "0.5", "--k", "2").stdout)
    enum = json.loads(
        run_cli("moments", "--n", "3", "--p", "0.5", "--k", "2", "--mode", "enumerate").stdout
    )
    for m in range(2):
        assert abs(exact["results"]["mean"][m] - enum["results"]["mean"][m]) <= 1e-9
        assert abs(exact["results"]["var"][m] - enum["results"]["var"][m]) <= 1e-9


def test_moments_asymptotic_first_order():
    r = run_cli("moments", "--n", "100", "--p", "0.5", "--k", "1", "--mode", "asymptotic")
    payload = json.loads(r.stdout)
    assert payload["results"]["mean"] == [5000.0]


def test_moments_enumerate_guard():
    r = run_cli("moments", "--n", "8", "--p", "0.5", "--k", "2", "--mode", "enumerate")
    assert r.returncode == 1


def test_moments_config_merge(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"n": 3, "p": 0.5, "k": 2, "mode": "enumerate"}))
    r = run_cli("moments", "--config", str(cfg), "--mode", "exact")
    payload = json.loads(r.stdout)
    assert payload["params"]["mode"] == "exact"  # explicit flag beats the file
    assert payload["results"]["source"] == "exact-formula"
    r = run_cli("moments", "--config", str(cfg))
    payload = json.loads(r.stdout)
    assert payload["results"]["source"] == "enumeration"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"bogus": 1}))
    assert run_cli("moments", "--config", str(bad)).returncode == 1


def test_sample_deterministic_and_seeded(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sample", "--n", "30", "--p", "0.2", "--k", "2", "--replicates", "20", "--seed", "11"]
    r1 = run_cli(*args, "--out", str(out1))
    r2 = run_cli(*args, "--out", str(out2), "--workers", "4")
    assert r1.returncode == r2.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert json.loads(r1.stdout)["results"]["mean"] == json.loads(r2.stdout)["results"]["mean"]
    header = out1.read_text().splitlines()[0]
    assert header == "replicate,Z1,Z2"


def test_sample_plaw_resolution():
    r = run_cli(
        "sample", "--n", "2000", "--plaw", "1*n^-1", "--k", "1",
        "--replicates", "5", "--seed", "3",
    )
    payload = json.loads(r.stdout)
    assert payload["results"]["p"] == 0.0005


def test_sample_requires_exactly_one_probability_source():
    base = ["sample", "--n", "10", "--k", "1", "--replicates", "2", "--seed", "1"]
    assert run_cli(*base).returncode == 1
    assert run_cli(*base, "--p", "0.5", "--plaw", "0.5").returncode == 1


def test_regime_goldens():
    payload = json.loads(run_cli("regime", "--plaw", "2*n^-2", "--k", "3").stdout)
    assert payload["results"]["regime"] == "PoissonHalfLambda"
    assert payload["results"]["parameter"] == 2.0
    payload = json.loads(run_cli("regime", "--plaw", "1*n^-1", "--k", "3").stdout)
    assert payload["results"]["regime"] == "CLT-Critical"
    assert payload["results"]["parameter"] == 1.0
    payload = json.loads(run_cli("regime", "--plaw", "1-2*n^-1", "--k", "2").stdout)
    assert payload["results"]["regime"] == "CLT-Single"
    assert payload["results"]["joint_normality"] == "open"


def test_regime_with_normalizers():
    payload = json.loads(
        run_cli("regime", "--plaw", "0.5", "--k", "1", "--n", "1000").stdout
    )
    norms = payload["results"]["normalizers"]
    assert len(norms) == 1
    assert abs(norms[0]["scale"] - 500 * 2**0.5) < 1e-6
    assert payload["results"]["target"]["kind"] == "ones"


def test_regime_parse_error_exits_1():
    r = run_cli("regime", "--plaw", "n^-")
    assert r.returncode == 1 and "position" in r.stderr


def test_unknown_flag_rejected():
    r = run_cli("stirling", "--k", "3", "--frobnicate")
    assert r.returncode == 1


def test_verify_matrices_exit_zero():
    r = run_cli("verify", "--suite", "matrices")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert payload["results"]["passed"] is True
    assert all(c["pass"] for c in payload["results"]["checks"])
    assert "PASS" in r.stderr


def test_verify_regimes_identity_oracle_exit_zero():
    assert run_cli("verify", "--suite", "regimes").returncode == 0
    assert run_cli("verify", "--suite", "identity").returncode == 0
    assert run_cli("verify", "--suite", "oracle").returncode == 0


def test_verify_unknown_suite_exits_1():
    r = run_cli("verify", "--suite", "nope")
    assert r.returncode == 1


def test_verify_failing_suite_exits_2():
    # the sparse-window KS marginals cannot pass at these parameters (see
    # test_acceptance), so the suite must report failure via exit code 2
    r = run_cli("verify", "--suite", "clt-sparse")
    assert r.returncode == 2
    payload = json.loads(r.stdout)
    assert payload["results"]["passed"] is False


def _check_envelope(payload, command):
    # structural validation against docs/report_schema.md
    assert set(payload) == {"command", "params", "results", "tests", "version", "seed"}
    assert payload["command"] == command
    assert isinstance(payload["params"], dict)
    assert isinstance(payload["results"], dict)
    assert isinstance(payload["tests"], list)
    for t in payload["tests"]:
        assert set(t) == {"name", "statistic", "p_value", "alpha", "pass"}
        assert 0.0 <= t["p_value"] <= 1.0
    assert isinstance(payload["version"], str)
    assert payload["seed"] is None or isinstance(payload["seed"], int)


def test_envelopes_match_documented_schema(tmp_path):
    f = tmp_path / "p3.edges"
    f.write_text(P3_EDGES)
    _check_envelope(json.loads(run_cli("index", "--input", str(f), "--k", "2").stdout), "index")
    _check_envelope(json.loads(run_cli("moments", "--n", "3", "--p", "0.5", "--k", "1").stdout), "moments")
    _check_envelope(
        json.loads(
            run_cli("sample", "--n", "8", "--p", "0.5", "--k", "1", "--replicates", "3", "--seed", "1").stdout
        ),
        "sample",
    )
    _check_envelope(json.loads(run_cli("regime", "--plaw", "0.5", "--k", "2").stdout), "regime")
    _check_envelope(json.loads(run_cli("verify", "--suite", "regimes").stdout), "verify")


def test_workers_env_default(tmp_path):
    out = tmp_path / "c.csv"
    r = run_cli(
        "sample", "--n", "10", "--p", "0.5", "--k", "1",
        "--replicates", "8", "--seed", "2", "--out", str(out),
        env={"ZAGREB_WORKERS": "3", "PATH": "/usr/bin:/bin"},
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["params"]["workers"] == 3
