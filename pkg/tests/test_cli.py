import json
import subprocess
import sys

import numpy as np
import pytest

from latbounds.cli import main
from latbounds.lattice import integer_lattice, save_lattice


def run_cli(*args):
    cp = subprocess.run([sys.executable, "-m", "latbounds", *args],
                        capture_output=True, text=True)
    return cp.returncode, cp.stdout, cp.stderr


@pytest.fixture(scope="module")
def z1(tmp_path_factory):
    path = tmp_path_factory.mktemp("lat") / "z1.json"
    save_lattice(integer_lattice(1), path)
    return str(path)


@pytest.fixture(scope="module")
def z2(tmp_path_factory):
    path = tmp_path_factory.mktemp("lat") / "z2.json"
    save_lattice(integer_lattice(2), path)
    return str(path)


def get_field(out, name):
    for line in out.splitlines():
        if line.startswith(name + " "):
            return line.split()[1]
    raise KeyError(name)


def test_theta_z1(z1):
    code, out, _ = run_cli("theta", z1, "--family", "gaussian")
    assert code == 0
    assert abs(float(get_field(out, "partial")) - 1.086434811213308) < 1e-9
    assert float(get_field(out, "remainder_bound")) < 1e-9
    assert float(get_field(out, "truncation_radius")) > 0


def test_theta_missing_basis_names_field(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 1}))
    code, _, err = run_cli("theta", str(bad), "--family", "gaussian")
    assert code == 3
    assert "basis" in err


def test_theta_rejects_nonpositive_t(z1):
    code, _, err = run_cli("theta", z1, "--family", "gaussian", "--t", "0")
    assert code == 3
    assert "t > 0" in err


def test_theta_rejects_unknown_family(z1):
    code, _, err = run_cli("theta", z1, "--family", "bogus")
    assert code == 3
    assert "bogus" in err


def test_theta_rejects_wrong_v_length(z2):
    code, _, err = run_cli("theta", z2, "--family", "gaussian", "--v", "0.1")
    assert code == 3
    assert "coordinates" in err


def test_unknown_subcommand_is_usage_error():
    code, _, _ = run_cli("frobnicate")
    assert code == 3


def test_constants_rows():
    code, out, _ = run_cli("constants")
    assert code == 0
    assert "cstar 0.424789765356" in out
    assert "l1_coefficient_exact 0.15426346839" in out
    row = [l for l in out.splitlines() if l.startswith("transference_l2 n=1 ")][0]
    assert abs(float(row.split()[-1]) - 1.11408) < 5e-5
    row = [l for l in out.splitlines() if l.startswith("handshake n=4 p=2 u=1 ")][0]
    assert abs(float(row.split()[-1]) - 401.7107384) < 1e-6


def test_constants_empty_grid_is_usage_error():
    code, _, err = run_cli("constants", "--n", "")
    assert code == 3
    assert "empty" in err


def test_psf_verdict(z2):
    code, out, _ = run_cli("psf", z2, "--family", "gaussian", "--t", "1.5",
                           "--v", "0.2,0.3", "--max-residual", "1e-8")
    assert code == 0
    assert "verdict PASS" in out


def test_tail_subcommand(z2):
    code, out, _ = run_cli("tail", z2, "--family", "gaussian", "--tau", "1")
    assert code == 0
    assert "verdict PASS" in out
    assert float(get_field(out, "margin")) > 0


def test_transference_subcommand(z1):
    code, out, _ = run_cli("transference", z1, "--p", "2",
                           "--resolution", "256")
    assert code == 0
    assert float(get_field(out, "product_upper")) <= 1.11409


def test_kissing_subcommand(z2):
    code, out, _ = run_cli("kissing", z2, "--p", "2", "--u", "1.5")
    assert code == 0
    assert get_field(out, "count") == "8"


def _write_manifest(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)


def test_verify_manifest_end_to_end(tmp_path, z2):
    man = {
        "lattice_file": z2,
        "seed": 7,
        "output": "report.json",
        "checks": [
            {"check_name": "part1", "params": {"family": "gaussian", "t": 1.0}},
            {"check_name": "tail_inequality",
             "params": {"family": "gaussian", "tau": 1.0}},
            {"check_name": "psf",
             "params": {"family": "gaussian", "t": 1.5, "v": "random",
                        "max_residual": 1e-8}},
            {"check_name": "handshake", "params": {"p": 2, "u": 1.5}},
            {"check_name": "hypotheses",
             "params": {"family": "gaussian", "dim": 2, "samples": 1000}},
        ],
    }
    mp = _write_manifest(tmp_path / "man.json", man)
    code, out, _ = run_cli("verify", mp)
    assert code == 0
    assert "summary checks=5 pass=5 fail=0 inconclusive=0" in out
    report = json.loads((tmp_path / "report.json").read_text())
    assert [r["check"] for r in report["records"]] == [
        "part1", "tail_inequality", "psf", "handshake", "hypotheses"]
    assert report["records"][0]["margin"] == 0.0  # identity case
    # records keep manifest order and stdout lines match
    assert out.splitlines()[0].startswith("[0] part1")


def test_verify_reports_byte_identical(tmp_path, z2):
    man = {
        "lattice_file": z2, "seed": 5,
        "checks": [{"check_name": "part1",
                    "params": {"family": "gaussian", "t": 1.5, "v": "random"}},
                   {"check_name": "theta", "params": {"family": "gaussian"}}],
    }
    mp = _write_manifest(tmp_path / "man.json", man)
    outs = []
    for run in (1, 2):
        out = tmp_path / f"rep{run}.json"
        code, _, _ = run_cli("verify", mp, "--output", str(out))
        assert code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_verify_failing_check_exits_one(tmp_path, z1):
    man = {"lattice_file": z1,
           "checks": [{"check_name": "psf",
                       "params": {"family": "exp_l1", "tol": 1e-6,
                                  "max_residual": 1e-30}}]}
    mp = _write_manifest(tmp_path / "man.json", man)
    code, out, _ = run_cli("verify", mp)
    assert code == 1
    assert "fail=1" in out


def test_verify_unknown_check_rejected_before_running(tmp_path, z1):
    man = {"lattice_file": z1,
           "checks": [{"check_name": "theta", "params": {"family": "gaussian"}},
                      {"check_name": "wat", "params": {}}]}
    mp = _write_manifest(tmp_path / "man.json", man)
    code, out, err = run_cli("verify", mp)
    assert code == 3
    assert "checks[1]" in err and "wat" in err
    assert out == ""  # nothing executed


def test_verify_empty_checks_usage_error(tmp_path, z1):
    mp = _write_manifest(tmp_path / "man.json",
                         {"lattice_file": z1, "checks": []})
    code, _, err = run_cli("verify", mp)
    assert code == 3
    assert "checks" in err


def test_verify_budget_exhaustion_exits_four(tmp_path, z2):
    man = {"lattice_file": z2, "budgets": {"nodes": 3},
           "checks": [{"check_name": "theta",
                       "params": {"family": "gaussian"}}]}
    mp = _write_manifest(tmp_path / "man.json", man)
    code, _, err = run_cli("verify", mp)
    assert code == 4
    assert "budget" in err.lower()


def test_verify_plot_csv(tmp_path, z2):
    man = {"lattice_file": z2,
           "checks": [{"check_name": "tail_inequality",
                       "params": {"family": "gaussian", "tau": 1.0}}]}
    mp = _write_manifest(tmp_path / "man.json", man)
    csv = tmp_path / "curves.csv"
    code, _, _ = run_cli("verify", mp, "--plot-csv", str(csv))
    assert code == 0
    lines = csv.read_text().splitlines()
    assert lines[0] == "check_index,lattice_id,family,radius,tail_mass_upper,bound"
    assert len(lines) == 25  # 24 radii for the single tail check


def test_main_callable_in_process(capsys, z1):
    # the entry point returns exit codes rather than raising SystemExit
    code = main(["theta", z1, "--family", "gaussian"])
    assert code == 0
    out = capsys.readouterr().out
    assert "partial" in out


def test_inline_lattice_kinds(tmp_path):
    man = {"seed": 1,
           "checks": [
               {"check_name": "theta",
                "params": {"family": "gaussian",
                           "lattice": {"kind": "integer", "dim": 2}}},
               {"check_name": "theta",
                "params": {"family": "gaussian",
                           "lattice": {"kind": "unimodular", "dim": 2,
                                       "seed": 3}}},
               {"check_name": "theta",
                "params": {"family": "gaussian",
                           "lattice": {"kind": "basis",
                                       "basis": [[2.0, 0.0], [1.0, 1.0]],
                                       "name": "sheared"}}}]}
    mp = _write_manifest(tmp_path / "man.json", man)
    code, out, _ = run_cli("verify", mp)
    assert code == 0
    assert "sheared" in out


def test_lattice_file_resolved_relative_to_manifest(tmp_path):
    save_lattice(integer_lattice(1), tmp_path / "local.json")
    man = {"lattice_file": "local.json",
           "checks": [{"check_name": "theta",
                       "params": {"family": "gaussian"}}]}
    mp = _write_manifest(tmp_path / "man.json", man)
    code, _, _ = run_cli("verify", mp)
    assert code == 0
