"""Command-line interface: subcommands, config precedence, exit codes."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from crhls.cli import EXIT_NOT_CONVERGED, EXIT_OK, EXIT_VALIDATION, main


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def test_constants_command(tmp_path, capsys):
    rc = main(["constants", "--output", str(tmp_path)])
    assert rc == EXIT_OK
    out = capsys.readouterr().out
    assert "sharp_constant = " in out
    data = _read_json(tmp_path / "constants.json")
    assert data["command"] == "constants"
    assert data["results"]["sharp_constant"] == pytest.approx(8.0, rel=1e-12)
    assert data["results"]["q_alpha"] == pytest.approx(4.0 / 3.0, rel=1e-15)
    assert data["results"]["Q"] == 4
    assert data["config"]["n"] == 1 and data["config"]["alpha"] == 2.0


def test_constants_general_alpha(tmp_path):
    rc = main(["constants", "--n", "2", "--alpha", "1.5", "--output", str(tmp_path)])
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "constants.json")
    assert data["results"]["Q"] == 6
    assert data["results"]["p_alpha"] == pytest.approx(12.0 / 4.5, rel=1e-15)


def test_constants_rejects_bad_alpha(tmp_path, capsys):
    rc = main(["constants", "--alpha", "0", "--output", str(tmp_path)])
    assert rc == EXIT_VALIDATION
    assert "error:" in capsys.readouterr().err


def test_verify_hls_small(tmp_path, capsys):
    rc = main(
        [
            "verify-hls",
            "--resolution",
            "8,6,8",
            "--ratio",
            "20",
            "--output",
            str(tmp_path),
            "--strict",
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "verify-hls.json")
    assert data["results"]["all_ok"] is True
    assert data["results"]["eps_invariance"]["spread_rel"] < 0.01
    assert data["results"]["upper_bound_run"]["quotient"] <= 8.0 * 1.02
    csv_lines = (tmp_path / "verify-hls.csv").read_text().splitlines()
    assert csv_lines[0] == "experiment,n,alpha,ratio,eps,norm"
    assert len(csv_lines) == 1 + 3
    assert "norm spread across eps" in capsys.readouterr().out


def test_extremal_sub_fixture(tmp_path):
    rc = main(["extremal-sub", "--output", str(tmp_path)])
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "extremal-sub.json")
    assert data["results"]["converged"] is True
    assert data["results"]["p"] == 1.5
    assert data["results"]["D"] == pytest.approx(2.0 ** (-1.0 / 3.0), rel=1e-12)
    assert len(data["results"]["f"]) == 2


def test_extremal_sub_sphere(tmp_path):
    rc = main(
        [
            "extremal-sub",
            "--manifold",
            "sphere",
            "--resolution",
            "6,6,6",
            "--p",
            "1.6",
            "--output",
            str(tmp_path),
            "--strict",
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "extremal-sub.json")
    assert data["results"]["converged"] is True
    # mid-window quotients sit well above the critical-limit value
    assert np.isfinite(data["results"]["D"]) and data["results"]["D"] > 0.0
    assert len(data["results"]["f"]) == 6**3


def test_extremal_sub_rejects_unknown_manifold(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["extremal-sub", "--manifold=torus", "--output", str(tmp_path)])
    assert exc.value.code == 2


def test_strict_flags_unconverged_run(tmp_path):
    args = [
        "extremal-sub",
        "--manifold",
        "sphere",
        "--resolution",
        "6,6,6",
        "--p",
        "1.4",
        "--tol",
        "1e-14",
        "--max-iter",
        "2",
        "--output",
        str(tmp_path),
    ]
    assert main(args) == EXIT_OK
    assert main(args + ["--strict"]) == EXIT_NOT_CONVERGED


def test_continuation_command(tmp_path):
    rc = main(
        [
            "continuation",
            "--resolution",
            "8,8,8",
            "--p-schedule",
            "1.7,1.5",
            "--output",
            str(tmp_path),
            "--strict",
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "continuation.json")
    stages = data["results"]["stages"]
    assert len(stages) == 2
    assert "f" not in stages[0] and "f" in stages[-1]
    assert data["results"]["all_converged"] is True
    assert stages[1]["D"] < stages[0]["D"]
    assert data["results"]["final_over_sharp"] > 0.0
    csv_lines = (tmp_path / "continuation.csv").read_text().splitlines()
    assert csv_lines[0] == "p,D,iterations,residual,converged"
    assert len(csv_lines) == 3


def test_lower_bound_command_and_determinism(tmp_path):
    args = [
        "lower-bound",
        "--eps",
        "1",
        "--R",
        "8",
        "--resolution",
        "8,8,8",
        "--output",
        str(tmp_path),
    ]
    assert main(args) == EXIT_OK
    first = (tmp_path / "lower-bound.json").read_bytes()
    first_csv = (tmp_path / "lower-bound.csv").read_bytes()
    assert main(args) == EXIT_OK
    assert (tmp_path / "lower-bound.json").read_bytes() == first
    assert (tmp_path / "lower-bound.csv").read_bytes() == first_csv
    data = json.loads(first)
    assert data["config"]["ratio"] == 8.0
    assert 0.0 < data["results"]["quotient"] < 8.0


def test_lower_bound_ratio_fills_R(tmp_path):
    rc = main(
        [
            "lower-bound",
            "--eps",
            "0.5",
            "--ratio",
            "10",
            "--resolution",
            "6,6,6",
            "--output",
            str(tmp_path),
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "lower-bound.json")
    assert data["config"]["R"] == 5.0
    assert data["results"]["R"] == 5.0


def test_lower_bound_rejects_bad_window(tmp_path, capsys):
    rc = main(
        [
            "lower-bound",
            "--eps",
            "2",
            "--R",
            "1",
            "--resolution",
            "6,6,6",
            "--output",
            str(tmp_path),
        ]
    )
    assert rc == EXIT_VALIDATION
    assert "error:" in capsys.readouterr().err


def test_mass_experiment_command(tmp_path):
    rc = main(
        [
            "mass-experiment",
            "--A0-list",
            "0,1",
            "--resolution",
            "6,6,6",
            "--output",
            str(tmp_path),
            "--strict",
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "mass-experiment.json")
    runs = data["results"]["runs"]
    assert len(runs) == 2
    assert runs[0]["delta"] == 0.0
    assert runs[1]["delta"] > 0.0
    assert data["results"]["deltas_nondecreasing"] is True
    assert data["results"]["deltas_positive_for_positive_mass"] is True
    csv_lines = (tmp_path / "mass-experiment.csv").read_text().splitlines()
    assert len(csv_lines) == 3


def test_covariance_check_command(tmp_path):
    rc = main(
        [
            "covariance-check",
            "--nodes",
            "20",
            "--pairs",
            "10",
            "--output",
            str(tmp_path),
            "--strict",
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "covariance-check.json")
    assert data["results"]["ok"] is True
    assert data["results"]["max_residual"] < 1e-10


def test_covariance_check_seeded_reproducible(tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        rc = main(
            [
                "covariance-check",
                "--nodes",
                "12",
                "--pairs",
                "5",
                "--seed",
                "7",
                "--output",
                str(out),
            ]
        )
        assert rc == EXIT_OK
    a = _read_json(out1 / "covariance-check.json")["results"]
    b = _read_json(out2 / "covariance-check.json")["results"]
    assert a == b


def test_curvature_residual_modes(tmp_path):
    for mode in ("constant", "random"):
        rc = main(
            [
                "curvature-residual",
                "--resolution",
                "8,8,8",
                "--mode",
                mode,
                "--output",
                str(tmp_path),
            ]
        )
        assert rc == EXIT_OK
        data = _read_json(tmp_path / "curvature-residual.json")
        assert data["results"]["mode"] == mode
        assert np.isfinite(data["results"]["residual"])
        assert data["results"]["residual"] > 0.0


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"alpha": 1.5, "n": 1}))
    rc = main(
        [
            "constants",
            "--config",
            str(cfg),
            "--alpha",
            "2.5",
            "--output",
            str(tmp_path),
        ]
    )
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "constants.json")
    # flag beats config file, config file beats default
    assert data["config"]["alpha"] == 2.5
    assert data["config"]["n"] == 1


def test_config_file_applies_without_flags(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"alpha": 1.5}))
    rc = main(["constants", "--config", str(cfg), "--output", str(tmp_path)])
    assert rc == EXIT_OK
    data = _read_json(tmp_path / "constants.json")
    assert data["config"]["alpha"] == 1.5


def test_unknown_config_key_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"alpah": 2.0}))
    rc = main(["constants", "--config", str(cfg), "--output", str(tmp_path)])
    assert rc == EXIT_VALIDATION
    err = capsys.readouterr().err
    assert "unknown config keys" in err and "alpah" in err


def test_broken_config_json_rejected(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("{not json")
    rc = main(["constants", "--config", str(cfg), "--output", str(tmp_path)])
    assert rc == EXIT_VALIDATION
    assert "error:" in capsys.readouterr().err


def test_config_must_be_object(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text("[1, 2, 3]")
    rc = main(["constants", "--config", str(cfg), "--output", str(tmp_path)])
    assert rc == EXIT_VALIDATION


def test_missing_subcommand_exits_with_usage():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_threads_flag_sets_blas_env(tmp_path, monkeypatch):
    for var in (
        "OMP_NUM_THREADS",
        "OPENBLAS_NUM_THREADS",
        "MKL_NUM_THREADS",
        "NUMEXPR_NUM_THREADS",
        "VECLIB_MAXIMUM_THREADS",
    ):
        monkeypatch.delenv(var, raising=False)
    rc = main(["constants", "--threads", "2", "--output", str(tmp_path)])
    assert rc == EXIT_OK
    assert os.environ["OMP_NUM_THREADS"] == "2"
    assert os.environ["OPENBLAS_NUM_THREADS"] == "2"


def test_threads_env_variable(tmp_path, monkeypatch):
    monkeypatch.delenv("OMP_NUM_THREADS", raising=False)
    monkeypatch.setenv("CRHLS_THREADS", "3")
    rc = main(["constants", "--output", str(tmp_path)])
    assert rc == EXIT_OK
    assert os.environ["OMP_NUM_THREADS"] == "3"


def test_invalid_thread_count(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("CRHLS_THREADS", "0")
    rc = main(["constants", "--output", str(tmp_path)])
    assert rc == EXIT_VALIDATION


def test_console_script_installed(tmp_path):
    proc = subprocess.run(
        ["crhls", "constants", "--output", str(tmp_path)],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert "sharp_constant" in proc.stdout


def test_module_invocation(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "crhls.cli", "constants", "--output", str(tmp_path)],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0


def test_package_version():
    import crhls

    assert crhls.__version__ == "0.1.0"
