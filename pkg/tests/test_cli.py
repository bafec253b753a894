import json
import math
import subprocess
import sys

import numpy as np
import pytest

from dimerdyn import analysis, cli
from dimerdyn.units import mev_from_wavenumber


def write_config(path, cfg):
    path.write_text(json.dumps(cfg))
    return str(path)


def read_csv(path):
    text = path.read_text()
    header = analysis.parse_csv_header(text)
    lines = text.splitlines()
    columns = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:]]
    return header, columns, rows


def test_simulate_default_config(tmp_path):
    cfg_path = write_config(tmp_path / "cfg.json", {})
    out_path = tmp_path / "traj.csv"
    assert cli.main(["simulate", "--config", cfg_path, "--out", str(out_path)]) == 0
    header, columns, rows = read_csv(out_path)
    assert columns == list(analysis.TRAJECTORY_COLUMNS)
    first = dict(zip(columns, map(float, rows[0])))
    assert first["t_fs"] == 0.0
    assert first["rho11"] == pytest.approx(0.5, abs=1e-12)
    assert first["rho22"] == pytest.approx(0.5, abs=1e-12)
    assert first["abs_rho12"] == pytest.approx(0.5, abs=1e-12)
    assert header["config"]["dimer"]["J_mev"] == -34.0
    assert header["config"]["bath"]["lambda"] == {"value": 270.0, "unit": "cm1"}
    assert header["derived"]["gamma_phi_per_fs"] == pytest.approx(0.3902, abs=1e-4)
    assert header["conventions"] == analysis.CONVENTIONS


def test_simulate_single_point_grid(tmp_path):
    cfg_path = write_config(tmp_path / "cfg.json", {"grid": {"n_points": 1}})
    out_path = tmp_path / "traj.csv"
    assert cli.main(["simulate", "--config", cfg_path, "--out", str(out_path)]) == 0
    _, columns, rows = read_csv(out_path)
    assert len(rows) == 1
    row = dict(zip(columns, map(float, rows[0])))
    assert row["t_fs"] == 0.0
    assert row["abs_rho12"] == pytest.approx(0.5, abs=1e-12)


def test_simulate_invalid_temperature(tmp_path, capsys):
    cfg_path = write_config(tmp_path / "cfg.json", {"bath": {"temperature_K": -5.0}})
    code = cli.main(["simulate", "--config", cfg_path, "--out", str(tmp_path / "x.csv")])
    assert code == 2
    assert "bath.temperature_K must be > 0" in capsys.readouterr().err


def test_simulate_unknown_field(tmp_path, capsys):
    cfg_path = write_config(tmp_path / "cfg.json", {"bath": {"temp": 10.0}})
    assert cli.main(["simulate", "--config", cfg_path, "--out", str(tmp_path / "x.csv")]) == 2
    assert "bath.temp" in capsys.readouterr().err


def test_simulate_missing_config_is_io_failure(tmp_path):
    assert cli.main(["simulate", "--config", str(tmp_path / "nope.json"), "--out", str(tmp_path / "x.csv")]) == 1


def test_simulate_malformed_json_is_config_error(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text("{not json")
    assert cli.main(["simulate", "--config", str(cfg_path), "--out", str(tmp_path / "x.csv")]) == 2


def test_simulate_integrator_failure_exit_code(tmp_path):
    cfg = {
        "model": {"include_thermal": False, "include_dephasing": False},
        "grid": {"t_max_fs": 3000.0, "n_points": 61},
        "solver": {"rtol": 1e-2, "atol": 1e-2},
    }
    cfg_path = write_config(tmp_path / "cfg.json", cfg)
    assert cli.main(["simulate", "--config", cfg_path, "--out", str(tmp_path / "x.csv")]) == 3


def test_simulate_deterministic_and_self_describing(tmp_path):
    cfg_path = write_config(tmp_path / "cfg.json", {"grid": {"t_max_fs": 50.0, "n_points": 21}})
    out_a, out_b, out_c = (tmp_path / name for name in ("a.csv", "b.csv", "c.csv"))
    assert cli.main(["simulate", "--config", cfg_path, "--out", str(out_a)]) == 0
    assert cli.main(["simulate", "--config", cfg_path, "--out", str(out_b)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    # re-running from the embedded resolved config reproduces the file
    header = analysis.parse_csv_header(out_a.read_text())
    embedded_cfg = write_config(tmp_path / "embedded.json", header["config"])
    assert cli.main(["simulate", "--config", embedded_cfg, "--out", str(out_c)]) == 0
    assert out_a.read_bytes() == out_c.read_bytes()


def test_rates_default(tmp_path, capsys):
    cfg_path = write_config(tmp_path / "cfg.json", {})
    assert cli.main(["rates", "--config", cfg_path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["gamma_phi_per_fs"] == pytest.approx(0.3902, abs=1e-4)
    assert payload["splitting_mev"] == pytest.approx(68.0)
    assert payload["beat_period_fs"] == pytest.approx(60.82, abs=0.01)
    assert payload["steady_bright_pop"] == pytest.approx(0.9366, abs=1e-3)
    assert payload["half_life_fs"] == pytest.approx(0.888, abs=1e-3)


def test_rates_fig2_scenario(tmp_path, capsys):
    cfg = {
        "dimer": {"delta_mev": 59.28},
        "model": {"dephasing_basis": "energy"},
        "initial_state": {"kind": "exciton_mixture"},
    }
    cfg_path = write_config(tmp_path / "cfg.json", cfg)
    assert cli.main(["rates", "--config", cfg_path]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["steady_bright_pop"] == pytest.approx(0.9727, abs=1e-3)
    assert payload["splitting_mev"] == pytest.approx(90.21, abs=0.01)


def test_rates_unit_tag_equivalence(tmp_path, capsys):
    cm1_path = write_config(tmp_path / "cm1.json", {"bath": {"lambda": {"value": 270.0, "unit": "cm1"}}})
    mev_path = write_config(
        tmp_path / "mev.json",
        {"bath": {"lambda": {"value": mev_from_wavenumber(270.0), "unit": "mev"}}},
    )
    assert cli.main(["rates", "--config", cm1_path]) == 0
    out_cm1 = capsys.readouterr().out
    assert cli.main(["rates", "--config", mev_path]) == 0
    out_mev = capsys.readouterr().out
    assert out_cm1 == out_mev


def test_rates_rejects_degenerate_dimer(tmp_path, capsys):
    cfg_path = write_config(
        tmp_path / "cfg.json",
        {"dimer": {"J_mev": 0.0}, "model": {"include_thermal": False}},
    )
    assert cli.main(["rates", "--config", cfg_path]) == 2
    assert "splitting" in capsys.readouterr().err


def test_figures_fig1(tmp_path):
    out_dir = tmp_path / "figs"
    assert cli.main(["figures", "--figure", "fig1", "--out", str(out_dir)]) == 0
    site = out_dir / "fig1_site_basis.csv"
    energy = out_dir / "fig1_energy_basis.csv"
    manifest = json.loads((out_dir / "fig1_manifest.json").read_text())
    assert site.exists() and energy.exists()
    assert manifest["files"] == ["fig1_site_basis.csv", "fig1_energy_basis.csv"]
    assert manifest["figure"] == "fig1"


def test_figures_fig3(tmp_path):
    out_dir = tmp_path / "figs"
    assert cli.main(["figures", "--figure", "fig3", "--out", str(out_dir)]) == 0
    header, columns, rows = read_csv(out_dir / "fig3_half_life_vs_temperature.csv")
    assert columns == ["temperature_K", "gamma_phi_per_fs", "half_life_fs", "validity_flag"]
    assert len(rows) == 50
    assert rows[0][3] == "heuristic_extrapolation"
    assert header["figure"] == "fig3"


def test_figures_bad_id_exits_2():
    result = subprocess.run(
        [sys.executable, "-m", "dimerdyn.cli", "figures", "--figure", "fig9", "--out", "/tmp/nowhere"],
        capture_output=True,
    )
    assert result.returncode == 2


def test_figures_with_overrides(tmp_path):
    cfg_path = write_config(tmp_path / "ovr.json", {"sweep": {"n_points": 4}})
    out_dir = tmp_path / "figs"
    assert cli.main(["figures", "--figure", "fig3", "--out", str(out_dir), "--config", cfg_path]) == 0
    _, _, rows = read_csv(out_dir / "fig3_half_life_vs_temperature.csv")
    assert len(rows) == 4


def test_extract_lambda(capsys):
    assert cli.main(["extract-lambda", "--t2-fs", "1000", "--temperature-k", "293", "--tau-c-ps", "0.1"]) == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    values = {}
    for line in lines[:2]:
        key, _, val = line.partition(" = ")
        values[key] = float(val)
    assert values["lambda_cm1"] == pytest.approx(0.69, rel=5e-3)
    assert values["lambda_mev"] == pytest.approx(0.0858, abs=1e-4)
    assert "single-Debye" in lines[2]


def test_extract_lambda_scalings(capsys):
    def run(t2, tau_c):
        assert cli.main(["extract-lambda", "--t2-fs", str(t2), "--temperature-k", "293", "--tau-c-ps", str(tau_c)]) == 0
        return float(capsys.readouterr().out.splitlines()[1].partition(" = ")[2])

    base = run(1000.0, 0.1)
    assert run(2000.0, 0.1) == pytest.approx(0.5 * base, rel=1e-12)
    assert run(1000.0, 0.2) == pytest.approx(0.5 * base, rel=1e-12)
    assert run(1000.0, 0.2) == pytest.approx(0.345, abs=2e-3)


def test_extract_lambda_rejects_nonpositive(capsys):
    assert cli.main(["extract-lambda", "--t2-fs", "-1", "--temperature-k", "293", "--tau-c-ps", "0.1"]) == 2
    assert "t2_fs must be > 0" in capsys.readouterr().err


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "dimerdyn.cli", "extract-lambda", "--t2-fs", "1000",
         "--temperature-k", "293", "--tau-c-ps", "0.1"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert "lambda_cm1" in result.stdout
