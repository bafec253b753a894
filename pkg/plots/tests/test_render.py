import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

import dimerplots as dp


@pytest.fixture(scope="session")
def data_dir(tmp_path_factory):
    """CSV datasets produced through the simulator's CLI, the only
    interface this package consumes."""
    out = tmp_path_factory.mktemp("data")
    for fig in ("fig1", "fig2", "fig3"):
        result = subprocess.run(
            [sys.executable, "-m", "dimerdyn.cli", "figures", "--figure", fig, "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert result.returncode == 0, result.stderr
    return out


@pytest.mark.parametrize("figure_id", ["fig1", "fig2", "fig3"])
def test_render_all_figures(figure_id, data_dir, tmp_path):
    spec = dp.default_spec(figure_id, data_dir, tmp_path)
    out = dp.render(spec)
    assert out.exists()
    assert out.stat().st_size > 5000
    # idempotent re-render overwrites in place
    again = dp.render(spec)
    assert again == out
    assert out.stat().st_size > 5000


def test_fig2_data_converges_to_thermal_bias(data_dir):
    _, columns = dp.read_table(data_dir / "fig2_energy_basis.csv")
    assert columns["rho_pp"][-1] == pytest.approx(0.973, abs=1e-3)
    assert columns["rho_mm"][-1] == pytest.approx(0.027, abs=1e-3)


def test_fig3_log_log_slope_is_minus_one(data_dir):
    _, columns = dp.read_table(data_dir / "fig3_half_life_vs_temperature.csv")
    slope = np.polyfit(np.log10(columns["temperature_K"]), np.log10(columns["half_life_fs"]), 1)[0]
    assert abs(slope + 1.0) < 1e-6


def test_empty_csv_rejected_without_output(data_dir, tmp_path):
    src = (data_dir / "fig3_half_life_vs_temperature.csv").read_text()
    header_line, column_line = src.splitlines()[:2]
    empty = tmp_path / "fig3_half_life_vs_temperature.csv"
    empty.write_text(header_line + "\n" + column_line + "\n")
    spec = dp.default_spec("fig3", tmp_path, tmp_path / "img")
    with pytest.raises(dp.EmptyDataError):
        dp.render(spec)
    assert not spec.output_path.exists()


def test_missing_column_named(data_dir, tmp_path):
    lines = (data_dir / "fig3_half_life_vs_temperature.csv").read_text().splitlines()
    # drop the half_life_fs column
    stripped = [lines[0]] + [",".join(np.delete(line.split(","), 2)) for line in lines[1:]]
    broken = tmp_path / "fig3_half_life_vs_temperature.csv"
    broken.write_text("\n".join(stripped) + "\n")
    spec = dp.default_spec("fig3", tmp_path, tmp_path / "img")
    with pytest.raises(dp.MissingColumnError, match="half_life_fs"):
        dp.render(spec)
    assert not spec.output_path.exists()


def test_convention_mismatch_refused(data_dir, tmp_path):
    lines = (data_dir / "fig2_energy_basis.csv").read_text().splitlines()
    header = json.loads(lines[0][2:])
    header["conventions"]["half_life"] = "t_half = ln(2)/gamma_phi"
    lines[0] = "# " + json.dumps(header, sort_keys=True, separators=(",", ":"))
    tampered = tmp_path / "fig2_energy_basis.csv"
    tampered.write_text("\n".join(lines) + "\n")
    spec = dp.default_spec("fig2", tmp_path, tmp_path / "img")
    with pytest.raises(dp.ConventionMismatchError):
        dp.render(spec)
    assert not spec.output_path.exists()


def test_unknown_figure_id():
    with pytest.raises(dp.RenderError):
        dp.default_spec("fig7", ".", ".")


def test_script_invocation(data_dir, tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "dimerplots", "--figure", "fig3", "--data", str(data_dir), "--out", str(tmp_path)],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr
    assert (tmp_path / "fig3_cryogenic_half_life.png").exists()


def test_script_reports_render_errors(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "dimerplots", "--figure", "fig1", "--data", str(tmp_path), "--out", str(tmp_path)],
        capture_output=True,
        text=True,
    )
    assert result.returncode in (1, 2)
    assert "error" in result.stderr
