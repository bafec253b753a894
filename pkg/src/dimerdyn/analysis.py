"""Derived quantities: coherence half-lives, temperature sweeps, figure data.

Half-life convention: the dephasing half-life reported everywhere is

    t_half = ln(2) / (2 gamma_phi),

i.e. the time for the coherence magnitude to halve under a sigma_z
dissipator with Lindblad rate gamma_phi (which decays coherence as
exp(-2 gamma_phi t)). Note that the beat-envelope scale 2 pi hbar / (2 dE)
sometimes quoted for coherent oscillations is a different quantity and
is not used for any assertion here.
"""

from __future__ import annotations

import copy
import json
import warnings
from dataclasses import dataclass
from math import log

import numpy as np

from . import config as _config
from .bath import BathParameters, HighTemperatureLimitWarning, pure_dephasing_rate, thermal_rates
from .dimer import DimerParameters, beat_period, diagonalize, exciton_splitting
from .dynamics import Trajectory, build_model, propagate, steady_state

CONVENTIONS = {
    "dissipator": "D[sigma_z] with rate gamma_phi; coherence in the dephasing basis decays as exp(-2*gamma_phi*t)",
    "half_life": "t_half = ln(2)/(2*gamma_phi)",
}

FIGURE_IDS = ("fig1", "fig2", "fig3")

TRAJECTORY_COLUMNS = [
    "t_fs",
    "rho11",
    "rho22",
    "re_rho12",
    "im_rho12",
    "abs_rho12",
    "rho_pp",
    "rho_mm",
    "re_rho_pm",
    "im_rho_pm",
    "abs_rho_pm",
]


def coherence_half_life_analytic(b: BathParameters) -> float:
    """Dephasing half-life ln(2)/(2 gamma_phi) in fs."""
    return log(2.0) / (2.0 * pure_dephasing_rate(b))


def coherence_half_life_measured(traj: Trajectory, basis: str = "site") -> float:
    """First time the coherence-magnitude envelope falls below half its start.

    The envelope is taken through the local maxima of the series; the
    crossing is located on the raw series (linear interpolation) inside
    the first inter-maximum bracket whose peak drops below half the
    initial value. Raises ValueError("no half-life within grid") when
    the envelope never decays that far, e.g. for undamped oscillations.
    """
    if basis == "site":
        series = np.asarray(traj.site_coherence_abs, dtype=float)
    elif basis == "energy":
        series = np.asarray(traj.energy_coherence_abs, dtype=float)
    else:
        raise ValueError(f"unknown basis {basis!r} (use 'site' or 'energy')")
    t = np.asarray(traj.times, dtype=float)
    c0 = series[0]
    if not c0 > 0:
        raise ValueError("coherence series must start above 0")
    level = 0.5 * c0

    interior = np.nonzero(
        (series[1:-1] > series[:-2]) & (series[1:-1] >= series[2:])
    )[0] + 1
    if interior.size:
        nodes = np.concatenate([[0], interior])
        below = np.nonzero(series[nodes] < level)[0]
        if below.size == 0:
            raise ValueError("no half-life within grid")
        lo, hi = nodes[below[0] - 1], nodes[below[0]]
    else:
        lo, hi = 0, series.size - 1

    for i in range(lo, hi):
        if series[i] >= level > series[i + 1]:
            frac = (series[i] - level) / (series[i] - series[i + 1])
            return float(t[i] + frac * (t[i + 1] - t[i]))
    raise ValueError("no half-life within grid")


@dataclass(frozen=True)
class SweepPoint:
    value: float
    gamma_phi: float
    half_life_fs: float
    steady_bright_pop: float
    validity_flag: str


@dataclass(frozen=True)
class SweepResult:
    sweep_variable: str
    unit: str
    points: tuple


def temperature_sweep(b_template: BathParameters, temps, p: DimerParameters) -> SweepResult:
    """Dephasing rate, half-life and thermal bright-state bias per temperature.

    ``steady_bright_pop`` is the stationary bright population of the
    thermal-only model (detailed balance, i.e. the Boltzmann bias).
    Points where k_B T < 3 hbar gamma_c are flagged
    "heuristic_extrapolation"; the per-point warning is recorded in the
    flag instead of being emitted 1 time per point.
    """
    temps = np.asarray(temps, dtype=float)
    if np.any(temps <= 0):
        raise ValueError("temperatures must be > 0")
    if np.any(np.diff(temps) < 0):
        raise ValueError("temperatures must be sorted ascending")
    structure = diagonalize(p)
    points = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", HighTemperatureLimitWarning)
        for temp in temps:
            b = BathParameters(b_template.lambda_reorg, b_template.gamma_c, float(temp))
            model = build_model(p, b, include_dephasing=False, include_thermal=True)
            rho_ss = steady_state(model)
            v = structure.bright_vector
            bright_pop = float((v @ rho_ss @ v).real)
            points.append(
                SweepPoint(
                    value=float(temp),
                    gamma_phi=pure_dephasing_rate(b),
                    half_life_fs=coherence_half_life_analytic(b),
                    steady_bright_pop=bright_pop,
                    validity_flag="high_T_valid" if b.is_high_temperature else "heuristic_extrapolation",
                )
            )
    return SweepResult(sweep_variable="temperature", unit="K", points=tuple(points))


def rate_summary(p: DimerParameters, b: BathParameters) -> dict:
    """All derived scenario quantities in one dict (None where undefined).

    ``steady_bright_pop`` is the thermal-equilibrium (detailed-balance)
    bright population, independent of where dephasing acts.
    """
    de = exciton_splitting(p)
    summary = {
        "gamma_phi_per_fs": pure_dephasing_rate(b),
        "gamma_down_per_fs": None,
        "gamma_up_per_fs": None,
        "splitting_mev": de,
        "beat_period_fs": None,
        "steady_bright_pop": None,
        "half_life_fs": coherence_half_life_analytic(b),
    }
    if de > 0:
        structure = diagonalize(p)
        rates = thermal_rates(b, structure)
        model = build_model(p, b, include_dephasing=False, include_thermal=True)
        rho_ss = steady_state(model)
        v = structure.bright_vector
        summary.update(
            gamma_down_per_fs=rates.gamma_down,
            gamma_up_per_fs=rates.gamma_up,
            beat_period_fs=beat_period(p),
            steady_bright_pop=float((v @ rho_ss @ v).real),
        )
    return summary


@dataclass(frozen=True)
class TabularData:
    """A named table with a JSON-serializable provenance header."""

    name: str
    header: dict
    columns: tuple
    data: dict


def _format_cell(value) -> str:
    if isinstance(value, str):
        return value
    if value is None:
        return ""
    return format(float(value), ".17g")


def to_csv_text(table: TabularData) -> str:
    """Render a table as CSV with a '#'-prefixed JSON header line.

    Floats are written with 17 significant digits so the file
    round-trips bit-exactly; output is fully deterministic.
    """
    lines = ["# " + json.dumps(table.header, sort_keys=True, separators=(",", ":"))]
    lines.append(",".join(table.columns))
    n_rows = len(table.data[table.columns[0]])
    for i in range(n_rows):
        lines.append(",".join(_format_cell(table.data[c][i]) for c in table.columns))
    return "\n".join(lines) + "\n"


def parse_csv_header(text: str) -> dict:
    """Read back the JSON header of a CSV produced by ``to_csv_text``."""
    first = text.splitlines()[0]
    if not first.startswith("# "):
        raise ValueError("missing '# ' JSON header line")
    return json.loads(first[2:])


def trajectory_table(traj: Trajectory, name: str, header: dict) -> TabularData:
    data = {
        "t_fs": traj.times,
        "rho11": traj.site_pop_1,
        "rho22": traj.site_pop_2,
        "re_rho12": traj.site_coherence_re,
        "im_rho12": traj.site_coherence_im,
        "abs_rho12": traj.site_coherence_abs,
        "rho_pp": traj.energy_pop_plus,
        "rho_mm": traj.energy_pop_minus,
        "re_rho_pm": traj.energy_coherence_re,
        "im_rho_pm": traj.energy_coherence_im,
        "abs_rho_pm": traj.energy_coherence_abs,
    }
    return TabularData(name=name, header=header, columns=tuple(TRAJECTORY_COLUMNS), data=data)


def _scenario_header(cfg: dict, figure: str | None = None, panel: str | None = None) -> dict:
    header = {
        "config": copy.deepcopy(cfg),
        "derived": rate_summary(_config.dimer_from_config(cfg), _config.bath_from_config(cfg)),
        "conventions": dict(CONVENTIONS),
    }
    if figure is not None:
        header["figure"] = figure
    if panel is not None:
        header["panel"] = panel
    return header


def _run_scenario(cfg: dict) -> Trajectory:
    model = _config.model_from_config(cfg)
    rho0 = _config.initial_state_from_config(cfg, model)
    grid = _config.grid_from_config(cfg)
    return propagate(model, rho0, grid, rtol=cfg["solver"]["rtol"], atol=cfg["solver"]["atol"])


FIG1_BASE = {
    "grid": {"t_max_fs": 300.0, "n_points": 601},
}

FIG2_BASE = {
    "dimer": {"delta_mev": 59.28},
    "model": {"dephasing_basis": "energy"},
    "initial_state": {"kind": "exciton_mixture", "bright_fraction": 0.5},
    "grid": {"t_max_fs": 2600.0, "n_points": 651},
}

FIG3_SWEEP = {"t_min_K": 0.01, "t_max_K": 0.1, "n_points": 50}


def figure_dataset(figure_id: str, overrides: dict | None = None) -> list:
    """Datasets behind the three stock figures.

    fig1: room-temperature homodimer dynamics; two panels (site basis
          from the 50:50 site superposition with phase pi/2, energy
          basis from bright-state initialization).
    fig2: exciton populations relaxing from a 50:50 bright-dark mixture
          for the Stokes-shifted dimer (delta = 59.28 meV); dephasing
          acts in the energy basis so populations follow pure thermal
          transfer, matching the strong bright-state bias.
    fig3: dephasing half-life versus temperature on a 50-point log grid
          over 10-100 mK, with per-point validity flags.

    ``overrides`` is a partial scenario config merged over the figure's
    defaults (fig3 additionally accepts a "sweep" block with t_min_K,
    t_max_K, n_points).
    """
    overrides = copy.deepcopy(overrides) if overrides else {}
    if figure_id == "fig1":
        cfg = _figure_config(FIG1_BASE, overrides)
        tables = []
        for panel, initial in (
            ("site_basis", {"kind": "site_superposition", "phase_rad": float(np.pi / 2)}),
            ("energy_basis", {"kind": "bright"}),
        ):
            panel_cfg = copy.deepcopy(cfg)
            panel_cfg["initial_state"].update(initial)
            traj = _run_scenario(panel_cfg)
            header = _scenario_header(panel_cfg, figure="fig1", panel=panel)
            tables.append(trajectory_table(traj, f"fig1_{panel}", header))
        return tables
    if figure_id == "fig2":
        cfg = _figure_config(FIG2_BASE, overrides)
        traj = _run_scenario(cfg)
        header = _scenario_header(cfg, figure="fig2", panel="energy_basis")
        return [trajectory_table(traj, "fig2_energy_basis", header)]
    if figure_id == "fig3":
        sweep_spec = dict(FIG3_SWEEP)
        sweep_spec.update(overrides.pop("sweep", {}))
        cfg = _figure_config({}, overrides)
        p = _config.dimer_from_config(cfg)
        b = _config.bath_from_config(cfg)
        temps = np.geomspace(sweep_spec["t_min_K"], sweep_spec["t_max_K"], int(sweep_spec["n_points"]))
        sweep = temperature_sweep(b, temps, p)
        header = {
            "config": {"dimer": cfg["dimer"], "bath": cfg["bath"], "sweep": sweep_spec},
            "derived": rate_summary(p, b),
            "conventions": dict(CONVENTIONS),
            "figure": "fig3",
            "panel": "half_life_vs_temperature",
        }
        data = {
            "temperature_K": [pt.value for pt in sweep.points],
            "gamma_phi_per_fs": [pt.gamma_phi for pt in sweep.points],
            "half_life_fs": [pt.half_life_fs for pt in sweep.points],
            "validity_flag": [pt.validity_flag for pt in sweep.points],
        }
        return [
            TabularData(
                name="fig3_half_life_vs_temperature",
                header=header,
                columns=("temperature_K", "gamma_phi_per_fs", "half_life_fs", "validity_flag"),
                data=data,
            )
        ]
    raise ValueError(f"unknown figure id {figure_id!r} (use one of {FIGURE_IDS})")


def _figure_config(base_partial: dict, overrides: dict) -> dict:
    cfg = _config.merge_config(_config.DEFAULT_CONFIG, base_partial)
    cfg = _config.merge_config(cfg, overrides)
    return _config.resolve_config(cfg)
