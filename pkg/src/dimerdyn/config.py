"""Scenario configuration: defaults, validation, and object builders.

A scenario is a plain JSON-style dict with five blocks (dimer, bath,
model, initial_state, grid, solver). Validation is strict: unknown
fields and out-of-range values are rejected with messages naming the
offending field, and the reorganization energy must carry an explicit
unit tag ("mev" or "cm1") — no autodetection.

The defaults reproduce the Venus-like yellow-fluorescent-protein
homodimer scenario: J = -34 meV, delta = 0, lambda = 270 cm^-1,
tau_c = 0.1 ps, T = 293 K, dephasing operator in the site basis.
"""

from __future__ import annotations

import copy
import math

import numpy as np

from .bath import BathParameters
from .dimer import DimerParameters
from .dynamics import LindbladModel, build_model, initial_density_matrix

LOG_GRID_DECADES = 4.0  # log-spaced grids start at t_max * 10**-LOG_GRID_DECADES


class ConfigError(ValueError):
    """Invalid scenario configuration; message names the field."""


DEFAULT_CONFIG = {
    "dimer": {"J_mev": -34.0, "delta_mev": 0.0, "epsilon_bar_mev": 0.0},
    "bath": {
        "lambda": {"value": 270.0, "unit": "cm1"},
        "tau_c_ps": 0.1,
        "temperature_K": 293.0,
    },
    "model": {
        "dephasing_basis": "site",
        "include_thermal": True,
        "include_dephasing": True,
    },
    "initial_state": {
        "kind": "site_superposition",
        "phase_rad": math.pi / 2,
        "bright_fraction": 0.5,
    },
    "grid": {"t_max_fs": 300.0, "n_points": 601, "spacing": "linear"},
    "solver": {"rtol": 1e-9, "atol": 1e-12},
}


def merge_config(base: dict, override: dict, path: str = "") -> dict:
    """Deep-merge ``override`` into ``base``, rejecting unknown fields."""
    out = copy.deepcopy(base)
    for key, value in override.items():
        where = f"{path}.{key}" if path else key
        if key not in base:
            raise ConfigError(f"unknown config field {where}")
        if isinstance(base[key], dict):
            if not isinstance(value, dict):
                raise ConfigError(f"{where} must be an object")
            out[key] = merge_config(base[key], value, where)
        else:
            out[key] = value
    return out


def _require_number(cfg, path):
    value = cfg
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{path} must be a number")
    if not math.isfinite(value):
        raise ConfigError(f"{path} must be finite")
    return float(value)


def _require_positive(cfg, path):
    value = _require_number(cfg, path)
    if not value > 0:
        raise ConfigError(f"{path} must be > 0")
    return value


def _require_choice(value, path, choices):
    if value not in choices:
        raise ConfigError(f"{path} must be one of {sorted(choices)}")
    return value


def _require_bool(value, path):
    if not isinstance(value, bool):
        raise ConfigError(f"{path} must be true or false")
    return value


def resolve_config(user: dict | None = None) -> dict:
    """Merge a (partial) user config into the defaults and validate it."""
    if user is None:
        user = {}
    if not isinstance(user, dict):
        raise ConfigError("config must be a JSON object")
    cfg = merge_config(DEFAULT_CONFIG, user)

    _require_number(cfg["dimer"]["J_mev"], "dimer.J_mev")
    delta = _require_number(cfg["dimer"]["delta_mev"], "dimer.delta_mev")
    if delta < 0:
        raise ConfigError("dimer.delta_mev must be >= 0")
    _require_number(cfg["dimer"]["epsilon_bar_mev"], "dimer.epsilon_bar_mev")

    _require_positive(cfg["bath"]["lambda"]["value"], "bath.lambda.value")
    _require_choice(cfg["bath"]["lambda"]["unit"], "bath.lambda.unit", {"mev", "cm1"})
    _require_positive(cfg["bath"]["tau_c_ps"], "bath.tau_c_ps")
    _require_positive(cfg["bath"]["temperature_K"], "bath.temperature_K")

    _require_choice(cfg["model"]["dephasing_basis"], "model.dephasing_basis", {"site", "energy"})
    _require_bool(cfg["model"]["include_thermal"], "model.include_thermal")
    _require_bool(cfg["model"]["include_dephasing"], "model.include_dephasing")

    _require_choice(
        cfg["initial_state"]["kind"],
        "initial_state.kind",
        {"site_superposition", "bright", "dark", "exciton_mixture"},
    )
    _require_number(cfg["initial_state"]["phase_rad"], "initial_state.phase_rad")
    frac = _require_number(cfg["initial_state"]["bright_fraction"], "initial_state.bright_fraction")
    if not 0.0 <= frac <= 1.0:
        raise ConfigError("initial_state.bright_fraction must lie in [0, 1]")

    _require_positive(cfg["grid"]["t_max_fs"], "grid.t_max_fs")
    n_points = cfg["grid"]["n_points"]
    if isinstance(n_points, bool) or not isinstance(n_points, int):
        raise ConfigError("grid.n_points must be an integer")
    if n_points < 1:
        raise ConfigError("grid.n_points must be >= 1")
    _require_choice(cfg["grid"]["spacing"], "grid.spacing", {"linear", "log"})

    _require_positive(cfg["solver"]["rtol"], "solver.rtol")
    _require_positive(cfg["solver"]["atol"], "solver.atol")
    return cfg


def dimer_from_config(cfg: dict) -> DimerParameters:
    d = cfg["dimer"]
    return DimerParameters(
        coupling_j=float(d["J_mev"]),
        delta=float(d["delta_mev"]),
        epsilon_bar=float(d["epsilon_bar_mev"]),
    )


def bath_from_config(cfg: dict) -> BathParameters:
    b = cfg["bath"]
    return BathParameters.from_reorganization(
        b["lambda"]["value"], b["lambda"]["unit"], b["tau_c_ps"], b["temperature_K"]
    )


def model_from_config(cfg: dict) -> LindbladModel:
    m = cfg["model"]
    return build_model(
        dimer_from_config(cfg),
        bath_from_config(cfg),
        dephasing_basis=m["dephasing_basis"],
        include_dephasing=m["include_dephasing"],
        include_thermal=m["include_thermal"],
    )


def initial_state_from_config(cfg: dict, model: LindbladModel) -> np.ndarray:
    ini = cfg["initial_state"]
    return initial_density_matrix(
        ini["kind"],
        model.exciton,
        phase=float(ini["phase_rad"]),
        bright_fraction=float(ini["bright_fraction"]),
    )


def grid_from_config(cfg: dict) -> np.ndarray:
    g = cfg["grid"]
    n = g["n_points"]
    t_max = float(g["t_max_fs"])
    if n == 1:
        return np.array([0.0])
    if g["spacing"] == "linear":
        return np.linspace(0.0, t_max, n)
    if n == 2:
        return np.array([0.0, t_max])
    tail = np.geomspace(t_max * 10.0 ** (-LOG_GRID_DECADES), t_max, n - 1)
    return np.concatenate([[0.0], tail])
