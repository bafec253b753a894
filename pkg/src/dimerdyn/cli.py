"""Command-line interface.

Subcommands:
    simulate        propagate a scenario config to a trajectory CSV
    figures         emit the CSV datasets behind the stock figures
    rates           print the derived rate/summary JSON for a config
    extract-lambda  invert a dephasing time into a reorganization energy

Exit codes: 0 success, 1 I/O failure, 2 invalid configuration or
arguments, 3 integrator / invariant failure. All outputs are
deterministic: identical inputs produce byte-identical files (floats at
17 significant digits, '\\n' line endings, no timestamps), and every CSV
embeds its fully resolved config so the run can be reproduced from the
file alone.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis
from .bath import extract_lambda
from .config import (
    ConfigError,
    bath_from_config,
    dimer_from_config,
    grid_from_config,
    initial_state_from_config,
    model_from_config,
    resolve_config,
)
from .dynamics import DynamicsError, propagate
from .units import MEV_PER_CM1

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_DYNAMICS = 3


def _load_config(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise IOError(f"cannot read config file {path}: {exc}") from exc
    try:
        user = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    return resolve_config(user)


def _write_text(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def cmd_simulate(config_path: str, output_path: str) -> int:
    cfg = _load_config(config_path)
    model = model_from_config(cfg)
    rho0 = initial_state_from_config(cfg, model)
    grid = grid_from_config(cfg)
    traj = propagate(model, rho0, grid, rtol=cfg["solver"]["rtol"], atol=cfg["solver"]["atol"])
    header = {
        "config": cfg,
        "derived": analysis.rate_summary(dimer_from_config(cfg), bath_from_config(cfg)),
        "conventions": dict(analysis.CONVENTIONS),
    }
    table = analysis.trajectory_table(traj, "trajectory", header)
    _write_text(Path(output_path), analysis.to_csv_text(table))
    return EXIT_OK


def cmd_figures(figure_id: str, output_dir: str, config_path: str | None = None) -> int:
    overrides = None
    if config_path is not None:
        try:
            overrides = json.loads(Path(config_path).read_text())
        except OSError as exc:
            raise IOError(f"cannot read config file {config_path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file {config_path} is not valid JSON: {exc}") from exc
    if figure_id not in analysis.FIGURE_IDS:
        raise ConfigError(f"unknown figure id {figure_id!r} (use one of {list(analysis.FIGURE_IDS)})")
    try:
        tables = analysis.figure_dataset(figure_id, overrides)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    out = Path(output_dir)
    files = []
    for table in tables:
        filename = f"{table.name}.csv"
        _write_text(out / filename, analysis.to_csv_text(table))
        files.append(filename)
    manifest = {
        "figure": figure_id,
        "files": files,
        "parameters": tables[0].header.get("config", {}),
        "conventions": dict(analysis.CONVENTIONS),
    }
    _write_text(out / f"{figure_id}_manifest.json", json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    return EXIT_OK


def cmd_rates(config_path: str) -> int:
    cfg = _load_config(config_path)
    summary = analysis.rate_summary(dimer_from_config(cfg), bath_from_config(cfg))
    if summary["beat_period_fs"] is None:
        raise ConfigError("dimer has zero exciton splitting; thermal rates and beat period are undefined")
    print(json.dumps(summary, sort_keys=True))
    return EXIT_OK


def cmd_extract_lambda(t2_fs: float, temperature_k: float, tau_c_ps: float) -> int:
    for name, value in (("t2_fs", t2_fs), ("temperature_k", temperature_k), ("tau_c_ps", tau_c_ps)):
        if not value > 0:
            raise ConfigError(f"{name} must be > 0")
    lam_mev = extract_lambda(t2_fs, 1.0 / (1000.0 * tau_c_ps), temperature_k)
    print(f"lambda_mev = {lam_mev:.17g}")
    print(f"lambda_cm1 = {lam_mev / MEV_PER_CM1:.17g}")
    print(
        "caveat: single-Debye Drude-Lorentz inversion; multi-component dielectric "
        "baths yield different (typically much larger) reorganization energies for the same T2"
    )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dimerdyn",
        description="Lindblad dynamics of excitonic chromophore dimers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sim = sub.add_parser("simulate", help="propagate a scenario and write a trajectory CSV")
    p_sim.add_argument("--config", required=True, help="JSON scenario config")
    p_sim.add_argument("--out", required=True, help="output CSV path")

    p_fig = sub.add_parser("figures", help="write the CSV dataset(s) for a stock figure")
    p_fig.add_argument("--figure", required=True, choices=analysis.FIGURE_IDS, help="figure id")
    p_fig.add_argument("--out", required=True, help="output directory")
    p_fig.add_argument("--config", default=None, help="optional JSON overrides")

    p_rates = sub.add_parser("rates", help="print derived rates/summary JSON for a config")
    p_rates.add_argument("--config", required=True, help="JSON scenario config")

    p_ext = sub.add_parser("extract-lambda", help="reorganization energy from a dephasing time")
    p_ext.add_argument("--t2-fs", type=float, required=True, help="dephasing time T2 in fs")
    p_ext.add_argument("--temperature-k", type=float, required=True, help="temperature in K")
    p_ext.add_argument("--tau-c-ps", type=float, required=True, help="bath correlation time in ps")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(args.config, args.out)
        if args.command == "figures":
            return cmd_figures(args.figure, args.out, args.config)
        if args.command == "rates":
            return cmd_rates(args.config)
        if args.command == "extract-lambda":
            return cmd_extract_lambda(args.t2_fs, args.temperature_k, args.tau_c_ps)
        parser.error(f"unknown command {args.command!r}")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DynamicsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DYNAMICS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_CONFIG


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
