"""Render the stock figures from dimerdyn CSV datasets.

Reads only the CSV files written by ``dimerdyn figures`` (and their
'#'-prefixed JSON headers); the simulation package itself is never
imported. Rendering refuses to run if a file's recorded half-life /
dissipator conventions differ from the ones hard-coded below, so a
figure can never silently mix data produced under a different rate
normalization.

Invoked as a script:  python -m dimerplots --figure fig1 --data DIR --out DIR
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

EXPECTED_CONVENTIONS = {
    "dissipator": "D[sigma_z] with rate gamma_phi; coherence in the dephasing basis decays as exp(-2*gamma_phi*t)",
    "half_life": "t_half = ln(2)/(2*gamma_phi)",
}

FIGURE_IDS = ("fig1", "fig2", "fig3")


class RenderError(Exception):
    """Base class for rendering failures."""


class ConventionMismatchError(RenderError):
    """The CSV was produced under a different rate/half-life convention."""


class MissingColumnError(RenderError):
    """A required column is absent from the CSV."""


class EmptyDataError(RenderError):
    """The CSV contains no data rows."""


@dataclass
class FigureSpec:
    """What to read, how to lay it out, and where to write the image."""

    figure_id: str
    csv_paths: dict          # panel name -> CSV path
    output_path: Path
    panel_layout: tuple = (1, 1)
    axis_labels: dict = field(default_factory=dict)   # panel -> (xlabel, ylabel)
    series: dict = field(default_factory=dict)        # panel -> [(column, label, style)]


def default_spec(figure_id: str, data_dir, out_dir) -> FigureSpec:
    """Spec matching the file layout produced by ``dimerdyn figures``."""
    data_dir, out_dir = Path(data_dir), Path(out_dir)
    if figure_id == "fig1":
        return FigureSpec(
            figure_id="fig1",
            csv_paths={
                "site_basis": data_dir / "fig1_site_basis.csv",
                "energy_basis": data_dir / "fig1_energy_basis.csv",
            },
            output_path=out_dir / "fig1_room_temperature_dynamics.png",
            panel_layout=(1, 2),
            axis_labels={
                "site_basis": ("time (fs)", "site-basis populations / coherence"),
                "energy_basis": ("time (fs)", "exciton populations"),
            },
            series={
                "site_basis": [
                    ("rho11", r"$\rho_{11}$", dict(color="tab:blue")),
                    ("rho22", r"$\rho_{22}$", dict(color="tab:orange")),
                    ("abs_rho12", r"$|\rho_{12}|$", dict(color="tab:green", linestyle="--")),
                ],
                "energy_basis": [
                    ("rho_pp", r"$\rho_{++}$", dict(color="tab:blue", linestyle="--")),
                    ("rho_mm", r"$\rho_{--}$", dict(color="tab:red")),
                ],
            },
        )
    if figure_id == "fig2":
        return FigureSpec(
            figure_id="fig2",
            csv_paths={"energy_basis": data_dir / "fig2_energy_basis.csv"},
            output_path=out_dir / "fig2_bright_state_funneling.png",
            axis_labels={"energy_basis": ("time (fs)", "exciton populations")},
            series={
                "energy_basis": [
                    ("rho_pp", r"$\rho_{++}$ (bright)", dict(color="tab:blue", linestyle="--")),
                    ("rho_mm", r"$\rho_{--}$ (dark)", dict(color="tab:red")),
                ]
            },
        )
    if figure_id == "fig3":
        return FigureSpec(
            figure_id="fig3",
            csv_paths={"half_life": data_dir / "fig3_half_life_vs_temperature.csv"},
            output_path=out_dir / "fig3_cryogenic_half_life.png",
            axis_labels={"half_life": ("temperature (K)", r"coherence half-life $t_{1/2}$ (fs)")},
            series={"half_life": [("half_life_fs", r"$t_{1/2} = \ln 2/(2\gamma_\phi)$", dict(color="tab:blue", marker="o"))]},
        )
    raise RenderError(f"unknown figure id {figure_id!r} (use one of {FIGURE_IDS})")


def read_table(path):
    """Parse a dimerdyn CSV into (header dict, column dict).

    Numeric columns become float arrays; non-numeric cells (flags) stay
    as string lists. Verifies the embedded conventions before returning.
    """
    path = Path(path)
    text = path.read_text()
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# "):
        raise RenderError(f"{path.name}: missing '# ' JSON header line")
    header = json.loads(lines[0][2:])
    conventions = header.get("conventions")
    if conventions != EXPECTED_CONVENTIONS:
        raise ConventionMismatchError(
            f"{path.name}: recorded conventions {conventions!r} do not match the expected "
            f"half-life/dissipator conventions {EXPECTED_CONVENTIONS!r}"
        )
    if len(lines) < 2 or not lines[1]:
        raise EmptyDataError(f"{path.name}: no column header")
    names = lines[1].split(",")
    rows = [line.split(",") for line in lines[2:] if line]
    if not rows:
        raise EmptyDataError(f"{path.name}: no data rows")
    columns = {}
    for k, name in enumerate(names):
        cells = [row[k] for row in rows]
        try:
            columns[name] = np.array([float(c) for c in cells])
        except ValueError:
            columns[name] = cells
    return header, columns


def _require(columns, names, filename):
    for name in names:
        if name not in columns:
            raise MissingColumnError(f"{filename}: required column {name!r} is missing")


def render(spec: FigureSpec) -> Path:
    """Render the figure and write the image; returns the output path.

    All input validation happens before the output file is touched, so a
    failed render never leaves a partial image behind.
    """
    tables = {}
    for panel, path in spec.csv_paths.items():
        header, columns = read_table(path)
        x_col = "temperature_K" if spec.figure_id == "fig3" else "t_fs"
        _require(columns, [x_col] + [c for c, _, _ in spec.series[panel]], Path(path).name)
        tables[panel] = (header, columns)

    n_rows, n_cols = spec.panel_layout if spec.figure_id == "fig1" else (1, 1)
    fig, axes = plt.subplots(n_rows, n_cols, figsize=(5.0 * n_cols, 3.6 * n_rows))
    axes = np.atleast_1d(axes).ravel()

    for ax, (panel, (header, columns)) in zip(axes, tables.items()):
        if spec.figure_id == "fig3":
            x = columns["temperature_K"]
            for col, label, style in spec.series[panel]:
                ax.loglog(x, columns[col], label=label, markersize=3, **style)
        else:
            x = columns["t_fs"]
            for col, label, style in spec.series[panel]:
                ax.plot(x, columns[col], label=label, **style)
            ax.set_ylim(-0.05, 1.05)
        xlabel, ylabel = spec.axis_labels[panel]
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.legend(frameon=False)
        ax.set_title(panel.replace("_", " "))

    fig.tight_layout()
    spec.output_path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.output_path, dpi=150)
    plt.close(fig)
    return spec.output_path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="dimerdyn-plot", description="Render dimerdyn figures from CSV data")
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS, help="figure id")
    parser.add_argument("--data", required=True, help="directory containing the CSV files")
    parser.add_argument("--out", required=True, help="output directory for the image")
    args = parser.parse_args(argv)
    try:
        out = render(default_spec(args.figure, args.data, args.out))
    except RenderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
