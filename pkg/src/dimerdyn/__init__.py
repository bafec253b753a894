"""Lindblad dynamics of excitonic chromophore dimers with a Drude-Lorentz bath.

Units throughout: energies in meV, times in fs, temperatures in K,
rates in fs^-1.
"""

from .analysis import (
    CONVENTIONS,
    SweepPoint,
    SweepResult,
    TabularData,
    coherence_half_life_analytic,
    coherence_half_life_measured,
    figure_dataset,
    rate_summary,
    temperature_sweep,
    to_csv_text,
    trajectory_table,
)
from .bath import (
    BathParameters,
    HighTemperatureLimitWarning,
    RateSet,
    correlation_function,
    extract_lambda,
    lineshape,
    pure_dephasing_rate,
    spectral_density,
    thermal_rates,
)
from .config import DEFAULT_CONFIG, ConfigError, resolve_config
from .dimer import (
    DimerParameters,
    ExcitonStructure,
    beat_period,
    diagonalize,
    exciton_splitting,
    hamiltonian,
    to_energy_basis,
    to_site_basis,
)
from .dynamics import (
    ConvergenceError,
    DynamicsError,
    InvariantViolationError,
    LindbladModel,
    NonUniqueSteadyStateError,
    Trajectory,
    build_model,
    check_density_matrix,
    initial_density_matrix,
    propagate,
    steady_state,
)
from .units import HBAR_MEV_FS, KB_MEV_PER_K, MEV_PER_CM1, mev_from_wavenumber, thermal_energy

__version__ = "0.1.0"

__all__ = [
    "BathParameters",
    "CONVENTIONS",
    "ConfigError",
    "ConvergenceError",
    "DEFAULT_CONFIG",
    "DimerParameters",
    "DynamicsError",
    "ExcitonStructure",
    "HBAR_MEV_FS",
    "HighTemperatureLimitWarning",
    "InvariantViolationError",
    "KB_MEV_PER_K",
    "LindbladModel",
    "MEV_PER_CM1",
    "NonUniqueSteadyStateError",
    "RateSet",
    "SweepPoint",
    "SweepResult",
    "TabularData",
    "Trajectory",
    "beat_period",
    "build_model",
    "check_density_matrix",
    "coherence_half_life_analytic",
    "coherence_half_life_measured",
    "correlation_function",
    "diagonalize",
    "exciton_splitting",
    "extract_lambda",
    "figure_dataset",
    "hamiltonian",
    "initial_density_matrix",
    "lineshape",
    "mev_from_wavenumber",
    "propagate",
    "pure_dephasing_rate",
    "rate_summary",
    "resolve_config",
    "spectral_density",
    "steady_state",
    "temperature_sweep",
    "thermal_energy",
    "thermal_rates",
    "to_csv_text",
    "to_energy_basis",
    "to_site_basis",
    "trajectory_table",
]
