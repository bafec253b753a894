"""Drude-Lorentz bath: spectral density, correlation function, rates.

The bath is an ohmic spectral density with Lorentzian cutoff,

    J(w) = 2 lambda w gamma_c / (w^2 + gamma_c^2),

parametrized by the reorganization energy lambda (meV), the cutoff
gamma_c = 1/tau_c (fs^-1) and the temperature T (K). All rate formulas
below use the classical / high-temperature limit of the bath
correlation function (Matsubara terms dropped), which requires
k_B T >> hbar gamma_c; a diagnostic warning is emitted whenever
k_B T < 3 hbar gamma_c so that low-temperature numbers are clearly
flagged as heuristic.

In the motional-narrowing (fast-bath) regime the pure-dephasing rate is

    gamma_phi = 2 lambda k_B T / (hbar^2 gamma_c),

and the downhill exciton transfer rate follows the golden rule applied
to independent, identical site-diagonal baths,

    gamma_down = sin^2(2 theta) J(w0) [coth(beta hbar w0 / 2) + 1] / hbar

at the excitonic transition frequency w0 = dE/hbar. The uphill rate is
constructed as gamma_up = gamma_down * exp(-beta dE) so that detailed
balance holds bit-exactly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .dimer import ExcitonStructure
from .units import HBAR_MEV_FS, KB_MEV_PER_K, mev_from_wavenumber

HIGH_T_RATIO_THRESHOLD = 3.0


class HighTemperatureLimitWarning(UserWarning):
    """k_B T is not large against hbar gamma_c; rates are heuristic."""


@dataclass(frozen=True)
class BathParameters:
    """Drude-Lorentz bath parameters.

    lambda_reorg : reorganization energy, meV
    gamma_c      : bath cutoff 1/tau_c, fs^-1
    temperature  : K
    """

    lambda_reorg: float
    gamma_c: float
    temperature: float

    def __post_init__(self):
        if not (self.lambda_reorg > 0):
            raise ValueError("lambda_reorg must be > 0")
        if not (self.gamma_c > 0):
            raise ValueError("gamma_c must be > 0")
        if not (self.temperature > 0):
            raise ValueError("temperature must be > 0")
        if not self.is_high_temperature:
            warnings.warn(
                f"k_B T = {KB_MEV_PER_K * self.temperature:.4g} meV is below "
                f"{HIGH_T_RATIO_THRESHOLD} * hbar gamma_c = "
                f"{HIGH_T_RATIO_THRESHOLD * HBAR_MEV_FS * self.gamma_c:.4g} meV; "
                "high-temperature rate formulas are a heuristic extrapolation here",
                HighTemperatureLimitWarning,
                stacklevel=2,
            )

    @classmethod
    def from_reorganization(cls, value, unit, tau_c_ps, temperature_k):
        """Build from an explicitly unit-tagged reorganization energy.

        ``unit`` must be "mev" or "cm1"; no autodetection is attempted.
        ``tau_c_ps`` is the bath correlation time in ps.
        """
        if unit == "mev":
            lam = float(value)
        elif unit == "cm1":
            lam = mev_from_wavenumber(float(value))
        else:
            raise ValueError(f"unknown reorganization-energy unit {unit!r} (use 'mev' or 'cm1')")
        return cls(lambda_reorg=lam, gamma_c=1.0 / (1000.0 * float(tau_c_ps)), temperature=float(temperature_k))

    @property
    def tau_c_fs(self) -> float:
        return 1.0 / self.gamma_c

    @property
    def thermal_to_cutoff_ratio(self) -> float:
        """k_B T / (hbar gamma_c); the high-T derivation needs this >> 1."""
        return KB_MEV_PER_K * self.temperature / (HBAR_MEV_FS * self.gamma_c)

    @property
    def is_high_temperature(self) -> bool:
        return self.thermal_to_cutoff_ratio >= HIGH_T_RATIO_THRESHOLD


@dataclass(frozen=True)
class RateSet:
    """Lindblad rates in fs^-1: pure dephasing, downhill and uphill transfer."""

    gamma_phi: float
    gamma_down: float
    gamma_up: float


def spectral_density(omega, b: BathParameters):
    """Drude-Lorentz spectral density in meV at frequency omega (fs^-1, >= 0).

    Peaks at omega = gamma_c with value lambda_reorg.
    """
    omega = np.asarray(omega, dtype=float)
    out = 2.0 * b.lambda_reorg * omega * b.gamma_c / (omega**2 + b.gamma_c**2)
    return out if out.ndim else float(out)


def pure_dephasing_rate(b: BathParameters) -> float:
    """Motional-narrowing pure-dephasing rate 2 lambda k_B T / (hbar^2 gamma_c), fs^-1."""
    kt = KB_MEV_PER_K * b.temperature
    return 2.0 * b.lambda_reorg * kt / (HBAR_MEV_FS**2 * b.gamma_c)


def correlation_function(t, b: BathParameters):
    """High-T frequency-fluctuation correlation C(t) = (2 lambda k_B T / hbar^2) e^{-gamma_c t}, fs^-2."""
    t = np.asarray(t, dtype=float)
    c0 = 2.0 * b.lambda_reorg * KB_MEV_PER_K * b.temperature / HBAR_MEV_FS**2
    out = c0 * np.exp(-b.gamma_c * t)
    return out if out.ndim else float(out)


def lineshape(t, b: BathParameters):
    """Dephasing lineshape g(t) (dimensionless) for t >= 0 in fs.

    g(t) = (2 lambda k_B T / hbar^2) [ t/gamma_c - (1 - e^{-gamma_c t})/gamma_c^2 ],
    quadratic for t << tau_c and linear with slope gamma_phi for t >> tau_c.
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValueError("lineshape requires t >= 0")
    c0 = 2.0 * b.lambda_reorg * KB_MEV_PER_K * b.temperature / HBAR_MEV_FS**2
    gc = b.gamma_c
    out = c0 * (t / gc - (1.0 - np.exp(-gc * t)) / gc**2)
    return out if out.ndim else float(out)


def thermal_rates(b: BathParameters, s: ExcitonStructure) -> RateSet:
    """Full Lindblad rate set for a dimer with exciton splitting s.splitting.

    Requires a nondegenerate splitting; the secular transfer rates are
    undefined at degeneracy. gamma_up / gamma_down equals exp(-beta dE)
    exactly by construction (detailed balance).
    """
    de = s.splitting
    if de <= 0.0:
        raise ValueError("thermal rates require a positive exciton splitting")
    kt = KB_MEV_PER_K * b.temperature
    omega0 = de / HBAR_MEV_FS
    sin_2theta = math.sin(2.0 * s.mixing_angle)
    occupancy = 1.0 / math.tanh(0.5 * de / kt) + 1.0  # coth(beta hbar w0 / 2) + 1 = 2(n+1)
    gamma_down = sin_2theta**2 * spectral_density(omega0, b) * occupancy / HBAR_MEV_FS
    gamma_up = gamma_down * math.exp(-de / kt)
    return RateSet(
        gamma_phi=pure_dephasing_rate(b),
        gamma_down=gamma_down,
        gamma_up=gamma_up,
    )


def extract_lambda(coherence_time_t2, gamma_c, temperature_k) -> float:
    """Effective reorganization energy (meV) from a dephasing time T2 (fs).

    Inverts the motional-narrowing relation with gamma_phi = 1/T2 for a
    single-Debye Drude-Lorentz bath:

        lambda = gamma_phi hbar^2 gamma_c / (2 k_B T).

    Multi-component dielectric models give different (typically much
    larger) values for the same T2; this inversion is only as good as
    the single-Debye assumption.
    """
    if not (coherence_time_t2 > 0):
        raise ValueError("coherence_time_t2 must be > 0")
    if not (gamma_c > 0):
        raise ValueError("gamma_c must be > 0")
    if not (temperature_k > 0):
        raise ValueError("temperature_k must be > 0")
    gamma_phi = 1.0 / coherence_time_t2
    return gamma_phi * HBAR_MEV_FS**2 * gamma_c / (2.0 * KB_MEV_PER_K * temperature_k)
