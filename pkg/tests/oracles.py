"""Shared independent reference values for the test suite.

Constants are derived from scipy.constants (full CODATA precision) so
they do not depend on the package's own constant definitions.
"""

import math

from scipy import constants as sc

HBAR = sc.hbar / sc.e * 1e18          # meV*fs
KB = sc.k / sc.e * 1e3                # meV/K
MEV_PER_CM1 = sc.h * sc.c * 100.0 / sc.e * 1e3  # meV per cm^-1
C_CM_PER_FS = sc.c * 100.0 * 1e-15    # speed of light in cm/fs

VENUS_LAMBDA_CM1 = 270.0
VENUS_TAU_C_FS = 100.0
VENUS_T_K = 293.0
VENUS_J_MEV = -34.0
FIG2_DELTA_MEV = 59.28


def gamma_phi(lambda_mev, gamma_c, temperature_k):
    """Motional-narrowing dephasing rate, written out independently."""
    return 2.0 * lambda_mev * KB * temperature_k / (HBAR**2 * gamma_c)


def drude_lorentz(omega, lambda_mev, gamma_c):
    return 2.0 * lambda_mev * omega * gamma_c / (omega**2 + gamma_c**2)


def downhill_rate(lambda_mev, gamma_c, temperature_k, delta_mev, j_mev):
    """Golden-rule downhill transfer rate at the excitonic transition."""
    de = math.hypot(delta_mev, 2.0 * j_mev)
    omega0 = de / HBAR
    sin2 = (2.0 * j_mev / de) ** 2
    occupancy = 1.0 / math.tanh(0.5 * de / (KB * temperature_k)) + 1.0
    return sin2 * drude_lorentz(omega0, lambda_mev, gamma_c) * occupancy / HBAR


def boltzmann_bright_population(delta_mev, j_mev, temperature_k):
    de = math.hypot(delta_mev, 2.0 * j_mev)
    return 1.0 / (1.0 + math.exp(-de / (KB * temperature_k)))
