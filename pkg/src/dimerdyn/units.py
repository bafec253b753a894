"""Physical constants and unit conversions.

Everything in the package runs in one internal unit system: energies in
meV, times in fs, temperatures in K. Rates are therefore fs^-1. The
constants are CODATA values rounded to 10 significant digits so that
conversion error stays far below any tolerance used downstream.
"""

HBAR_MEV_FS = 658.2119569        # reduced Planck constant, meV*fs
KB_MEV_PER_K = 0.08617333262     # Boltzmann constant, meV/K
MEV_PER_CM1 = 0.1239841984       # h*c * (1 cm^-1), in meV


def mev_from_wavenumber(x):
    """Convert an energy from cm^-1 to meV."""
    return x * MEV_PER_CM1


def thermal_energy(temperature_k):
    """Thermal energy k_B*T in meV for a temperature in K."""
    if temperature_k < 0:
        raise ValueError("temperature must be >= 0 K")
    return KB_MEV_PER_K * temperature_k
