#!/usr/bin/env python3
"""Room-temperature decoherence of a strongly coupled homodimer.

Builds the default scenario (J = -34 meV, lambda = 270 cm^-1,
tau_c = 0.1 ps, T = 293 K, site-basis dephasing plus thermal transfer),
propagates two initializations and prints the milestones that make the
dimer behave as a single emitter: site coherence dies within a few fs,
and exciton populations scramble to ~50:50 in tens of fs.
"""

import math

import numpy as np

import dimerdyn as dd


def main():
    p = dd.DimerParameters(coupling_j=-34.0)
    b = dd.BathParameters.from_reorganization(270.0, "cm1", tau_c_ps=0.1, temperature_k=293.0)

    print("== scenario ==")
    print(f"splitting          : {dd.exciton_splitting(p):.2f} meV (homodimer: 2|J|)")
    print(f"beat period        : {dd.beat_period(p):.1f} fs")
    rates = dd.thermal_rates(b, dd.diagonalize(p))
    print(f"gamma_phi          : {rates.gamma_phi:.4f} fs^-1")
    print(f"gamma_down / up    : {rates.gamma_down:.4f} / {rates.gamma_up:.5f} fs^-1")
    print(f"dephasing half-life: {dd.coherence_half_life_analytic(b):.3f} fs")
    print()

    model = dd.build_model(p, b, dephasing_basis="site")
    t = np.linspace(0.0, 150.0, 1501)

    print("== 50:50 site superposition, phase pi/2 ==")
    rho0 = dd.initial_density_matrix("site_superposition", model.exciton, phase=math.pi / 2)
    traj = dd.propagate(model, rho0, t)
    t_half = dd.coherence_half_life_measured(traj, basis="site")
    t_005 = t[np.argmax(traj.site_coherence_abs < 0.05)]
    print(f"|rho12| halves at       : {t_half:.2f} fs")
    print(f"|rho12| < 0.05 at       : {t_005:.2f} fs")
    print(f"site populations at end : {traj.site_pop_1[-1]:.3f} / {traj.site_pop_2[-1]:.3f}")
    print()

    print("== bright-state initialization ==")
    rho0 = dd.initial_density_matrix("bright", model.exciton)
    traj = dd.propagate(model, rho0, t)
    for probe in (10.0, 25.0, 50.0, 150.0):
        i = int(np.searchsorted(t, probe))
        print(f"t = {probe:5.0f} fs: rho_++ = {traj.energy_pop_plus[i]:.4f}, rho_-- = {traj.energy_pop_minus[i]:.4f}")
    print()
    print("site-basis dephasing flips excitons of a homodimer, so the bright")
    print("population relaxes to ~1/2 within tens of fs: no superradiant pair,")
    print("just a bright single emitter.")


if __name__ == "__main__":
    main()
