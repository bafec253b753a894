"""Lindblad generator assembly and density-matrix propagation.

The master equation is

    drho/dt = -(i/hbar) [H, rho] + sum_l gamma_l D[L_l] rho,
    D[L] rho = L rho L^dag - (L^dag L rho + rho L^dag L) / 2,

with collapse terms (i) a dephasing operator sigma_z placed either in
the site or in the exciton basis with rate gamma_phi — under this
normalization the off-diagonal element in that basis decays as
exp(-2 gamma_phi t) — and (ii)/(iii) the downhill/uphill exciton
transfer operators |+><-| and |-><+| with rates gamma_down, gamma_up.

Propagation integrates the vectorized state (8 real components) with an
adaptive embedded Runge-Kutta 4(5) scheme and evaluates the solution on
the requested grid. Trace, Hermiticity and positivity are asserted at
every output point; violations abort with the offending time rather
than being silently repaired.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from .bath import BathParameters, thermal_rates, pure_dephasing_rate
from .dimer import (
    DimerParameters,
    ExcitonStructure,
    diagonalize,
    hamiltonian,
)
from .units import HBAR_MEV_FS

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_FLOOR = -1e-9

SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


class DynamicsError(Exception):
    """Base class for propagation / steady-state failures."""


class ConvergenceError(DynamicsError):
    """The integrator failed to meet its tolerances."""

    def __init__(self, message, time=None):
        super().__init__(message)
        self.time = time


class InvariantViolationError(DynamicsError):
    """A density-matrix invariant was violated along the trajectory."""

    def __init__(self, message, time):
        super().__init__(f"{message} at t = {time:.6g} fs")
        self.time = time


class NonUniqueSteadyStateError(DynamicsError):
    """The Liouvillian has more than one stationary state."""

    def __init__(self, null_space_dimension):
        super().__init__(
            f"steady state is not unique: Liouvillian null space has dimension {null_space_dimension}"
        )
        self.null_space_dimension = null_space_dimension


def check_density_matrix(rho: np.ndarray, time=None) -> None:
    """Assert Hermiticity, unit trace and positivity; raise on violation."""
    t = 0.0 if time is None else time
    if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
        raise InvariantViolationError("density matrix is not Hermitian", t)
    if abs(np.trace(rho) - 1.0) > TRACE_TOL:
        raise InvariantViolationError("density matrix trace differs from 1", t)
    min_eig = np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min()
    if min_eig < POSITIVITY_FLOOR:
        raise InvariantViolationError(
            f"density matrix has negative eigenvalue {min_eig:.3e}", t
        )


@dataclass(frozen=True)
class LindbladModel:
    """Hamiltonian plus (collapse operator, rate) pairs, all in the site basis."""

    hamiltonian: np.ndarray
    collapse_terms: tuple
    exciton: ExcitonStructure

    def __post_init__(self):
        for _, rate in self.collapse_terms:
            if not rate >= 0.0:
                raise ValueError("collapse rates must be >= 0")

    def liouvillian(self) -> np.ndarray:
        """4x4 generator acting on the row-major vectorized density matrix, fs^-1."""
        eye = np.eye(2, dtype=complex)
        h = self.hamiltonian.astype(complex)
        gen = -1j / HBAR_MEV_FS * (np.kron(h, eye) - np.kron(eye, h.T))
        for op, rate in self.collapse_terms:
            op = op.astype(complex)
            opd_op = op.conj().T @ op
            gen = gen + rate * (
                np.kron(op, op.conj())
                - 0.5 * (np.kron(opd_op, eye) + np.kron(eye, opd_op.T))
            )
        return gen


def build_model(
    p: DimerParameters,
    b: BathParameters,
    dephasing_basis: str = "site",
    include_dephasing: bool = True,
    include_thermal: bool = True,
) -> LindbladModel:
    """Assemble the Lindblad model for a dimer coupled to a Drude-Lorentz bath.

    ``dephasing_basis`` selects where the sigma_z dephasing operator acts:
    "site" scrambles exciton populations of a homodimer (the rapid
    equal-mixture behavior seen at room temperature), "energy" commutes
    with H and leaves populations untouched. Thermal transfer operators
    always live in the exciton basis and require a nonzero splitting.
    """
    structure = diagonalize(p)
    terms = []
    if include_dephasing:
        gamma_phi = pure_dephasing_rate(b)
        if dephasing_basis == "site":
            deph_op = SIGMA_Z
        elif dephasing_basis == "energy":
            v = structure.basis_matrix
            deph_op = (v @ SIGMA_Z.real @ v.T).astype(complex)
        else:
            raise ValueError(f"unknown dephasing basis {dephasing_basis!r} (use 'site' or 'energy')")
        if gamma_phi > 0:
            terms.append((deph_op, gamma_phi))
    if include_thermal:
        if structure.splitting <= 0:
            raise ValueError("thermal collapse terms require a nonzero exciton splitting")
        rates = thermal_rates(b, structure)
        lower = np.outer(structure.eigenvector_plus, structure.eigenvector_minus).astype(complex)
        raise_op = np.outer(structure.eigenvector_minus, structure.eigenvector_plus).astype(complex)
        terms.append((lower, rates.gamma_down))
        terms.append((raise_op, rates.gamma_up))
    return LindbladModel(
        hamiltonian=hamiltonian(p),
        collapse_terms=tuple(terms),
        exciton=structure,
    )


def initial_density_matrix(
    kind: str,
    structure: ExcitonStructure,
    phase: float = math.pi / 2,
    bright_fraction: float = 0.5,
) -> np.ndarray:
    """Initial 2x2 density matrix in the site basis.

    kind: "site_superposition"  (|1> + e^{i phase} |2>)/sqrt(2)
          "bright" / "dark"     projector onto the bright/dark exciton
          "exciton_mixture"     bright_fraction * P_bright + (1 - bright_fraction) * P_dark
    """
    if kind == "site_superposition":
        psi = np.array([1.0, np.exp(1j * phase)]) / math.sqrt(2.0)
        rho = np.outer(psi, psi.conj())
    elif kind == "bright":
        v = structure.bright_vector
        rho = np.outer(v, v).astype(complex)
    elif kind == "dark":
        v = structure.dark_vector
        rho = np.outer(v, v).astype(complex)
    elif kind == "exciton_mixture":
        if not (0.0 <= bright_fraction <= 1.0):
            raise ValueError("bright_fraction must lie in [0, 1]")
        vb, vd = structure.bright_vector, structure.dark_vector
        rho = (bright_fraction * np.outer(vb, vb) + (1.0 - bright_fraction) * np.outer(vd, vd)).astype(complex)
    else:
        raise ValueError(f"unknown initial state kind {kind!r}")
    check_density_matrix(rho)
    return rho


@dataclass(frozen=True)
class Trajectory:
    """Time grid plus observables in both bases (site coherence is rho_12)."""

    times: np.ndarray
    rho_site: np.ndarray  # (n, 2, 2) complex
    site_pop_1: np.ndarray
    site_pop_2: np.ndarray
    site_coherence_re: np.ndarray
    site_coherence_im: np.ndarray
    site_coherence_abs: np.ndarray
    energy_pop_plus: np.ndarray
    energy_pop_minus: np.ndarray
    energy_coherence_re: np.ndarray
    energy_coherence_im: np.ndarray
    energy_coherence_abs: np.ndarray


def _trajectory_from_states(times, states, structure) -> Trajectory:
    v = structure.basis_matrix
    rho_energy = np.einsum("ab,nbc,cd->nad", v.T, states, v)
    return Trajectory(
        times=np.asarray(times, dtype=float),
        rho_site=states,
        site_pop_1=states[:, 0, 0].real.copy(),
        site_pop_2=states[:, 1, 1].real.copy(),
        site_coherence_re=states[:, 0, 1].real.copy(),
        site_coherence_im=states[:, 0, 1].imag.copy(),
        site_coherence_abs=np.abs(states[:, 0, 1]),
        energy_pop_plus=rho_energy[:, 0, 0].real.copy(),
        energy_pop_minus=rho_energy[:, 1, 1].real.copy(),
        energy_coherence_re=rho_energy[:, 0, 1].real.copy(),
        energy_coherence_im=rho_energy[:, 0, 1].imag.copy(),
        energy_coherence_abs=np.abs(rho_energy[:, 0, 1]),
    )


def propagate(
    model: LindbladModel,
    rho0: np.ndarray,
    t_grid,
    rtol: float = 1e-9,
    atol: float = 1e-12,
) -> Trajectory:
    """Propagate rho0 over t_grid (fs, strictly increasing, starting at 0).

    Observables are evaluated exactly on the requested grid via the
    integrator's dense interpolant. Raises ConvergenceError if the
    solver fails and InvariantViolationError if any output state breaks
    the trace / Hermiticity / positivity contracts.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.ndim != 1 or t_grid.size == 0:
        raise ValueError("t_grid must be a nonempty 1-d array")
    if t_grid[0] != 0.0:
        raise ValueError("t_grid must start at 0")
    if t_grid.size > 1 and not np.all(np.diff(t_grid) > 0):
        raise ValueError("t_grid must be strictly increasing")
    rho0 = np.asarray(rho0, dtype=complex)
    check_density_matrix(rho0)

    if t_grid.size == 1:
        states = rho0[np.newaxis, :, :].copy()
        return _trajectory_from_states(t_grid, states, model.exciton)

    gen = model.liouvillian()

    def rhs(_t, y):
        z = y[0::2] + 1j * y[1::2]
        dz = gen @ z
        # restrict the derivative to the Hermitian subspace (the exact flow
        # preserves it; this keeps rho01/rho10 bit-exact conjugates)
        d01 = 0.5 * (dz[1] + dz[2].conjugate())
        out = np.empty(8)
        out[0] = dz[0].real
        out[1] = 0.0
        out[2] = d01.real
        out[3] = d01.imag
        out[4] = d01.real
        out[5] = -d01.imag
        out[6] = dz[3].real
        out[7] = 0.0
        return out

    y0 = np.empty(8)
    z0 = rho0.reshape(-1)
    y0[0::2] = z0.real
    y0[1::2] = z0.imag

    sol = solve_ivp(
        rhs,
        t_span=(t_grid[0], t_grid[-1]),
        y0=y0,
        method="RK45",
        t_eval=t_grid,
        rtol=rtol,
        atol=atol,
    )
    if not sol.success:
        reached = sol.t[-1] if sol.t.size else t_grid[0]
        raise ConvergenceError(f"integration failed: {sol.message}", time=reached)

    z = sol.y[0::2, :] + 1j * sol.y[1::2, :]
    states = z.T.reshape(-1, 2, 2)
    for time, rho in zip(t_grid, states):
        check_density_matrix(rho, time)
    return _trajectory_from_states(t_grid, states, model.exciton)


def steady_state(model: LindbladModel, null_tol: float = 1e-10, residual_tol: float = 1e-12) -> np.ndarray:
    """Unique stationary density matrix of the Lindblad generator.

    Solves L(rho) = 0 via the null space of the 4x4 Liouvillian. Raises
    NonUniqueSteadyStateError when the null space is not one-dimensional
    and DynamicsError when the residual exceeds ``residual_tol``.
    """
    gen = model.liouvillian()
    _, sing, vh = np.linalg.svd(gen)
    scale = sing[0] if sing[0] > 0 else 1.0
    null_dim = int(np.sum(sing <= null_tol * scale))
    if null_dim == 0:
        # svd of a Lindbladian always has a zero mode; only numerics can hide it
        raise DynamicsError("no stationary state found within tolerance")
    if null_dim > 1:
        raise NonUniqueSteadyStateError(null_dim)
    rho = vh[-1].conj().reshape(2, 2)
    rho = 0.5 * (rho + rho.conj().T)
    tr = np.trace(rho).real
    if abs(tr) < 1e-8:
        raise DynamicsError("stationary null vector has (near-)zero trace")
    rho = rho / tr
    residual = np.max(np.abs(gen @ rho.reshape(-1)))
    if residual > residual_tol:
        raise DynamicsError(f"steady-state residual {residual:.3e} exceeds {residual_tol:.1e}")
    check_density_matrix(rho)
    return rho
