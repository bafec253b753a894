"""Two-chromophore exciton Hamiltonian: construction and diagonalization.

The site-basis Hamiltonian of the dimer is

    H = [[eps_bar - delta/2,  J],
         [J,                  eps_bar + delta/2]]

with coupling J (signed, meV) and site-energy difference delta >= 0.
Site 1 is the lower-energy site by convention. Diagonalizing gives the
exciton states |+> (lower, E+ = eps_bar - dE/2) and |-> (upper), with
splitting dE = sqrt(delta^2 + 4 J^2). For J < 0 and parallel site
dipoles the lower exciton |+> is the bright (symmetric) combination;
at delta = 0 it is exactly (|1> + |2>)/sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .units import HBAR_MEV_FS


@dataclass(frozen=True)
class DimerParameters:
    """Electronic parameters of the dimer (all in meV)."""

    coupling_j: float
    delta: float = 0.0
    epsilon_bar: float = 0.0

    def __post_init__(self):
        for name in ("coupling_j", "delta", "epsilon_bar"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.delta < 0:
            raise ValueError("delta must be >= 0 (sign is absorbed into site labeling)")


@dataclass(frozen=True)
class ExcitonStructure:
    """Eigenstructure of the dimer Hamiltonian.

    ``mixing_angle`` is theta = atan2(2J, delta)/2, so tan(2 theta) = 2J/delta.
    Eigenvectors (real, orthonormal, site basis):

        |+> = ( cos theta, -sin theta),   E+ = eps_bar - splitting/2
        |-> = ( sin theta,  cos theta),   E- = eps_bar + splitting/2

    ``bright_state_label`` names the exciton carrying the oscillator
    strength for parallel site dipoles: "plus" for J <= 0 (bright lies
    lower), "minus" for J > 0.
    """

    splitting: float
    energy_plus: float
    energy_minus: float
    mixing_angle: float
    eigenvector_plus: np.ndarray
    eigenvector_minus: np.ndarray
    bright_state_label: str

    @property
    def basis_matrix(self) -> np.ndarray:
        """2x2 orthogonal matrix with columns (|+>, |->)."""
        return np.column_stack([self.eigenvector_plus, self.eigenvector_minus])

    @property
    def bright_vector(self) -> np.ndarray:
        if self.bright_state_label == "plus":
            return self.eigenvector_plus
        return self.eigenvector_minus

    @property
    def dark_vector(self) -> np.ndarray:
        if self.bright_state_label == "plus":
            return self.eigenvector_minus
        return self.eigenvector_plus


def hamiltonian(p: DimerParameters) -> np.ndarray:
    """Site-basis Hamiltonian in meV."""
    return np.array(
        [
            [p.epsilon_bar - 0.5 * p.delta, p.coupling_j],
            [p.coupling_j, p.epsilon_bar + 0.5 * p.delta],
        ]
    )


def exciton_splitting(p: DimerParameters) -> float:
    """Exciton splitting dE = sqrt(delta^2 + 4 J^2) in meV."""
    return math.hypot(p.delta, 2.0 * p.coupling_j)


def diagonalize(p: DimerParameters) -> ExcitonStructure:
    """Closed-form eigenstructure of the 2x2 site Hamiltonian."""
    de = exciton_splitting(p)
    theta = 0.5 * math.atan2(2.0 * p.coupling_j, p.delta)
    c, s = math.cos(theta), math.sin(theta)
    return ExcitonStructure(
        splitting=de,
        energy_plus=p.epsilon_bar - 0.5 * de,
        energy_minus=p.epsilon_bar + 0.5 * de,
        mixing_angle=theta,
        eigenvector_plus=np.array([c, -s]),
        eigenvector_minus=np.array([s, c]),
        bright_state_label="plus" if p.coupling_j <= 0 else "minus",
    )


def beat_period(p: DimerParameters) -> float:
    """Coherent beat period 2 pi hbar / dE in fs."""
    de = exciton_splitting(p)
    if de == 0.0:
        raise ValueError("excitons are degenerate (splitting = 0); no beat period")
    return 2.0 * math.pi * HBAR_MEV_FS / de


def to_energy_basis(m: np.ndarray, s: ExcitonStructure) -> np.ndarray:
    """Transform a 2x2 matrix from the site basis to the exciton basis."""
    v = s.basis_matrix
    return v.T @ m @ v


def to_site_basis(m: np.ndarray, s: ExcitonStructure) -> np.ndarray:
    """Transform a 2x2 matrix from the exciton basis back to the site basis."""
    v = s.basis_matrix
    return v @ m @ v.T
