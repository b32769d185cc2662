"""Gibbs states rho = exp(-beta H) / Z with k_B = 1."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .operators import eig_hermitian


@dataclass(frozen=True)
class ThermalState:
    """Normalized Gibbs state.

    ``log_partition`` is log Z for the ground-energy-shifted Hamiltonian
    H - E0; the true log Z is ``log_partition - beta * ground_energy``.
    """

    rho: np.ndarray
    beta: float
    log_partition: float
    ground_energy: float

    @property
    def temperature(self) -> float:
        return 1.0 / self.beta

    @property
    def log_partition_unshifted(self) -> float:
        return self.log_partition - self.beta * self.ground_energy


def gibbs_state(h, temperature: float) -> ThermalState:
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    beta = 1.0 / temperature
    spec = eig_hermitian(h)
    e0 = spec.eigenvalues[0]
    # shifted weights lie in (0, 1], so nothing overflows at large beta
    weights = np.exp(-beta * (spec.eigenvalues - e0))
    z = weights.sum()
    v = spec.eigenvectors
    rho = (v * (weights / z)) @ v.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return ThermalState(rho=rho, beta=beta, log_partition=float(np.log(z)), ground_energy=float(e0))
