"""Dense operators on the 2^N-dimensional spin-1/2 chain Hilbert space.

Site 1 is the most significant qubit of the basis index, so for two sites
the computational basis reads |00>, |01>, |10>, |11>.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

MAX_SITES = 12
HERMITIAN_TOL = 1e-12

IDENTITY = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

for _m in (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues and orthonormal eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _as_square(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _check_dim(dim: int) -> None:
    if dim > 2**MAX_SITES:
        raise ValueError(f"dimension {dim} exceeds the cap of 2**{MAX_SITES}")


def n_sites_of(a: np.ndarray) -> int:
    """Number of qubits for a 2^N x 2^N operator."""
    dim = _as_square(a).shape[0]
    n = dim.bit_length() - 1
    if dim != 1 << n:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def kron(a, b) -> np.ndarray:
    a = _as_square(a)
    b = _as_square(b)
    _check_dim(a.shape[0] * b.shape[0])
    return np.kron(a, b)


def kron_all(ops) -> np.ndarray:
    return reduce(kron, ops)


def site_operator(op, site: int, n_sites: int) -> np.ndarray:
    """Embed a single-site 2x2 operator at ``site`` (1-based) of an N-site chain."""
    op = _as_square(op)
    if op.shape != (2, 2):
        raise ValueError("site operator must be 2x2")
    if not 1 <= n_sites <= MAX_SITES:
        raise ValueError(f"n_sites must be in 1..{MAX_SITES}, got {n_sites}")
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} out of range 1..{n_sites}")
    factors = [IDENTITY] * n_sites
    factors[site - 1] = op
    return kron_all(factors)


def hermiticity_error(a) -> float:
    a = _as_square(a)
    return float(np.max(np.abs(a - a.conj().T)))


def is_hermitian(a, tol: float = HERMITIAN_TOL) -> bool:
    return hermiticity_error(a) < tol


def eig_hermitian(a) -> Spectrum:
    a = _as_square(a)
    err = hermiticity_error(a)
    if err >= HERMITIAN_TOL:
        raise ValueError(f"matrix is not Hermitian (max asymmetry {err:.3e})")
    # symmetrize so that LAPACK sees exactly Hermitian input
    a = 0.5 * (a + a.conj().T)
    if not a.imag.any():
        # real symmetric path is several times faster
        w, v = np.linalg.eigh(a.real)
        return Spectrum(w, v.astype(np.complex128))
    w, v = np.linalg.eigh(a)
    return Spectrum(w, v)


def commutator(a, b) -> np.ndarray:
    return a @ b - b @ a


def max_abs(a) -> float:
    return float(np.max(np.abs(a)))
