"""Two-qubit reduced states and their negativity."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import ChainSpec, build_hamiltonian
from .operators import hermiticity_error, n_sites_of
from .thermal import gibbs_state

DENSITY_TOL = 1e-10
POSITIVITY_TOL = 1e-12
OFF_X_TOL = 1e-10
NEGATIVE_EIG_CUTOFF = 1e-12

# (row, col) positions that vanish in an X state
_OFF_X = [(i, j) for i in range(4) for j in range(4) if i != j and i + j != 3]


@dataclass(frozen=True)
class XState:
    """Two-qubit density matrix with support on the diagonal and anti-diagonal.

    In the basis |00>, |01>, |10>, |11>::

        [[a1, 0,  0,  b1],
         [0,  a2, b2, 0 ],
         [0,  b2, a3, 0 ],
         [b1, 0,  0,  a4]]

    Unnormalized instances (``normalized=False``) carry the Boltzmann weights
    before division by their trace.
    """

    a1: float
    a2: float
    a3: float
    a4: float
    b1: float
    b2: float
    normalized: bool = True

    def __post_init__(self):
        a = (self.a1, self.a2, self.a3, self.a4)
        scale = max(sum(a), 1e-300)
        tol = POSITIVITY_TOL * scale
        if min(a) < -tol:
            raise ValueError(f"diagonal weights must be non-negative, got {a}")
        if self.a1 * self.a4 < self.b1**2 - tol * scale or self.a2 * self.a3 < self.b2**2 - tol * scale:
            raise ValueError("X state is not positive semidefinite")
        if self.normalized and abs(sum(a) - 1.0) > POSITIVITY_TOL:
            raise ValueError(f"normalized X state has trace {sum(a)!r}")

    @property
    def trace(self) -> float:
        return self.a1 + self.a2 + self.a3 + self.a4

    def normalize(self) -> XState:
        z = self.trace
        return XState(self.a1 / z, self.a2 / z, self.a3 / z, self.a4 / z, self.b1 / z, self.b2 / z)

    def to_matrix(self) -> np.ndarray:
        m = np.diag([self.a1, self.a2, self.a3, self.a4]).astype(np.complex128)
        m[0, 3] = m[3, 0] = self.b1
        m[1, 2] = m[2, 1] = self.b2
        return m


@dataclass(frozen=True)
class PairNegativity:
    pair: tuple[int, int]
    value: float


def _check_density(rho: np.ndarray, tol: float = DENSITY_TOL) -> np.ndarray:
    rho = np.asarray(rho, dtype=np.complex128)
    n_sites_of(rho)
    herr = hermiticity_error(rho)
    if herr > tol:
        raise ValueError(f"density matrix is not Hermitian (max asymmetry {herr:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1.0) > tol:
        raise ValueError(f"density matrix has trace {tr}")
    return rho


def _check_two_qubit(rho4) -> np.ndarray:
    rho4 = _check_density(rho4)
    if rho4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit state, got shape {rho4.shape}")
    lowest = np.linalg.eigvalsh(rho4)[0]
    if lowest < -POSITIVITY_TOL:
        raise ValueError(f"density matrix has negative eigenvalue {lowest:.3e}")
    return rho4


def partial_trace_pair(rho, i: int) -> np.ndarray:
    """Reduced state of sites (i, i+1 mod N), with site i as the first qubit."""
    rho = _check_density(rho)
    n = n_sites_of(rho)
    if n < 2:
        raise ValueError("need at least two sites")
    if not 1 <= i <= n:
        raise ValueError(f"site {i} out of range 1..{n}")
    keep = [i - 1, i % n]
    rest = [k for k in range(n) if k not in keep]
    t = rho.reshape([2] * (2 * n))
    t = t.transpose(keep + rest + [n + k for k in keep] + [n + k for k in rest])
    t = t.reshape(4, 2 ** (n - 2), 4, 2 ** (n - 2))
    return np.einsum("ajbj->ab", t)


def extract_xstate(rho4) -> XState:
    rho4 = _check_density(rho4)
    if rho4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit state, got shape {rho4.shape}")
    off = max(abs(rho4[p]) for p in _OFF_X)
    if off > OFF_X_TOL:
        raise ValueError(f"state is not X-shaped: off-X entry of magnitude {off:.3e}")
    entries = [rho4[0, 0], rho4[1, 1], rho4[2, 2], rho4[3, 3], rho4[0, 3], rho4[1, 2]]
    imag = max(abs(e.imag) for e in entries)
    if imag > OFF_X_TOL:
        raise ValueError(f"X-state entries are not real (imaginary part {imag:.3e})")
    a1, a2, a3, a4, b1, b2 = (float(e.real) for e in entries)
    # trace was already checked to DENSITY_TOL; renormalize the rounding away
    z = a1 + a2 + a3 + a4
    return XState(a1 / z, a2 / z, a3 / z, a4 / z, b1 / z, b2 / z)


def partial_transpose_first(rho4) -> np.ndarray:
    """Transpose the indices of the first qubit of a 4x4 matrix."""
    t = np.asarray(rho4).reshape(2, 2, 2, 2)
    return t.transpose(2, 1, 0, 3).reshape(4, 4)


def negativity_eig(rho4) -> float:
    """Sum of the magnitudes of the negative eigenvalues of the partial transpose."""
    rho4 = _check_two_qubit(rho4)
    ev = np.linalg.eigvalsh(partial_transpose_first(rho4))
    return float(-ev[ev < -NEGATIVE_EIG_CUTOFF].sum())


def negativity_tracenorm(rho4) -> float:
    """(||rho^T1||_1 - 1) / 2, with the trace norm from the Hermitian spectrum."""
    rho4 = _check_two_qubit(rho4)
    ev = np.linalg.eigvalsh(partial_transpose_first(rho4))
    return max(0.0, float((np.abs(ev).sum() - 1.0) / 2))


def xstate_negativity(x: XState) -> float:
    if not x.normalized:
        raise ValueError("xstate_negativity needs a normalized XState; call .normalize() first")
    outer = math.sqrt((x.a1 - x.a4) ** 2 + 4 * x.b2**2) - x.a1 - x.a4
    inner = math.sqrt((x.a2 - x.a3) ** 2 + 4 * x.b1**2) - x.a2 - x.a3
    return 0.5 * max(0.0, outer) + 0.5 * max(0.0, inner)


def thermal_pair_negativity(spec: ChainSpec, temperature: float, i: int = 1, check_xform: bool = True) -> PairNegativity:
    """Negativity of the nearest-neighbour pair (i, i+1) in the Gibbs state of ``spec``."""
    state = gibbs_state(build_hamiltonian(spec), temperature)
    rho4 = partial_trace_pair(state.rho, i)
    if check_xform:
        extract_xstate(rho4)
    return PairNegativity(pair=(i, i % spec.n_sites + 1), value=negativity_eig(rho4))
