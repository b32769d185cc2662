"""Anisotropic XY chain in a uniform or staggered transverse field.

    H = sum_bonds J [s_ix s_jx + gamma s_iy s_jy] + sum_i f_i B s_iz

with s = sigma/2, f_i = (-1)^(i-1) for the staggered field and f_i = 1 for
the uniform one. Periodic chains use the bonds (i, i+1 mod N); the two-site
chain carries the single bond (1, 2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .operators import (
    MAX_SITES,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    IDENTITY,
    commutator,
    kron_all,
    max_abs,
    n_sites_of,
    site_operator,
)


class FieldPattern(enum.Enum):
    UNIFORM = "uniform"
    STAGGERED = "staggered"


class Boundary(enum.Enum):
    PERIODIC = "periodic"
    SINGLE_BOND = "single_bond"


@dataclass(frozen=True)
class ChainSpec:
    n_sites: int
    gamma: float
    field: float
    pattern: FieldPattern = FieldPattern.STAGGERED
    coupling: float = 1.0
    boundary: Boundary | None = None

    def __post_init__(self):
        n = self.n_sites
        if isinstance(n, bool) or int(n) != n:
            raise ValueError(f"n_sites must be an integer, got {n!r}")
        if n % 2 or not 2 <= n <= MAX_SITES:
            raise ValueError(f"n_sites must be even and in 2..{MAX_SITES}, got {n}")
        object.__setattr__(self, "n_sites", int(n))
        object.__setattr__(self, "pattern", FieldPattern(self.pattern))
        if self.boundary is None:
            auto = Boundary.SINGLE_BOND if n == 2 else Boundary.PERIODIC
            object.__setattr__(self, "boundary", auto)
        else:
            object.__setattr__(self, "boundary", Boundary(self.boundary))

    def with_field(self, field: float) -> ChainSpec:
        return replace(self, field=field)

    def bonds(self) -> list[tuple[int, int]]:
        n = self.n_sites
        if self.boundary is Boundary.SINGLE_BOND:
            return [(i, i + 1) for i in range(1, n)]
        return [(i, i % n + 1) for i in range(1, n + 1)]

    def field_signs(self) -> list[int]:
        if self.pattern is FieldPattern.UNIFORM:
            return [1] * self.n_sites
        return [(-1) ** (i - 1) for i in range(1, self.n_sites + 1)]


def _bond_operator(op, i: int, j: int, n: int) -> np.ndarray:
    factors = [IDENTITY] * n
    factors[i - 1] = factors[j - 1] = op
    return kron_all(factors)


def build_hamiltonian(spec: ChainSpec) -> np.ndarray:
    n = spec.n_sites
    h = np.zeros((2**n, 2**n), dtype=np.complex128)
    for i, j in spec.bonds():
        h += spec.coupling * (_bond_operator(SIGMA_X / 2, i, j, n) + spec.gamma * _bond_operator(SIGMA_Y / 2, i, j, n))
    for i, f in enumerate(spec.field_signs(), start=1):
        h += f * spec.field * site_operator(SIGMA_Z / 2, i, n)
    return h


def u1_operator(n_sites: int) -> np.ndarray:
    """sigma_x on every site; maps H(gamma, B) to H(gamma, -B)."""
    if n_sites < 1:
        raise ValueError("n_sites must be positive")
    return kron_all([SIGMA_X] * n_sites)


def u2_operator(n_sites: int) -> np.ndarray:
    """sigma_x on odd sites only.

    Conjugation flips s_y and s_z on the odd sites, so the staggered
    H(gamma, B) becomes the uniform H(-gamma, -B). Since the negativity is
    even in B, both patterns share the same curve at gamma = 0.
    """
    if n_sites < 2 or n_sites % 2:
        raise ValueError(f"u2_operator needs an even number of sites, got {n_sites}")
    return kron_all([SIGMA_X if i % 2 else IDENTITY for i in range(1, n_sites + 1)])


def parity_operator(n_sites: int) -> np.ndarray:
    return kron_all([SIGMA_Z] * n_sites)


def z2_commutator_norm(h: np.ndarray, n_sites: int) -> float:
    if n_sites_of(h) != n_sites:
        raise ValueError(f"operator of dimension {h.shape[0]} does not act on {n_sites} sites")
    return max_abs(commutator(h, parity_operator(n_sites)))


def translation_operator(n_sites: int) -> np.ndarray:
    """Permutation T with T O_i T^dagger = O_{i+1 mod N} for any single-site O."""
    dim = 2**n_sites
    idx = np.arange(dim)
    # bit of site i sits at position n_sites - i; moving it to site i+1 is a right rotation
    shifted = (idx >> 1) | ((idx & 1) << (n_sites - 1))
    t = np.zeros((dim, dim), dtype=np.complex128)
    t[shifted, idx] = 1.0
    return t
