"""Invariant checks run by ``staggered-xy verify``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analytic import analytic_xstate
from .entanglement import (
    extract_xstate,
    negativity_eig,
    negativity_tracenorm,
    partial_trace_pair,
    thermal_pair_negativity,
    xstate_negativity,
)
from .model import ChainSpec, FieldPattern, build_hamiltonian, u1_operator, u2_operator, z2_commutator_norm
from .operators import max_abs
from .thermal import gibbs_state

GAMMAS = (0.0, 1 / 3, 0.5, 1.0)
TEMPERATURES = (0.02, 0.2)


@dataclass
class Check:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.error < self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: max error {self.error:.3e} (tol {self.tolerance:.0e})"


def check_analytic(fields=np.linspace(-2, 2, 41)) -> Check:
    err = 0.0
    for p in FieldPattern:
        for g in GAMMAS:
            for t in TEMPERATURES:
                for b in fields:
                    exact = thermal_pair_negativity(ChainSpec(2, g, float(b), p), t).value
                    err = max(err, abs(xstate_negativity(analytic_xstate(p, g, float(b), t)) - exact))
    return Check("two-site closed form vs exact diagonalization", err, 1e-9)


def check_field_flip(sizes, rng) -> list[Check]:
    op_err = neg_err = 0.0
    for n in sizes:
        u1 = u1_operator(n)
        for _ in range(5):
            g, b = rng.uniform(-1.5, 1.5), rng.uniform(-2, 2)
            for p in FieldPattern:
                plus, minus = ChainSpec(n, g, b, p), ChainSpec(n, g, -b, p)
                op_err = max(op_err, max_abs(u1 @ build_hamiltonian(plus) @ u1 - build_hamiltonian(minus)))
                neg_err = max(
                    neg_err,
                    abs(thermal_pair_negativity(plus, 0.2).value - thermal_pair_negativity(minus, 0.2).value),
                )
    return [
        Check("U1 H(gamma, B) U1 = H(gamma, -B)", op_err, 1e-13),
        Check("negativity symmetric under B -> -B", neg_err, 1e-11),
    ]


def check_pattern_map(sizes, rng) -> list[Check]:
    op_err = 0.0
    for n in sizes:
        u2 = u2_operator(n)
        for _ in range(5):
            g, b = rng.uniform(-1.5, 1.5), rng.uniform(-2, 2)
            h1 = build_hamiltonian(ChainSpec(n, g, b, FieldPattern.STAGGERED))
            # sigma_x on the odd sites also reverses their field, hence -B
            h2 = build_hamiltonian(ChainSpec(n, -g, -b, FieldPattern.UNIFORM))
            op_err = max(op_err, max_abs(u2 @ h1 @ u2 - h2))
    neg_err = 0.0
    for n in sizes:
        for b in (-1.3, -0.4, 0.0, 0.7, 1.9):
            st = thermal_pair_negativity(ChainSpec(n, 0.0, b, FieldPattern.STAGGERED), 0.2).value
            un = thermal_pair_negativity(ChainSpec(n, 0.0, b, FieldPattern.UNIFORM), 0.2).value
            neg_err = max(neg_err, abs(st - un))
    return [
        Check("U2 H_staggered(gamma, B) U2 = H_uniform(-gamma, -B)", op_err, 1e-13),
        Check("gamma = 0: staggered and uniform negativities coincide", neg_err, 1e-10),
    ]


def check_structure(sizes) -> list[Check]:
    z2 = trace = positivity = off_x = methods = 0.0
    for n in sizes:
        for p in FieldPattern:
            for g in GAMMAS:
                for t in TEMPERATURES:
                    for b in (-2.0, -0.6, 0.0, 0.35, 1.2):
                        h = build_hamiltonian(ChainSpec(n, g, b, p))
                        z2 = max(z2, z2_commutator_norm(h, n))
                        rho = gibbs_state(h, t).rho
                        trace = max(trace, abs(np.trace(rho).real - 1))
                        positivity = max(positivity, -np.linalg.eigvalsh(rho)[0])
                        rho4 = partial_trace_pair(rho, 1)
                        mask = np.ones((4, 4), bool)
                        mask[np.arange(4), np.arange(4)] = mask[np.arange(4), 3 - np.arange(4)] = False
                        off_x = max(off_x, float(np.abs(rho4[mask]).max()))
                        ne = negativity_eig(rho4)
                        methods = max(
                            methods,
                            abs(ne - negativity_tracenorm(rho4)),
                            abs(ne - xstate_negativity(extract_xstate(rho4))),
                        )
    return [
        Check("Hamiltonians commute with global parity", z2, 1e-13),
        Check("Gibbs states have unit trace", trace, 1e-12),
        Check("Gibbs states are positive", max(positivity, 0.0), 1e-12),
        Check("reduced pair states are X-shaped", off_x, 1e-10),
        Check("eigenvalue, trace-norm and closed-form negativities agree", methods, 1e-11),
    ]


def run_all(max_sites: int = 6, seed: int = 0) -> list[Check]:
    rng = np.random.default_rng(seed)
    sizes = [n for n in range(2, max_sites + 1, 2)]
    checks = [check_analytic()]
    checks += check_field_flip(sizes, rng)
    checks += check_pattern_map(sizes, rng)
    checks += check_structure(sizes)
    return checks
