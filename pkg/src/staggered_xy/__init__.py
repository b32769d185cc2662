"""Thermal negativity of the anisotropic XY chain in uniform and staggered fields."""

from .analytic import analytic_weights, analytic_xstate
from .entanglement import (
    PairNegativity,
    XState,
    extract_xstate,
    negativity_eig,
    negativity_tracenorm,
    partial_trace_pair,
    partial_transpose_first,
    thermal_pair_negativity,
    xstate_negativity,
)
from .model import (
    Boundary,
    ChainSpec,
    FieldPattern,
    build_hamiltonian,
    translation_operator,
    u1_operator,
    u2_operator,
    z2_commutator_norm,
)
from .operators import Spectrum, eig_hermitian, kron, site_operator
from .sweep import SweepConfig, SweepResult, count_peaks, run_sweep
from .thermal import ThermalState, gibbs_state

__version__ = "0.1.0"
