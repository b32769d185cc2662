"""Closed-form two-site thermal states.

For the two-site chain H = s1x s2x + gamma s1y s2y + B (s1z -/+ s2z), exp(-beta H)
splits into the {|00>, |11>} and {|01>, |10>} blocks, each of the form
c I + x sigma_z + y sigma_x, which exponentiate in closed form:

staggered field, D2 = sqrt(16 B^2 + (1 + gamma)^2)::

    a1 = a4 = cosh(beta (1 - gamma) / 4)
    a2, a3  = cosh(beta D2 / 4) -/+ (4 B / D2) sinh(beta D2 / 4)
    b1      = -sinh(beta (1 - gamma) / 4)
    b2      = -((1 + gamma) / D2) sinh(beta D2 / 4)

uniform field, D1 = sqrt(16 B^2 + (1 - gamma)^2)::

    a1, a4  = cosh(beta D1 / 4) -/+ (4 B / D1) sinh(beta D1 / 4)
    a2 = a3 = cosh(beta (1 + gamma) / 4)
    b1      = -((1 - gamma) / D1) sinh(beta D1 / 4)
    b2      = -sinh(beta (1 + gamma) / 4)

The field sign follows sigma_z |0> = +|0>; the opposite convention swaps
a2 <-> a3 (staggered) or a1 <-> a4 (uniform), which leaves the negativity
unchanged.
"""

from __future__ import annotations

import math

from .entanglement import XState
from .model import FieldPattern

SMALL_D = 1e-8


def _sinh_over_d(beta: float, d: float, shift: float) -> float:
    """exp(-shift) * sinh(beta d / 4) / d, continuous through d = 0."""
    q = beta / 4
    if d < SMALL_D:
        return math.exp(-shift) * (q + q**3 * d**2 / 6)
    return _sinh(q * d, shift) / d


def _cosh(x: float, shift: float) -> float:
    return 0.5 * (math.exp(x - shift) + math.exp(-x - shift))


def _sinh(x: float, shift: float) -> float:
    if x < 1.0:
        # the exponential difference cancels badly for small x
        return math.exp(-shift) * math.sinh(x)
    return 0.5 * (math.exp(x - shift) - math.exp(-x - shift))


def _weights(pattern: FieldPattern, gamma: float, field: float, beta: float, shift: float | None) -> XState:
    pattern = FieldPattern(pattern)
    if pattern is FieldPattern.STAGGERED:
        g_field, g_free = 1 + gamma, 1 - gamma
    else:
        g_field, g_free = 1 - gamma, 1 + gamma
    d = math.sqrt(16 * field**2 + g_field**2)
    x_field = beta * d / 4
    x_free = beta * abs(g_free) / 4
    if shift is None:
        # common factor exp(-shift) keeps every exponential <= 1
        shift = max(x_field, x_free)

    c = _cosh(x_field, shift)
    s = _sinh_over_d(beta, d, shift)
    split = 4 * field * s
    mixed = -g_field * s
    cf = _cosh(x_free, shift)
    # sinh is odd, so take the sign of g_free back outside
    sf = -math.copysign(_sinh(x_free, shift), g_free)

    if pattern is FieldPattern.STAGGERED:
        return XState(cf, c - split, c + split, cf, sf, mixed, normalized=False)
    return XState(c - split, cf, cf, c + split, mixed, sf, normalized=False)


def analytic_weights(pattern: FieldPattern, gamma: float, field: float, temperature: float) -> XState:
    """Unnormalized Boltzmann weights (the matrix elements of exp(-beta H))."""
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    return _weights(pattern, gamma, field, 1.0 / temperature, shift=0.0)


def analytic_xstate(pattern: FieldPattern, gamma: float, field: float, temperature: float) -> XState:
    if not temperature > 0:
        raise ValueError(f"temperature must be positive, got {temperature}")
    return _weights(pattern, gamma, field, 1.0 / temperature, shift=None).normalize()
