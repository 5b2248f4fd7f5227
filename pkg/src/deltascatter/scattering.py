"""Scattering from an attractive point interaction in two dimensions.

A particle of momentum k scatters off a zero-range well whose single
bound state sits at energy e0 < 0 (units hbar = 2m = 1).  The entire
physics is carried by the dimensionless ratio x = sqrt(-e0)/k: the total
cross section has the closed form

    sigma = 4 pi^2 / (k [pi^2 + 4 (ln x)^2])

and, because only the s wave feels a pointlike potential, the identical
number comes out of the partial-wave sum (4/k) sum_m sin^2(delta_m) with
tan(delta_0) = -pi/(2 ln x) and every other delta_m = 0.  Both routes
are implemented here so they can be checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ValidationError

_PI_SQ = math.pi * math.pi


@dataclass(frozen=True)
class ScatteringProblem:
    """One physical scenario: incident momentum k and bound-state energy e0.

    In hbar = 2m = 1 units momenta and inverse lengths coincide and e0
    carries momentum-squared units.  A genuine bound state requires
    e0 < 0; construction rejects anything else.
    """

    k: float
    e0: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.k) and self.k > 0.0):
            raise ValidationError(f"k must be finite and positive, got {self.k!r}")
        if not (math.isfinite(self.e0) and self.e0 < 0.0):
            raise ValidationError(f"e0 must be finite and negative, got {self.e0!r}")

    @property
    def bound_state_scale(self) -> float:
        """mu = sqrt(-e0), the momentum scale set by the bound state."""
        return math.sqrt(-self.e0)

    @property
    def x(self) -> float:
        """Dimensionless ratio sqrt(-e0)/k."""
        return self.bound_state_scale / self.k

    @property
    def log_x(self) -> float:
        """ln(sqrt(-e0)/k), exactly zero at resonance k = sqrt(-e0)."""
        return math.log(self.x)


@dataclass(frozen=True)
class CrossSection:
    """A total cross section (a length in two dimensions)."""

    sigma: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.sigma) and self.sigma > 0.0):
            raise ValidationError(f"sigma must be finite and positive, got {self.sigma!r}")


@dataclass(frozen=True)
class PhaseShift:
    """An s-wave phase shift on the branch (0, pi)."""

    delta0: float

    def __post_init__(self) -> None:
        if not (0.0 < self.delta0 < math.pi):
            raise ValidationError(f"delta0 must lie in (0, pi), got {self.delta0!r}")


def _tan_delta0(problem: ScatteringProblem) -> float:
    """tan(delta_0) = -pi/(2 ln x); math.inf marks the resonant pi/2."""
    log_x = problem.log_x
    if log_x == 0.0:
        return math.inf
    return -math.pi / (2.0 * log_x)


def cross_section_closed(problem: ScatteringProblem) -> CrossSection:
    """Closed-form total cross section 4 pi^2 / (k [pi^2 + 4 (ln x)^2]).

    Maximal at resonance (ln x = 0), where it saturates the s-wave
    unitarity bound sigma = 4/k.
    """
    log_x = problem.log_x
    denominator = _PI_SQ + 4.0 * log_x * log_x
    return CrossSection(4.0 * _PI_SQ / (problem.k * denominator))


def s_wave_phase_shift(problem: ScatteringProblem) -> PhaseShift:
    """s-wave phase shift, taken on the branch (0, pi).

    That branch keeps delta_0 continuous through the resonance: it rises
    from near 0 for x << 1, passes through exactly pi/2 at ln x = 0, and
    approaches pi for x >> 1.
    """
    tan_d = _tan_delta0(problem)
    if math.isinf(tan_d):
        return PhaseShift(0.5 * math.pi)
    delta = math.atan(tan_d)
    if delta <= 0.0:
        delta += math.pi
    return PhaseShift(delta)


def sin_sq_from_tan(tan_value: float) -> float:
    """sin^2 from a tangent via sin^2 = t^2/(1 + t^2), overflow-safe.

    math.inf (either sign) is the marker for an infinite tangent and maps
    to exactly 1.0.  For |t| > 1 the reciprocal form 1/(1 + 1/t^2) avoids
    overflowing t^2 prematurely.
    """
    if math.isnan(tan_value):
        raise ValidationError("tan_value must not be NaN")
    if math.isinf(tan_value):
        return 1.0
    t_sq = tan_value * tan_value
    if t_sq > 1.0:
        return 1.0 / (1.0 + 1.0 / t_sq)
    return t_sq / (1.0 + t_sq)


def cross_section_partial_wave(problem: ScatteringProblem, m_max: int = 0) -> CrossSection:
    """Total cross section from the partial-wave sum (4/k) sum_m sin^2(delta_m).

    Only the m = 0 channel scatters off a zero-range potential, so every
    |m| >= 1 term contributes exactly 0.0 and the result is bit-identical
    for any m_max; the parameter exists so that property stays checkable.
    """
    if not isinstance(m_max, int) or m_max < 0:
        raise ValidationError(f"m_max must be a non-negative integer, got {m_max!r}")
    tan_d0 = _tan_delta0(problem)
    total = 0.0
    for m in range(-m_max, m_max + 1):
        tan_d = tan_d0 if m == 0 else 0.0
        total += sin_sq_from_tan(tan_d)
    return CrossSection(4.0 * total / problem.k)
