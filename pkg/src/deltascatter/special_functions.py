"""Order-zero Bessel family on the small-argument domain.

Self-contained double-precision evaluation of J0, Y0, K0 and the first
Hankel function H0 = J0 + iY0 by their ascending power series, plus the
two-term logarithmic forms that K0 and H0 collapse to as z -> 0.  The
series are kept to arguments 0 < z <= 2, where a handful of terms gives
full double accuracy; larger arguments raise DomainError rather than
silently losing precision.  Stdlib only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

#: Euler-Mascheroni constant to double precision.
EULER_GAMMA = 0.5772156649015329

#: Shared 2/pi so that every logarithmic prefactor in this module and its
#: callers is built from the same rounded constant.
TWO_OVER_PI = 2.0 / math.pi

_Z_MAX = 2.0

# Ascending-series truncation: stop once a term falls below this fraction
# of the running sum, or after _MAX_TERMS terms (never reached for z <= 2).
_REL_FLOOR = 1e-16
_MAX_TERMS = 60


@dataclass(frozen=True)
class ComplexValue:
    """A complex number as an explicit (re, im) pair of floats."""

    re: float
    im: float

    def add(self, other: "ComplexValue") -> "ComplexValue":
        return ComplexValue(self.re + other.re, self.im + other.im)

    def scale(self, factor: float) -> "ComplexValue":
        return ComplexValue(factor * self.re, factor * self.im)

    def times_i(self) -> "ComplexValue":
        """Multiply by the imaginary unit: i(a + ib) = -b + ia."""
        return ComplexValue(-self.im, self.re)

    def modulus_squared(self) -> float:
        return self.re * self.re + self.im * self.im


def _require_series_domain(z: float, name: str) -> None:
    # NaN fails the comparison and lands here too.
    if not (0.0 < z <= _Z_MAX):
        raise DomainError(f"{name} requires 0 < z <= {_Z_MAX}, got {z!r}")


def _require_positive(z: float, name: str) -> None:
    if not (0.0 < z < math.inf):
        raise DomainError(f"{name} requires finite z > 0, got {z!r}")


def bessel_j0(z: float) -> float:
    """J0 by its ascending series sum_m (-1)^m (z^2/4)^m / (m!)^2."""
    _require_series_domain(z, "bessel_j0")
    q = 0.25 * z * z
    term = 1.0
    total = 1.0
    for m in range(1, _MAX_TERMS):
        term *= -q / (m * m)
        total += term
        if abs(term) < _REL_FLOOR * abs(total):
            break
    return total


def bessel_y0(z: float) -> float:
    """Y0 from J0 and the alternating harmonic-number correction series.

    Y0(z) = (2/pi) [ (ln(z/2) + gamma) J0(z)
                     + sum_{m>=1} (-1)^(m+1) h_m (z^2/4)^m / (m!)^2 ]

    with h_m the m-th harmonic number.
    """
    _require_series_domain(z, "bessel_y0")
    q = 0.25 * z * z
    term = 1.0
    harmonic = 0.0
    correction = 0.0
    for m in range(1, _MAX_TERMS):
        term *= q / (m * m)
        harmonic += 1.0 / m
        if m % 2:
            correction += harmonic * term
        else:
            correction -= harmonic * term
        if harmonic * term < _REL_FLOOR * abs(correction):
            break
    log_part = (math.log(0.5 * z) + EULER_GAMMA) * bessel_j0(z)
    return TWO_OVER_PI * (log_part + correction)


def bessel_k0(z: float) -> float:
    """K0 from the I0 series and its harmonic-number companion.

    K0(z) = -(ln(z/2) + gamma) I0(z) + sum_{m>=1} h_m (z^2/4)^m / (m!)^2
    """
    _require_series_domain(z, "bessel_k0")
    q = 0.25 * z * z
    # One term ladder serves both sums; i0 >= 1 dominates, so its
    # truncation criterion stops the loop.
    term = 1.0
    i0 = 1.0
    harmonic = 0.0
    correction = 0.0
    for m in range(1, _MAX_TERMS):
        term *= q / (m * m)
        harmonic += 1.0 / m
        i0 += term
        correction += harmonic * term
        if term < _REL_FLOOR * i0:
            break
    return -(math.log(0.5 * z) + EULER_GAMMA) * i0 + correction


def hankel1_0(z: float) -> ComplexValue:
    """H0(z) = J0(z) + i Y0(z), components on the same summation path."""
    _require_series_domain(z, "hankel1_0")
    return ComplexValue(bessel_j0(z), bessel_y0(z))


def k0_small_z(z: float) -> float:
    """Two-term z -> 0 form of K0: -ln(z/2) - gamma."""
    _require_positive(z, "k0_small_z")
    return -math.log(0.5 * z) - EULER_GAMMA


def hankel1_0_small_z(z: float) -> ComplexValue:
    """Two-term z -> 0 form of H0: 1 + (2i/pi)(ln(z/2) + gamma)."""
    _require_positive(z, "hankel1_0_small_z")
    return ComplexValue(1.0, TWO_OVER_PI * (math.log(0.5 * z) + EULER_GAMMA))
