import math

import mpmath as mp
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deltascatter.errors import DomainError
from deltascatter.special_functions import (
    EULER_GAMMA,
    TWO_OVER_PI,
    ComplexValue,
    bessel_j0,
    bessel_k0,
    bessel_y0,
    hankel1_0,
    hankel1_0_small_z,
    k0_small_z,
)
from series_oracle import j0_series, k0_series, y0_series

# Frozen from tests/series_oracle.py at 50 digits, rounded to doubles.
J0_KNOWN = {0.5: 0.9384698072408129, 1.0: 0.7651976865579666, 2.0: 0.22389077914123567}
Y0_KNOWN = {0.5: -0.44451873350670656, 1.0: 0.08825696421567696, 2.0: 0.5103756726497451}
K0_KNOWN = {0.1: 2.427069024702017, 1.0: 0.42102443824070834, 2.0: 0.11389387274953344}

# 2 e^(-gamma), where the ln(z/2) + gamma prefactor crosses zero.
LOG_NODE = 1.1229189671337703

in_domain = st.floats(min_value=1e-3, max_value=2.0, allow_nan=False)
positive = st.floats(min_value=1e-300, max_value=1e300, allow_nan=False)

OUT_OF_DOMAIN = [0.0, -1.0, 2.0000000001, 3.0, math.inf, -math.inf, math.nan]


class TestComplexValue:
    def test_add(self):
        assert ComplexValue(1.0, 2.0).add(ComplexValue(0.5, -3.0)) == ComplexValue(1.5, -1.0)

    def test_scale(self):
        assert ComplexValue(2.0, -4.0).scale(0.25) == ComplexValue(0.5, -1.0)

    def test_times_i(self):
        assert ComplexValue(2.0, 3.0).times_i() == ComplexValue(-3.0, 2.0)

    def test_times_i_twice_negates(self):
        value = ComplexValue(0.7, -1.3)
        assert value.times_i().times_i() == value.scale(-1.0)

    def test_modulus_squared(self):
        assert ComplexValue(3.0, 4.0).modulus_squared() == 25.0
        assert ComplexValue(0.0, 0.0).modulus_squared() == 0.0

    @given(
        st.floats(min_value=-1e6, max_value=1e6),
        st.floats(min_value=-1e6, max_value=1e6),
    )
    def test_modulus_squared_nonnegative(self, re, im):
        assert ComplexValue(re, im).modulus_squared() >= 0.0


def test_euler_gamma_leading_digits():
    assert str(EULER_GAMMA).startswith("0.57721566")


def test_euler_gamma_matches_high_precision():
    assert EULER_GAMMA == pytest.approx(float(mp.euler), rel=1e-15)


@pytest.mark.parametrize("z,expected", sorted(J0_KNOWN.items()))
def test_j0_known_values(z, expected):
    assert bessel_j0(z) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("z,expected", sorted(Y0_KNOWN.items()))
def test_y0_known_values(z, expected):
    assert bessel_y0(z) == pytest.approx(expected, rel=1e-13)


@pytest.mark.parametrize("z,expected", sorted(K0_KNOWN.items()))
def test_k0_known_values(z, expected):
    assert bessel_k0(z) == pytest.approx(expected, rel=1e-13)


def test_j0_small_argument_limit():
    assert bessel_j0(1e-9) == 1.0
    assert bessel_j0(1e-4) == pytest.approx(1.0, abs=1e-8)


def test_y0_small_argument_divergence():
    # Dominated by the (2/pi) ln(z/2) term far below the node.
    z = 1e-8
    expected = TWO_OVER_PI * (math.log(0.5 * z) + EULER_GAMMA)
    assert bessel_y0(z) == pytest.approx(expected, rel=1e-12)
    assert bessel_y0(z) < -10.0


def test_k0_small_argument_divergence():
    z = 1e-8
    assert bessel_k0(z) == pytest.approx(-math.log(0.5 * z) - EULER_GAMMA, rel=1e-12)


def test_y0_at_log_node_is_pure_correction_series():
    # ln(z/2) + gamma vanishes there, so removing that term changes nothing.
    prefactor = math.log(0.5 * LOG_NODE) + EULER_GAMMA
    assert abs(prefactor) < 2e-16
    value = bessel_y0(LOG_NODE)
    assert value - TWO_OVER_PI * prefactor * bessel_j0(LOG_NODE) == pytest.approx(
        value, rel=1e-15
    )


@given(st.tuples(in_domain, in_domain).map(sorted))
def test_k0_strictly_decreasing(pair):
    z1, z2 = pair
    if z1 == z2:
        return
    assert bessel_k0(z1) > bessel_k0(z2)


@given(in_domain)
def test_k0_positive(z):
    assert bessel_k0(z) > 0.0


@given(in_domain)
def test_j0_bounded_by_one(z):
    assert abs(bessel_j0(z)) <= 1.0


@given(in_domain)
def test_hankel_components_bit_identical_to_parts(z):
    h = hankel1_0(z)
    assert h.re == bessel_j0(z)
    assert h.im == bessel_y0(z)


@given(in_domain)
def test_series_determinism(z):
    assert bessel_j0(z) == bessel_j0(z)
    assert bessel_y0(z) == bessel_y0(z)
    assert bessel_k0(z) == bessel_k0(z)


def test_hankel_known_value():
    h = hankel1_0(1.0)
    assert h.re == pytest.approx(J0_KNOWN[1.0], rel=1e-13)
    assert h.im == pytest.approx(Y0_KNOWN[1.0], rel=1e-13)


def test_hankel_im_negative_below_node():
    assert hankel1_0(0.1).im == pytest.approx(-1.5342386513503667, rel=1e-13)
    assert hankel1_0(0.1).im < 0.0


@pytest.mark.parametrize(
    "func", [bessel_j0, bessel_y0, bessel_k0, hankel1_0], ids=lambda f: f.__name__
)
@pytest.mark.parametrize("z", OUT_OF_DOMAIN)
def test_series_domain_rejected(func, z):
    with pytest.raises(DomainError):
        func(z)


@pytest.mark.parametrize("func", [k0_small_z, hankel1_0_small_z], ids=lambda f: f.__name__)
@pytest.mark.parametrize("z", [0.0, -1.0, math.inf, -math.inf, math.nan])
def test_small_z_forms_reject_nonpositive(func, z):
    with pytest.raises(DomainError):
        func(z)


def test_small_z_forms_accept_large_arguments():
    # The two-term forms carry no series, so no 2.0 cap applies.
    assert k0_small_z(2.5) < 0.0
    assert hankel1_0_small_z(2.5).re == 1.0


def test_k0_small_z_values():
    assert k0_small_z(2.0) == -EULER_GAMMA
    assert k0_small_z(0.01) == pytest.approx(4.721101701646504, rel=1e-15)
    assert abs(k0_small_z(LOG_NODE)) < 1e-15


def test_hankel_small_z_values():
    at_two = hankel1_0_small_z(2.0)
    assert at_two.re == 1.0
    assert at_two.im == pytest.approx(0.36746690519661596, rel=1e-14)
    at_node = hankel1_0_small_z(LOG_NODE)
    assert at_node.re == 1.0
    assert abs(at_node.im) < 1e-15


@given(positive)
def test_hankel_small_z_real_part_always_one(z):
    assert hankel1_0_small_z(z).re == 1.0


@given(positive)
def test_small_z_forms_share_the_rounded_log(z):
    # im = (2/pi)(ln(z/2)+gamma) and k0_small_z = -(ln(z/2)+gamma) are built
    # from bitwise-negated intermediates, so this holds exactly; downstream
    # cancellation at resonance depends on it.
    assert hankel1_0_small_z(z).im == -(TWO_OVER_PI * k0_small_z(z))


@pytest.mark.parametrize("z", [0.0015, 0.01, 0.11, 0.5, 0.9, 1.3, 1.7, 2.0])
def test_against_live_oracle(z):
    assert bessel_j0(z) == pytest.approx(float(j0_series(mp.mpf(z))), rel=1e-10)
    assert bessel_y0(z) == pytest.approx(float(y0_series(mp.mpf(z))), rel=1e-10)
    assert bessel_k0(z) == pytest.approx(float(k0_series(mp.mpf(z))), rel=1e-10)


def test_asymptotic_consistency_order():
    grid = [1e-1, 1e-2, 1e-3, 1e-4]
    previous = None
    for z in grid:
        bound = z * z * (abs(math.log(z)) + 1.0)
        diff_k0 = abs(bessel_k0(z) - k0_small_z(z))
        h, h_small = hankel1_0(z), hankel1_0_small_z(z)
        diff_re = abs(h.re - h_small.re)
        diff_im = abs(h.im - h_small.im)
        for diff in (diff_k0, diff_re, diff_im):
            assert diff <= bound
        if previous is not None:
            assert diff_k0 < previous[0]
            assert diff_re < previous[1]
            assert diff_im < previous[2]
        previous = (diff_k0, diff_re, diff_im)
