"""Analytic bound formulas and the monotone kernels.

Three-decimal reference values for the band endpoint R_alpha (0.698,
0.741, 0.784, 0.823, 0.857, 0.885, 0.909 for alpha = 4..10 and 0.744 at
alpha = 1) are checked at +-5e-4.  Derived constants were frozen from the
extended-precision oracle in test_entropy.py conventions (mpmath, 50
digits); exact rationals are asserted tightly.
"""

import math

import mpmath as mp
import numpy as np
import pytest

from pauli_tsallis import (
    BlochVector,
    UnsupportedAlphaError,
    alpha_log,
    bound_set,
    entropic_sum,
    h_tilde,
    integer_order,
    interpolated_lower_bound,
    kernel_f,
    kernel_g,
    lower_bound,
    rescaled_band,
    upper_bound_mixed,
    upper_bound_pure,
)
from pauli_tsallis.bounds import (
    SERIES_THRESHOLD,
    _kernel_f_quotient,
    _kernel_f_series,
    _kernel_g_polynomial,
    _kernel_g_quotient,
)

mp.mp.dps = 50

# Oracle-frozen constants (50-digit evaluation of the defining formulas,
# rounded to double precision).
H_TILDE_1 = 0.5157067364635543
H_TILDE_HALF = 0.6955493547161966
TWO_LN_HALF_2 = 1.6568542494923806  # 2 ln_0.5(2) = 4 (sqrt 2 - 1)
R_REFERENCE = {
    1: 0.744,
    4: 0.698,
    5: 0.741,
    6: 0.784,
    7: 0.823,
    8: 0.857,
    9: 0.885,
    10: 0.909,
}


class TestIntegerOrder:
    def test_detects_integers_within_tolerance(self):
        assert integer_order(3.0) == 3
        assert integer_order(3.0 + 1e-13) == 3
        assert integer_order(3.0 + 1e-9) is None
        assert integer_order(2.5) is None


class TestLowerBound:
    def test_shannon_value(self):
        value, tight = lower_bound(1.0)
        assert tight
        assert value == pytest.approx(2.0 * math.log(2.0), abs=1e-15)

    def test_integer_two(self):
        value, tight = lower_bound(2.0)
        assert tight
        assert value == pytest.approx(1.0, abs=1e-15)
        # the interpolated formula coincides there
        assert interpolated_lower_bound(2.0) == pytest.approx(value, abs=1e-15)

    def test_order_half(self):
        value, tight = lower_bound(0.5)
        assert tight
        assert value == pytest.approx(TWO_LN_HALF_2, abs=1e-15)

    def test_just_above_one_interpolates_to_one(self):
        value, tight = lower_bound(1.0 + 1e-9)
        assert not tight
        assert value == pytest.approx(1.0, abs=1e-9)

    def test_noninteger_branch(self):
        value, tight = lower_bound(2.5)
        assert not tight
        # 2 (1 - 1/2)/1.5 + (1/2)(0.5)/1.5 = 5/6
        assert value == pytest.approx(5.0 / 6.0, abs=1e-15)

    def test_continuity_from_below_at_one(self):
        for eps in (1e-2, 1e-4, 1e-6):
            value, tight = lower_bound(1.0 - eps)
            assert tight
            assert abs(value - 2.0 * math.log(2.0)) <= 0.5 * eps

    def test_interpolation_equals_tight_value_at_integers(self):
        for n in range(2, 11):
            assert abs(interpolated_lower_bound(float(n)) - 2.0 * alpha_log(2.0, float(n))) <= 1e-12

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            lower_bound(0.0)
        with pytest.raises(ValueError):
            lower_bound(-2.0)


class TestUpperBoundMixed:
    def test_values(self):
        assert upper_bound_mixed(1.0) == pytest.approx(3.0 * math.log(2.0), abs=1e-15)
        assert upper_bound_mixed(2.0) == pytest.approx(1.5, abs=1e-15)

    @pytest.mark.parametrize("alpha", [0.3, 1.0, 2.0, 4.2, 9.0])
    def test_attained_at_completely_mixed_state(self, alpha):
        value = entropic_sum(BlochVector(0.0, 0.0, 0.0), alpha)
        assert value == pytest.approx(upper_bound_mixed(alpha), abs=1e-14)


class TestHTilde:
    def test_exact_rationals(self):
        assert h_tilde(2.0) == pytest.approx(1.0 / 3.0, abs=1e-15)
        assert h_tilde(3.0) == pytest.approx(0.25, abs=1e-15)

    def test_shannon_value(self):
        assert h_tilde(1.0) == pytest.approx(H_TILDE_1, abs=1e-15)
        assert h_tilde(1.0) / math.log(2.0) == pytest.approx(R_REFERENCE[1], abs=5e-4)

    def test_order_half(self):
        assert h_tilde(0.5) == pytest.approx(H_TILDE_HALF, abs=1e-15)


class TestUpperBoundPure:
    def test_constant_orders(self):
        assert upper_bound_pure(2.0) == (pytest.approx(1.0, abs=1e-15), True)
        assert upper_bound_pure(3.0) == (pytest.approx(0.75, abs=1e-15), True)

    def test_order_half(self):
        value, tight = upper_bound_pure(0.5)
        assert tight
        assert value == pytest.approx(3.0 * H_TILDE_HALF, abs=1e-14)

    def test_absent_for_noninteger_above_one(self):
        assert upper_bound_pure(2.5) is None
        assert upper_bound_pure(1.0 + 1e-6) is None


class TestRescaledBand:
    @pytest.mark.parametrize("alpha,expected", sorted(R_REFERENCE.items()))
    def test_reference_values(self, alpha, expected):
        low, high = rescaled_band(float(alpha))
        assert low == pytest.approx(2.0 / 3.0, abs=1e-15)
        assert high == pytest.approx(expected, abs=5e-4)

    def test_constant_orders_collapse_to_lower_endpoint(self):
        for alpha in (2.0, 3.0):
            low, high = rescaled_band(alpha)
            assert high == pytest.approx(2.0 / 3.0, abs=1e-14)

    def test_small_order_limit(self):
        _, high = rescaled_band(0.01)
        assert abs(high - 1.0) <= 0.01

    def test_band_ordering(self):
        for alpha in list(np.linspace(0.05, 1.0, 20)) + list(range(2, 13)):
            low, high = rescaled_band(float(alpha))
            assert 2.0 / 3.0 - 1e-12 <= high <= 1.0

    def test_unsupported_orders_raise(self):
        with pytest.raises(UnsupportedAlphaError):
            rescaled_band(2.5)
        with pytest.raises(UnsupportedAlphaError):
            rescaled_band(1.0 + 1e-6)


class TestKernelF:
    @pytest.mark.parametrize("alpha", [0.1, 0.25, 0.5, 0.9, 1.0])
    def test_value_two_at_origin(self, alpha):
        assert kernel_f(0.0, alpha) == 2.0

    def test_small_u_oracle_value(self):
        # quotient evaluated at 50 digits: f_0.5(1e-6) = 2.00000000000125
        assert kernel_f(1e-6, 0.5) == pytest.approx(2.00000000000125, abs=1e-14)

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 0.9, 1.0])
    def test_monotone_pairwise(self, alpha):
        assert kernel_f(0.3, alpha) < kernel_f(0.7, alpha)

    @pytest.mark.parametrize("alpha", [round(0.1 * k, 1) for k in range(1, 11)])
    def test_strictly_increasing_on_grid(self, alpha):
        u = np.linspace(0.0, 1.0, 1002)[1:-1]
        values = [kernel_f(float(x), alpha) for x in u]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 0.75, 1.0])
    def test_series_quotient_agreement_near_threshold(self, alpha):
        for u in np.linspace(SERIES_THRESHOLD / 2, 2 * SERIES_THRESHOLD, 25):
            assert abs(_kernel_f_series(float(u), alpha) - _kernel_f_quotient(float(u), alpha)) <= 1e-11

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 1.0])
    def test_continuous_at_threshold(self, alpha):
        u = SERIES_THRESHOLD
        assert abs(_kernel_f_series(u, alpha) - _kernel_f_quotient(u, alpha)) <= 1e-12

    def test_series_matches_extended_precision(self):
        for alpha in (0.25, 0.5, 0.9):
            for u in (1e-8, 1e-5, 5e-4):
                a, x = mp.mpf(alpha), mp.mpf(u)
                exact = ((1 - x) ** (a - 1) - (1 + x) ** (a - 1)) / ((1 - a) * x)
                assert kernel_f(u, alpha) == pytest.approx(float(exact), rel=1e-14)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            kernel_f(-0.1, 0.5)
        with pytest.raises(ValueError):
            kernel_f(1.0, 0.5)
        with pytest.raises(ValueError):
            kernel_f(0.5, 1.5)


class TestKernelG:
    def test_constant_orders_exact(self):
        for u in (0.0, 1e-5, 0.3, 0.999, 1.0):
            assert kernel_g(u, 1) == 0.0
            assert kernel_g(u, 2) == 2.0
            assert kernel_g(u, 3) == 4.0

    def test_order_four_half(self):
        # 2 C(3,1) + 2 C(3,3) u^2 at u = 1/2: 6 + 2/4 = 6.5
        assert kernel_g(0.5, 4) == pytest.approx(6.5, abs=1e-15)
        assert _kernel_g_quotient(0.5, 4) == pytest.approx(6.5, abs=1e-14)

    @pytest.mark.parametrize("n", range(4, 13))
    def test_strictly_increasing_on_grid(self, n):
        u = np.linspace(0.0, 1.0, 1002)[1:-1]
        values = [kernel_g(float(x), n) for x in u]
        assert all(b > a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("n", [4, 5, 8, 12])
    def test_polynomial_quotient_agreement_near_threshold(self, n):
        for u in np.linspace(SERIES_THRESHOLD / 2, 2 * SERIES_THRESHOLD, 25):
            assert abs(_kernel_g_polynomial(float(u), n) - _kernel_g_quotient(float(u), n)) <= 1e-11

    def test_accepts_integral_floats(self):
        assert kernel_g(0.25, 4.0) == kernel_g(0.25, 4)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            kernel_g(1.1, 4)
        with pytest.raises(ValueError):
            kernel_g(-0.1, 4)
        with pytest.raises(ValueError):
            kernel_g(0.5, 2.5)
        with pytest.raises(ValueError):
            kernel_g(0.5, 0)


class TestBoundSet:
    @pytest.mark.parametrize("alpha", [0.2, 0.5, 1.0, 2.0, 3.0, 4.0, 7.0])
    def test_supported_orders_fully_populated(self, alpha):
        bs = bound_set(alpha)
        assert bs.lower <= bs.upper_mixed
        assert bs.upper_pure is not None
        assert bs.upper_pure <= bs.upper_mixed + 1e-12
        assert bs.lower <= bs.upper_pure + 1e-12
        assert bs.r_alpha == pytest.approx(bs.h_tilde / alpha_log(2.0, alpha), abs=1e-15)
        assert bs.upper_pure_is_tight

    def test_noninteger_above_one_has_no_pure_data(self):
        bs = bound_set(2.5)
        assert not bs.lower_is_tight
        assert bs.upper_pure is None
        assert bs.h_tilde is None
        assert bs.r_alpha is None
        assert not bs.upper_pure_is_tight
