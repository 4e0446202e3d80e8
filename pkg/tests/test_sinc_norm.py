from fractions import Fraction
import math
import numpy as np
import pytest

from sinclp.constants import BALL_CUTOFF, BALL_RATIO, SQRT_3_OVER_PI
from sinclp.core import (
    averaged_tail,
    central_integral,
    choose_cutoff,
    log_abs_sinc,
    sin_power_mean,
    sinc_lp_integral,
    sinc_pow_integrand,
    tail_bound,
)
from sinclp.errors import ConvergenceError, DivergenceError, DomainError
from sinclp.models import QuadratureConfig, TailPolicy

EXACT = {
    1: Fraction(1),
    2: Fraction(2, 3),
    3: Fraction(11, 20),
    4: Fraction(151, 315),
}


class TestIntegrand:
    """The integrand |sin t / t|^(2p) and its logarithm."""

    def test_value_at_origin(self):
        assert sinc_pow_integrand(0.0, 3.5) == 1.0

    def test_matches_direct_formula(self):
        t = np.array([0.3, 0.999, 1.0, 2.0, 7.5, 40.0])
        direct = (np.sin(t) / t) ** 4
        assert np.allclose(sinc_pow_integrand(t, 2.0), direct, rtol=1e-13)

    def test_series_and_direct_log_agree_at_switch(self):
        below = log_abs_sinc(np.nextafter(1.0, 0.0))
        above = log_abs_sinc(1.0)
        assert below == pytest.approx(above, rel=1e-14)

    def test_even(self):
        t = np.linspace(0.1, 10.0, 7)
        assert np.array_equal(log_abs_sinc(t), log_abs_sinc(-t))

    def test_large_power_keeps_relative_accuracy(self):
        # (sin t / t)^(2p) ~ exp(-p t^2 / 3) near the origin
        p, t = 1e6, 1e-3
        expected = math.exp(2.0 * p * math.log(math.sin(t) / t))
        assert sinc_pow_integrand(t, p) == pytest.approx(expected, rel=1e-8)

    def test_zero_at_multiples_of_pi(self):
        assert sinc_pow_integrand(np.pi, 2.0) == pytest.approx(0.0, abs=1e-30)

    def test_divergent_exponent_rejected(self):
        with pytest.raises(DomainError):
            sinc_pow_integrand(1.0, 0.25)


class TestTail:
    """Majorant and averaged treatment of the mass beyond the cutoff."""

    def test_majorant_formula(self):
        assert tail_bound(1.0, math.pi) == pytest.approx(2.0 / math.pi**2)

    def test_majorant_at_ball_cutoff(self):
        # (1/pi) (sqrt5/6)^(2p-1) / (p - 1/2)
        for p in (1.0, 2.0, 2.5, 5.0, 7.0, 10.0):
            expected = BALL_RATIO ** (2 * p - 1) / (math.pi * (p - 0.5))
            assert tail_bound(p, BALL_CUTOFF) == pytest.approx(
                expected, rel=1e-15
            )

    def test_majorant_divergent(self):
        with pytest.raises(DivergenceError):
            tail_bound(0.5, 10.0)

    def test_nonpositive_cutoff(self):
        with pytest.raises(DomainError):
            tail_bound(2.0, 0.0)

    def test_infinite_exponent(self):
        with pytest.raises(DomainError):
            tail_bound(math.inf, 10.0)
        with pytest.raises(DomainError):
            choose_cutoff(math.inf, 1e-8)

    @pytest.mark.parametrize(
        "p, mean", [(1.0, 0.5), (2.0, 0.375), (3.0, 0.3125)]
    )
    def test_sin_power_mean(self, p, mean):
        assert sin_power_mean(p) == pytest.approx(mean, rel=1e-14)

    def test_averaged_remainder_is_smaller_than_majorant(self):
        estimate, remainder = averaged_tail(1.0, 100 * math.pi)
        assert estimate == pytest.approx(0.5 * tail_bound(1.0, 100 * math.pi))
        assert remainder < 1e-3 * tail_bound(1.0, 100 * math.pi)


class TestCutoff:
    """Choice of the lobe boundary T."""

    @pytest.mark.parametrize("policy", list(TailPolicy))
    @pytest.mark.parametrize("p", [1.0, 1.5, 3.0, 20.0])
    def test_smallest_admissible_lobe(self, p, policy):
        tol = 1e-8
        cutoff = choose_cutoff(p, tol, policy)
        k = round(cutoff / math.pi)
        assert cutoff == k * math.pi
        assert cutoff >= BALL_CUTOFF

        def error(T):
            if policy == TailPolicy.AVERAGED:
                return averaged_tail(p, T)[1]
            return tail_bound(p, T)

        assert error(cutoff) <= tol / 2
        if (k - 1) * math.pi >= BALL_CUTOFF:
            assert error((k - 1) * math.pi) > tol / 2

    def test_default_policy_is_majorant(self):
        assert choose_cutoff(2.0, 1e-6) == choose_cutoff(
            2.0, 1e-6, TailPolicy.MAJORANT
        )

    def test_majorant_out_of_reach_near_half(self):
        with pytest.raises(DomainError):
            choose_cutoff(0.50001, 1e-12)


class TestIntegral:
    """I(p) = (1/pi) int (sin^2 t / t^2)^p dt."""

    @pytest.mark.parametrize("p", sorted(EXACT))
    def test_integer_exponents(self, p, cfg):
        result = sinc_lp_integral(float(p), cfg)
        assert result.value == pytest.approx(float(EXACT[p]), abs=1e-10)
        deviation = abs(result.value - float(EXACT[p]))
        assert deviation <= result.total_error + 1e-15

    def test_error_budget_adds_up(self, cfg):
        result = sinc_lp_integral(2.5, cfg)
        assert result.total_error == result.quad_error + result.tail_bound
        assert result.lower < result.value < result.upper
        assert result.cutoff >= BALL_CUTOFF

    def test_majorant_policy_enclosure(self, majorant_cfg):
        result = sinc_lp_integral(3.0, majorant_cfg)
        assert result.tail_bound <= 0.5e-8
        assert result.lower <= 0.55 <= result.upper

    def test_non_integer_between_integers(self, cfg):
        result = sinc_lp_integral(1.5, cfg)
        assert float(EXACT[2]) < result.value < float(EXACT[1])

    @pytest.mark.parametrize("p", [0.9, math.inf, math.nan])
    def test_outside_domain(self, p):
        with pytest.raises(DomainError):
            sinc_lp_integral(p)

    def test_majorant_lobe_count_capped(self):
        cfg = QuadratureConfig(tail_policy=TailPolicy.MAJORANT)
        with pytest.raises(DomainError, match="averaged"):
            sinc_lp_integral(1.0, cfg)

    def test_averaged_lobe_count_capped(self):
        cfg = QuadratureConfig(abs_tol=1e-18, rel_tol=0.0)
        with pytest.raises(DomainError, match="loosen the tolerance"):
            sinc_lp_integral(1.0, cfg)

    def test_lobe_failure_raises(self):
        cfg = QuadratureConfig(abs_tol=1e-14, rel_tol=0.0, max_subdivisions=1)
        with pytest.raises(ConvergenceError) as info:
            sinc_lp_integral(1.0, cfg)
        assert info.value.lobe == 0
        assert not info.value.result.converged


class TestLargeExponent:
    """The narrow central peak of the integrand at large p."""

    @pytest.mark.parametrize("p", [2e5, 5e5, 1e6])
    def test_matches_laplace_expansion(self, p, cfg):
        # I(p) = sqrt(3 / (pi p)) (1 - 3 / (40 p) + O(p^-2))
        expected = math.sqrt(3.0 / (math.pi * p)) * (1.0 - 3.0 / (40.0 * p))
        result = sinc_lp_integral(p, cfg)
        assert result.value == pytest.approx(expected, rel=1e-8)
        assert result.total_error < 1e-8 * expected

    def test_central_part_carries_the_mass(self, cfg):
        p = 1e4
        central = central_integral(p, cfg)
        assert central == pytest.approx(
            sinc_lp_integral(p, cfg).value, rel=1e-9
        )
        assert central <= SQRT_3_OVER_PI / math.sqrt(p)

    def test_central_part_at_huge_exponent(self, cfg):
        p = 1e6
        expected = math.sqrt(3.0 / (math.pi * p))
        assert central_integral(p, cfg) == pytest.approx(expected, rel=1e-6)


class TestCentralPart:
    """The part of I(p) over [-6/sqrt5, 6/sqrt5]."""

    @pytest.mark.parametrize("p", [1.0, 2.0, 5.5, 50.0])
    def test_central_plus_tail_bounds_integral(self, p, cfg):
        central = central_integral(p, cfg)
        total = sinc_lp_integral(p, cfg)
        assert central < total.upper
        assert total.lower <= central + tail_bound(p, BALL_CUTOFF) + 1e-12

    def test_below_domain(self):
        with pytest.raises(DomainError):
            central_integral(0.5)
