import math

import numpy as np
import pytest

from nfpls import (ChannelModel, DomainError, LinkBudget, NodeGeometry,
                   achieved_secrecy_rate, build_channel, min_power_closed,
                   min_power_eigen_oracle, power_limit,
                   secrecy_capacity_closed)
from nfpls.selftest import sample_instances
from nfpls.stats import LinkStats

from conftest import PHI_B, SPACING, THETA_B, WAVELENGTH, make_array


def _stats(gain_bob, gain_eve, rho):
    return LinkStats(gain_bob=gain_bob, gain_eve=gain_eve, rho=rho,
                     model=ChannelModel.NUSW, provenance="closed_form")


class TestClosedForm:
    def test_vanishing_eavesdropper_gain(self):
        stats = _stats(2e-3, 1e-30, 0.3)
        outcome = min_power_closed(stats, 0.1, 0.1, 1.5)
        expected = (2.0 ** 1.5 - 1.0) * 0.1 / 2e-3
        assert outcome.achievable
        assert outcome.power == pytest.approx(expected, rel=1e-9)

    def test_unachievable_condition(self):
        # parallel channels with Eve at least as strong per unit noise
        outcome = min_power_closed(_stats(1e-3, 1e-3, 1.0), 0.1, 0.1, 1.0)
        assert not outcome.achievable
        assert outcome.power == math.inf
        barely = min_power_closed(_stats(2.1e-3, 1e-3, 1.0), 0.1, 0.1, 1.0)
        assert barely.achievable

    def test_rate_domain(self):
        with pytest.raises(DomainError):
            min_power_closed(_stats(1e-3, 1e-3, 0.5), 0.1, 0.1, 0.0)

    def test_monotone_in_rate_and_correlation(self):
        powers = [min_power_closed(_stats(2e-3, 1e-3, 0.4), 0.1, 0.1, r0).power
                  for r0 in np.linspace(0.2, 4.0, 15)]
        assert all(a < b for a, b in zip(powers, powers[1:]))
        powers = [min_power_closed(_stats(2e-3, 1e-3, rho), 0.1, 0.1, 1.0).power
                  for rho in np.linspace(0.0, 0.999, 15)]
        assert all(a < b for a, b in zip(powers, powers[1:]))

    def test_closed_loop_duality(self):
        # capacity evaluated at the minimum power returns the target rate
        rng = np.random.default_rng(23)
        for _ in range(120):
            stats = _stats(10 ** rng.uniform(-5, -1), 10 ** rng.uniform(-5, -1),
                           rng.uniform(0.0, 0.999))
            noise_b = 10 ** rng.uniform(-3, 0)
            noise_e = 10 ** rng.uniform(-3, 0)
            r0 = rng.uniform(0.2, 4.0)
            outcome = min_power_closed(stats, noise_b, noise_e, r0)
            assert outcome.achievable
            at_min = secrecy_capacity_closed(
                stats, LinkBudget(outcome.power, noise_b, noise_e)).capacity
            below = secrecy_capacity_closed(
                stats, LinkBudget(0.99 * outcome.power, noise_b, noise_e)).capacity
            assert at_min == pytest.approx(r0, abs=1e-6)
            assert below < r0


class TestEigenOracle:
    @pytest.fixture(scope="class")
    def instances(self):
        return sample_instances(48, seed=424, max_side=7)

    def test_span_and_dense_match_closed_form(self, instances):
        for model, arr, nb, ne, h_b, h_e, budget, r0, stats in instances:
            closed = min_power_closed(stats, budget.noise_bob, budget.noise_eve, r0)
            span = min_power_eigen_oracle(h_b, h_e, budget.noise_bob,
                                          budget.noise_eve, r0, method="span")
            dense = min_power_eigen_oracle(h_b, h_e, budget.noise_bob,
                                           budget.noise_eve, r0, method="dense")
            assert closed.achievable == span.achievable == dense.achievable
            if closed.achievable:
                assert span.power == pytest.approx(closed.power, rel=1e-9)
                assert dense.power == pytest.approx(closed.power, rel=1e-9)

    def test_unachievable_verdicts_agree(self, baseline_array, node_bob):
        node_e = NodeGeometry(12.0, THETA_B, PHI_B)  # co-directional, close
        arr = make_array(7, 7)
        h_b = build_channel("upw", arr, node_bob)
        h_e = build_channel("upw", arr, node_e)
        closed = min_power_closed(
            LinkStats(h_b.norm_squared, h_e.norm_squared, 1.0,
                      ChannelModel.UPW, "direct"), 0.1, 0.1, 2.0)
        oracle = min_power_eigen_oracle(h_b, h_e, 0.1, 0.1, 2.0, method="dense")
        assert not closed.achievable
        assert not oracle.achievable

    def test_rank_one_theta(self, node_bob):
        arr = make_array(1, 5)
        h_b = build_channel("nusw", arr, node_bob)
        h_e_zero = np.zeros(5, dtype=complex)
        outcome = min_power_eigen_oracle(h_b, h_e_zero, 0.1, 0.1, 1.0,
                                         method="span")
        # principal eigenvalue collapses to G_b / noise_b
        expected = (2.0 - 1.0) / (h_b.norm_squared / 0.1)
        assert outcome.power == pytest.approx(expected, rel=1e-12)

    def test_direction_meets_rate_with_equality(self, instances):
        for model, arr, nb, ne, h_b, h_e, budget, r0, stats in instances[:12]:
            oracle = min_power_eigen_oracle(h_b, h_e, budget.noise_bob,
                                            budget.noise_eve, r0, method="dense")
            if not oracle.achievable:
                continue
            w = math.sqrt(oracle.power) * oracle.beamformer_direction
            rate = achieved_secrecy_rate(w, h_b, h_e, budget.noise_bob,
                                         budget.noise_eve)
            assert rate == pytest.approx(r0, abs=1e-9)

    def test_dense_size_limit(self, node_bob, node_eve_codir):
        arr = make_array(21, 21)
        h_b = build_channel("upw", arr, node_bob)
        h_e = build_channel("upw", arr, node_eve_codir)
        with pytest.raises(DomainError):
            min_power_eigen_oracle(h_b, h_e, 0.1, 0.1, 1.0, method="dense")


class TestPowerLimit:
    def test_nusw_floor_value(self, baseline_array, node_bob, node_eve_codir):
        value = power_limit("nusw", baseline_array, node_bob, node_eve_codir,
                            0.1, 1.0)
        area = WAVELENGTH ** 2 / (4.0 * math.pi)
        expected = 2.0 * 1.0 * SPACING ** 2 * 0.1 / area
        assert value == pytest.approx(expected, rel=1e-14)
        assert value == pytest.approx(0.6283, abs=5e-4)

    def test_upw_codirectional_boundary(self, baseline_array, node_bob):
        node_e = NodeGeometry(20.0, THETA_B, PHI_B)
        assert power_limit("upw", baseline_array, node_bob, node_e,
                           0.1, 2.0) == math.inf
        assert power_limit("upw", baseline_array, node_bob, node_e,
                           0.1, 1.9) == 0.0

    def test_usw_and_offaxis_upw_vanish(self, baseline_array, node_bob):
        node_e = NodeGeometry(20.0, 2 * math.pi / 3, math.pi / 3)
        assert power_limit("usw", baseline_array, node_bob, node_e, 0.1, 3.0) == 0.0
        assert power_limit("upw", baseline_array, node_bob, node_e, 0.1, 3.0) == 0.0


class TestNuswScaling:
    def test_power_decreases_with_m_and_respects_floor(self, node_bob,
                                                       node_eve_codir):
        from nfpls import closed_link_stats

        area = WAVELENGTH ** 2 / (4.0 * math.pi)
        floor = 2.0 * 1.0 * SPACING ** 2 * 0.1 / area
        previous = math.inf
        for m in (11, 31, 71, 151, 301):
            arr = make_array(m, m)
            stats = closed_link_stats("nusw", arr, node_bob, node_eve_codir)
            power = min_power_closed(stats, 0.1, 0.1, 1.0).power
            assert power < previous
            assert power >= floor * (1.0 - 1e-12)
            previous = power
