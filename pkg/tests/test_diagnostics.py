import math
from itertools import combinations

import numpy as np
import pytest

from Common.errors import CapacityError, DomainError, InputError
from Diagnostics import (SpectralKdppSampler, build_transition_matrix, check_conditional_negative_correlation,
                         check_negative_correlation, compute_c_mu, diagnose, dirichlet_ratio,
                         elementary_symmetric_table, empirical_tv, enumerate_distribution, exact_mixing_time,
                         multinomial_tv_allowance, poincare_constant, poincare_eigenfunction,
                         spectral_kdpp_sample, spectral_mixing_bound, total_variation, tv_at_budget, tv_curve)
from Diagnostics.exact_distribution import ExactDistribution
from Diagnostics.transition_matrix import TransitionMatrix
from Distributions import KDPP, ExplicitTable
from Distributions.Setups import cycle_graph, random_kdpp
from MarkovChain import ChainConfig, sample_many


def _two_state(c, pi_one):
    """ Reversible two-state chain with P(0, 1) = c pi(1) and P(1, 0) = c pi(0) """
    probs = np.array([1 - pi_one, pi_one])
    p = np.array([[1 - c * pi_one, c * pi_one], [c * (1 - pi_one), 1 - c * (1 - pi_one)]])
    pi = ExactDistribution(1, 1, ((0,), (1,)), probs, np.log(probs))
    return TransitionMatrix(pi.states, p), pi


class TestEnumerate:
    def test_identity(self, uniform_4_2):
        exact = enumerate_distribution(uniform_4_2)
        assert exact.states == tuple(combinations(range(4), 2))
        np.testing.assert_allclose(exact.probs, 1 / 6)

    def test_diagonal(self):
        np.testing.assert_allclose(enumerate_distribution(KDPP(np.diag([1.0, 3.0]), 1)).probs, [0.25, 0.75])

    def test_proportional_to_determinants(self, rng):
        d = random_kdpp(5, 2, rng)
        exact = enumerate_distribution(d)
        masses = np.array([d.mass(s) for s in exact.states])
        np.testing.assert_allclose(exact.probs, masses / masses.sum(), rtol=1e-10)

    def test_capacity(self, uniform_4_2):
        with pytest.raises(CapacityError):
            enumerate_distribution(uniform_4_2, cap=5)

    def test_unknown_state(self, heavy_light_table):
        with pytest.raises(InputError):
            enumerate_distribution(heavy_light_table).prob((2, 3))


class TestTransitionMatrix:
    def test_uniform(self, uniform_4_2):
        transition = build_transition_matrix(uniform_4_2)
        p = transition.P
        np.testing.assert_allclose(np.diag(p), 0.5)
        # (0, 1) and (2, 3) are the only non-adjacent pair from (0, 1)
        np.testing.assert_allclose(p[0, 1:5], 1 / 8)
        assert p[0, 5] == 0.0

    def test_single_state(self):
        transition = build_transition_matrix(ExplicitTable(3, 2, {(0, 2): 1.0}))
        np.testing.assert_array_equal(transition.P, [[1.0]])

    def test_invariants(self, rng):
        d = random_kdpp(6, 3, rng)
        exact = enumerate_distribution(d)
        assert build_transition_matrix(d, exact).check_invariants(exact) == []

    def test_detects_irreversible_kernel(self, uniform_4_2):
        exact = enumerate_distribution(uniform_4_2)
        p = np.array(build_transition_matrix(uniform_4_2, exact).P)
        p[0, 1] += 0.01
        p[0, 0] -= 0.01
        problems = TransitionMatrix(exact.states, p).check_invariants(exact)
        assert any("detailed balance" in problem for problem in problems)


class TestPoincare:
    @pytest.mark.parametrize("c", [0.1, 0.25, 0.5])
    @pytest.mark.parametrize("pi_one", [0.2, 0.5, 0.9])
    def test_two_state(self, c, pi_one):
        transition, pi = _two_state(c, pi_one)
        assert poincare_constant(transition, pi) == pytest.approx(c, abs=1e-10)

    def test_one_state(self):
        table = ExplicitTable(3, 2, {(0, 2): 1.0})
        exact = enumerate_distribution(table)
        assert poincare_constant(build_transition_matrix(table, exact), exact) == 1.0

    def test_uniform_matches_direct_eigensolve(self, uniform_4_2):
        exact = enumerate_distribution(uniform_4_2)
        transition = build_transition_matrix(uniform_4_2, exact)
        direct = np.sort(np.linalg.eigvalsh(transition.P))
        assert poincare_constant(transition, exact) == pytest.approx(1 - direct[-2], abs=1e-12)

    def test_dirichlet_ratio(self, rng):
        d = random_kdpp(5, 2, rng)
        exact = enumerate_distribution(d)
        transition = build_transition_matrix(d, exact)
        poincare = poincare_constant(transition, exact)
        f = poincare_eigenfunction(transition, exact)
        assert dirichlet_ratio(transition, exact, f) == pytest.approx(poincare, rel=1e-8)
        for _ in range(20):
            assert dirichlet_ratio(transition, exact, rng.standard_normal(len(exact))) >= poincare - 1e-12

    def test_dirichlet_ratio_of_constant(self, uniform_4_2):
        exact = enumerate_distribution(uniform_4_2)
        with pytest.raises(InputError):
            dirichlet_ratio(build_transition_matrix(uniform_4_2, exact), exact, np.ones(6))

    def test_spectral_mixing_bound(self):
        assert spectral_mixing_bound(0.125, 1 / 6, 0.01) == 52


class TestCMu:
    def test_uniform_4_2(self, uniform_4_2):
        assert compute_c_mu(uniform_4_2) == pytest.approx(1 / 8, abs=1e-12)

    def test_n6_k2(self, rng):
        assert compute_c_mu(random_kdpp(6, 2, rng)) == pytest.approx(1 / 16, abs=1e-12)

    def test_universal_lower_bound(self, rng):
        for n, k in ((5, 1), (5, 2), (7, 3)):
            assert compute_c_mu(random_kdpp(n, k, rng)) >= 1 / (2 * k * n)

    def test_single_state(self):
        assert compute_c_mu(ExplicitTable(3, 2, {(0, 2): 1.0})) == 0.5

    def test_no_adjacent_pairs(self, disjoint_table):
        with pytest.raises(DomainError):
            compute_c_mu(disjoint_table)


class TestTotalVariation:
    def test_curve_starts_at_point_mass(self, uniform_4_2):
        exact = enumerate_distribution(uniform_4_2)
        curve = tv_curve(build_transition_matrix(uniform_4_2, exact), exact, (0, 1), 3)
        assert curve[0] == (0, pytest.approx(5 / 6))
        assert [t for t, _ in curve] == [0, 1, 2, 3]

    def test_curve_vanishes(self, rng):
        d = random_kdpp(5, 2, rng)
        exact = enumerate_distribution(d)
        transition = build_transition_matrix(d, exact)
        poincare = poincare_constant(transition, exact)
        t_max = 10 * math.ceil(math.log(1 / exact.probs.min()) / poincare)
        curve = tv_curve(transition, exact, exact.states[0], t_max)
        assert curve[-1][1] < 1e-10
        assert all(b <= a + 1e-12 for (_, a), (_, b) in zip(curve, curve[1:]))

    def test_budget_from_every_start(self, rng):
        d = random_kdpp(6, 3, rng)
        exact = enumerate_distribution(d)
        transition = build_transition_matrix(d, exact)
        taus, tvs = tv_at_budget(transition, exact, compute_c_mu(d, exact), 0.01)
        assert np.all(tvs <= 0.01)
        start = int(np.argmin(exact.probs))
        curve = tv_curve(transition, exact, exact.states[start], int(taus[start]))
        assert tvs[start] == pytest.approx(curve[-1][1], abs=1e-12)

    def test_exact_mixing_time(self, uniform_4_2):
        exact = enumerate_distribution(uniform_4_2)
        transition = build_transition_matrix(uniform_4_2, exact)
        t = exact_mixing_time(transition, exact, (0, 1), 0.01, 100)
        curve = tv_curve(transition, exact, (0, 1), t)
        assert curve[-1][1] <= 0.01 < curve[-2][1]
        assert exact_mixing_time(transition, exact, (0, 1), 0.01, 1) is None

    def test_total_variation(self):
        assert total_variation([1, 0], [0.5, 0.5]) == pytest.approx(0.5)

    def test_empirical_tv_counts_outside_support(self, heavy_light_table):
        exact = enumerate_distribution(heavy_light_table)
        assert empirical_tv([(2, 3)], exact) == pytest.approx(1.0)
        assert empirical_tv([(0, 1), (0, 2), (0, 2)], exact) == pytest.approx(0.0, abs=1e-12)


class TestNegativeCorrelation:
    def test_uniform(self):
        exact = enumerate_distribution(KDPP(np.eye(5), 2))
        result = check_negative_correlation(exact)
        assert result
        assert result.worst_gap == pytest.approx((2 / 5) ** 2 - 2 / 20)

    def test_kdpp(self, rng):
        assert check_negative_correlation(enumerate_distribution(random_kdpp(6, 3, rng)))

    def test_spanning_trees(self):
        assert check_negative_correlation(enumerate_distribution(cycle_graph(5)))

    def test_positively_correlated_table(self):
        # 0 and 1 appear together or not at all
        table = ExplicitTable(4, 2, {(0, 1): 1.0, (2, 3): 1.0, (0, 2): 0.1})
        result = check_negative_correlation(enumerate_distribution(table))
        assert not result
        assert result.worst_pair in {(0, 1), (2, 3)}

    def test_conditional(self, rng):
        assert check_conditional_negative_correlation(random_kdpp(6, 3, rng))

    def test_conditional_failure_is_labelled(self):
        table = ExplicitTable(5, 3, {(0, 1, 4): 1.0, (2, 3, 4): 1.0, (0, 2, 4): 0.1, (0, 1, 2): 0.01})
        result = check_conditional_negative_correlation(table)
        assert not result
        assert result.conditioned_on is not None


class TestSpectralSampler:
    def test_elementary_symmetric(self):
        table = elementary_symmetric_table(np.array([1.0, 2.0, 3.0]), 3)
        np.testing.assert_allclose(table[:, 3], [1, 6, 11, 6])

    def test_diagonal(self):
        d = KDPP(np.diag([1.0, 3.0]), 1)
        sampler = SpectralKdppSampler(d)
        rng = np.random.default_rng(3)
        draws = [sampler.sample(rng) for _ in range(4000)]
        assert abs(draws.count((1,)) / 4000 - 0.75) < 0.03

    def test_identity_is_uniform(self, rng):
        d = KDPP(np.eye(5), 2)
        sampler = SpectralKdppSampler(d)
        draws = [sampler.sample(rng) for _ in range(4000)]
        assert empirical_tv(draws, enumerate_distribution(d)) <= multinomial_tv_allowance(10, 4000)

    def test_matches_enumeration(self, rng):
        d = random_kdpp(6, 3, rng)
        sampler = SpectralKdppSampler(d)
        draws = [sampler.sample(rng) for _ in range(4000)]
        assert empirical_tv(draws, enumerate_distribution(d)) <= multinomial_tv_allowance(20, 4000)

    def test_rank_deficient_draws_stay_in_support(self, rng):
        d = random_kdpp(6, 2, rng, rank=2)
        for _ in range(50):
            assert d.in_support(spectral_kdpp_sample(d, rng))


class TestDiagnose:
    def test_uniform(self, uniform_4_2):
        report = diagnose(uniform_4_2, 0.01)
        record = report.to_record()
        assert record["c_mu"] == pytest.approx(0.125)
        assert record["lambda"] >= 0.125 - 1e-9
        assert record["tau_bound"] == 52
        assert report.failed_checks == []

    def test_disconnected_support(self, disjoint_table):
        report = diagnose(disjoint_table, 0.01)
        assert not report.exchange_ok
        assert 'exchange' in report.failed_checks
        assert 'poincare' in report.failed_checks

    def test_single_state(self):
        report = diagnose(ExplicitTable(3, 2, {(0, 2): 1.0}), 0.1)
        assert report.singleton_support
        assert report.tau_bound == 0
        assert report.failed_checks == []

    def test_random_instance_passes(self, rng):
        report = diagnose(random_kdpp(8, 3, rng), 0.01)
        assert report.failed_checks == []
        assert report.mixing_time is not None and report.mixing_time <= report.tau_bound
        assert report.tau_spectral <= report.tau_bound

    def test_start_outside_support(self, heavy_light_table):
        with pytest.raises(InputError):
            diagnose(heavy_light_table, 0.01, start=(2, 3))


class TestSamplerAgainstEnumeration:
    def test_small_run(self, rng):
        d = random_kdpp(6, 3, rng)
        exact = enumerate_distribution(d)
        start = exact.states[int(np.argmax(exact.probs))]
        results = sample_many(d, start, ChainConfig(epsilon=0.02, seed=5), 3000)
        tv = empirical_tv((r.subset for r in results), exact)
        assert tv <= 0.02 + multinomial_tv_allowance(len(exact), 3000)
