from .exact_distribution import ExactDistribution, enumerate_distribution
from .transition_matrix import TransitionMatrix, build_transition_matrix
from .spectral_gap import poincare_constant, poincare_eigenfunction, dirichlet_ratio, spectral_mixing_bound
from .c_mu import compute_c_mu
from .total_variation import (total_variation, tv_curve, is_nonincreasing, exact_mixing_time, tv_at_budget,
                              empirical_tv, multinomial_tv_allowance)
from .correlation import CorrelationCheck, check_negative_correlation, check_conditional_negative_correlation
from .spectral_sampler import SpectralKdppSampler, spectral_kdpp_sample, elementary_symmetric_table
from .report import DiagnosticsReport, diagnose
