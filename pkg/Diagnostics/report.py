import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from Common.config import ENUMERATION_CAP
from Common.errors import DomainError, InputError
from Diagnostics.c_mu import compute_c_mu
from Diagnostics.correlation import check_conditional_negative_correlation, check_negative_correlation
from Diagnostics.exact_distribution import enumerate_distribution
from Diagnostics.spectral_gap import poincare_constant, spectral_mixing_bound
from Diagnostics.total_variation import is_nonincreasing, tv_at_budget, tv_curve
from Diagnostics.transition_matrix import build_transition_matrix
from Distributions import HomogeneousDistribution, check_exchange_property
from MarkovChain.mixing_budget import SINGLETON_C_MU, MixingBudget, universal_c_mu_bound
from StartState import initialize

logger = logging.getLogger(__name__)

POINCARE_ATOL = 1e-9


@dataclass(frozen=True)
class DiagnosticsReport:
    n: int
    k: int
    support_size: int
    start: Tuple[int, ...]
    epsilon: float
    poincare: float
    c_mu: float
    c_mu_lower_bound: float
    tau_bound: int
    tau_spectral: int
    mixing_time: Optional[int]
    tv_curve: List[Tuple[int, float]]
    tv_at_tau: float
    worst_tv_at_tau_all_starts: float
    negative_correlation_ok: bool
    conditional_negative_correlation_ok: bool
    exchange_ok: bool
    transition_problems: List[str] = field(default_factory=list)
    singleton_support: bool = False

    @property
    def poincare_ok(self) -> bool:
        return self.poincare >= self.c_mu - POINCARE_ATOL

    @property
    def tv_at_tau_ok(self) -> bool:
        return self.tv_at_tau <= self.epsilon and self.worst_tv_at_tau_all_starts <= self.epsilon

    @property
    def failed_checks(self) -> List[str]:
        checks = {'poincare': self.poincare_ok,
                  'tv_at_tau': self.tv_at_tau_ok,
                  'negative_correlation': self.negative_correlation_ok,
                  'conditional_negative_correlation': self.conditional_negative_correlation_ok,
                  'exchange': self.exchange_ok,
                  'transition_matrix': not self.transition_problems}
        return [name for name, ok in checks.items() if not ok]

    def to_record(self) -> dict:
        return {"lambda": self.poincare, "c_mu": self.c_mu, "c_mu_lower_bound": self.c_mu_lower_bound,
                "tau_bound": self.tau_bound, "tv_curve": [[t, tv] for t, tv in self.tv_curve],
                "negative_correlation_ok": self.negative_correlation_ok, "exchange_ok": self.exchange_ok,
                "n": self.n, "k": self.k, "support_size": self.support_size,
                "start": list(self.start), "epsilon": self.epsilon, "tau_spectral": self.tau_spectral,
                "mixing_time": self.mixing_time, "tv_at_tau": self.tv_at_tau,
                "worst_tv_at_tau_all_starts": self.worst_tv_at_tau_all_starts,
                "poincare_ok": self.poincare_ok, "tv_at_tau_ok": self.tv_at_tau_ok,
                "conditional_negative_correlation_ok": self.conditional_negative_correlation_ok,
                "transition_problems": self.transition_problems, "singleton_support": self.singleton_support,
                "failed_checks": self.failed_checks}


def diagnose(d: HomogeneousDistribution, epsilon: float, start: Optional[Sequence[int]] = None,
             cap: int = ENUMERATION_CAP) -> DiagnosticsReport:
    """
    Runs every exact check on an enumerable distribution: the kernel invariants, lambda >= C_mu,
    TV at the C_mu budget <= epsilon (from start and from every state), negative correlation
    (plain and under single conditionings) and the exchange property.
    A support with several states but no exchange-adjacent pair falls back to C_mu = 1 / (2kn) and fails
    the spectral check (lambda = 0)
    """
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    exact = enumerate_distribution(d, cap)
    start = tuple(start) if start is not None else initialize(d, cap).subset
    exact.index(start)
    singleton = len(exact) == 1

    transition = build_transition_matrix(d, exact)
    problems = transition.check_invariants(exact)
    poincare = poincare_constant(transition, exact)
    if singleton:
        c_mu = SINGLETON_C_MU
    else:
        try:
            c_mu = compute_c_mu(d, exact)
        except DomainError:
            c_mu = universal_c_mu_bound(d.n, d.k)
            logger.warning("Support is not connected under exchanges, using C_mu = 1/(2kn) = %g", c_mu)

    start_prob = exact.prob(start)
    if singleton:
        tau, tau_spectral, worst_all = 0, 0, 0.0
    else:
        tau = MixingBudget.from_values(c_mu, math.log(start_prob), epsilon).tau
        tau_spectral = spectral_mixing_bound(poincare, start_prob, epsilon) if poincare > POINCARE_ATOL else -1
        worst_all = float(tv_at_budget(transition, exact, c_mu, epsilon)[1].max())
    curve = tv_curve(transition, exact, start, tau)
    if not is_nonincreasing(curve):
        problems.append("TV curve is not nonincreasing")
    mixing_time = next((t for t, tv in curve if tv <= epsilon), None)

    negative = check_negative_correlation(exact, d.n)
    conditional = check_conditional_negative_correlation(d, cap)
    exchange = check_exchange_property(d, cap)

    report = DiagnosticsReport(
        n=d.n, k=d.k, support_size=len(exact), start=start, epsilon=epsilon,
        poincare=poincare, c_mu=c_mu, c_mu_lower_bound=universal_c_mu_bound(d.n, d.k) if d.k else SINGLETON_C_MU,
        tau_bound=tau, tau_spectral=tau_spectral, mixing_time=mixing_time, tv_curve=curve,
        tv_at_tau=curve[-1][1], worst_tv_at_tau_all_starts=worst_all,
        negative_correlation_ok=negative.ok, conditional_negative_correlation_ok=conditional.ok,
        exchange_ok=exchange.ok, transition_problems=problems, singleton_support=singleton)
    logger.info("Diagnostics: |supp|=%d, lambda=%.6g, C_mu=%.6g, tau=%d, TV(tau)=%.3e, failed=%s",
                report.support_size, poincare, c_mu, tau, report.tv_at_tau, report.failed_checks or 'none')
    if not negative.ok:
        logger.info("Positively correlated pair %s (gap %.3e)", negative.worst_pair, negative.worst_gap)
    if not exchange.ok:
        logger.info("Exchange property fails at (S, T, i) = %s", exchange.witness)
    return report
