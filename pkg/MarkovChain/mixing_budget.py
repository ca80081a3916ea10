import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from Common.config import ENUMERATION_CAP
from Common.errors import CapacityError, InputError
from Distributions import HomogeneousDistribution, count_candidates

logger = logging.getLogger(__name__)

SINGLETON_C_MU = 0.5


@dataclass(frozen=True)
class MixingBudget:
    """
    tau = ceil((1 / c_mu) * ln(1 / (epsilon * mu(S0)))) steps bound the mixing time from S0.
    c_mu_source is 'enumerated' (exact C_mu), 'universal' (1 / (2kn)) or 'singleton' (one-state support, tau = 0)
    """
    c_mu: float
    mu_start_normalized: float
    epsilon: float
    tau: int
    log_mu_start: float = 0.0
    c_mu_source: str = 'enumerated'

    @classmethod
    def from_values(cls, c_mu: float, log_mu_start: float, epsilon: float, c_mu_source: str = 'enumerated'):
        tau = math.ceil((math.log(1 / epsilon) - log_mu_start) / c_mu)
        return cls(c_mu, math.exp(log_mu_start), epsilon, max(tau, 0), log_mu_start, c_mu_source)


def universal_c_mu_bound(n: int, k: int) -> float:
    """ C_mu >= 1 / (2kn) for every distribution the chain runs on """
    return 1 / (2 * k * n)


def mixing_budget(d: HomogeneousDistribution, start: Sequence[int], epsilon: float,
                  start_mass_lower_bound: Optional[float] = None, cap: int = ENUMERATION_CAP) -> MixingBudget:
    """
    Step budget of the chain from start.
    With an enumerable support, C_mu and mu(S0) are exact. Otherwise C_mu falls back to 1 / (2kn)
    and the caller must supply a lower bound on the normalized mu(S0).
    :raises InputError: start is not in the support, or epsilon is outside (0, 1)
    :raises CapacityError: the support is not enumerable and no start-mass bound was given
    """
    from Diagnostics.c_mu import compute_c_mu
    from Diagnostics.exact_distribution import enumerate_distribution

    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must lie in (0, 1), got {epsilon}")
    start = tuple(start)
    d.validate_subset(start)
    if d.log_mass(start) == -math.inf:
        raise InputError(f"start state {list(start)} is not in the support")
    if d.k in (0, d.n):
        return MixingBudget(SINGLETON_C_MU, 1.0, epsilon, 0, 0.0, 'singleton')

    if count_candidates(d) <= cap:
        exact = enumerate_distribution(d, cap)
        if len(exact.states) == 1:
            return MixingBudget(SINGLETON_C_MU, 1.0, epsilon, 0, 0.0, 'singleton')
        budget = MixingBudget.from_values(compute_c_mu(d, exact), exact.log_prob(start), epsilon, 'enumerated')
    else:
        if start_mass_lower_bound is None:
            required = count_candidates(d)
            raise CapacityError(required, cap, remedy=f"no start-mass bound is known for this start: "
                                f"rerun with --steps, or with --cap {required} or larger")
        budget = MixingBudget.from_values(universal_c_mu_bound(d.n, d.k), math.log(start_mass_lower_bound),
                                          epsilon, 'universal')
    logger.info("Mixing budget: C_mu=%.6g (%s), mu(S0)=%.6g, epsilon=%g, tau=%d steps",
                budget.c_mu, budget.c_mu_source, budget.mu_start_normalized, epsilon, budget.tau)
    return budget
