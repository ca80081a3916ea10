import math
from typing import Optional

from Common.config import ENUMERATION_CAP
from Common.errors import DomainError, NumericalError
from Diagnostics.exact_distribution import ExactDistribution, enumerate_distribution
from Distributions import HomogeneousDistribution
from Distributions.subset import exchange
from MarkovChain.kernel import exchange_probability
from MarkovChain.mixing_budget import SINGLETON_C_MU, universal_c_mu_bound

C_MU_ATOL = 1e-12


def compute_c_mu(d: HomogeneousDistribution, exact: Optional[ExactDistribution] = None,
                 cap: int = ENUMERATION_CAP) -> float:
    """
    C_mu: minimum over exchange-adjacent support pairs {S, T} of max(P(S, T), P(T, S)).
    One of the two Metropolis ratios is >= 1, so this equals 1 / (2k(n-k)) whenever the support has
    two or more states. A one-state support gets SINGLETON_C_MU
    :raises DomainError: the support has several states but no exchange-adjacent pair
    :raises NumericalError: the value breaks 1 / (2kn) <= C_mu == 1 / (2k(n-k))
    """
    if exact is None:
        exact = enumerate_distribution(d, cap)
    n, k = d.n, d.k
    if len(exact) == 1 or k in (0, n):
        return SINGLETON_C_MU
    c_mu = math.inf
    for a, state in enumerate(exact.states):
        members = set(state)
        for i in state:
            for j in range(n):
                if j in members:
                    continue
                b = exact.get_index(exchange(state, i, j))
                if b is None or b < a:
                    continue
                forward = exchange_probability(n, k, exact.log_masses[a], exact.log_masses[b])
                backward = exchange_probability(n, k, exact.log_masses[b], exact.log_masses[a])
                c_mu = min(c_mu, max(forward, backward))
    if c_mu == math.inf:
        raise DomainError("no two support states differ by a single exchange")
    expected = 1 / (2 * k * (n - k))
    if c_mu < universal_c_mu_bound(n, k) or abs(c_mu - expected) > C_MU_ATOL:
        raise NumericalError(f"C_mu = {c_mu!r}, expected {expected!r}")
    return c_mu
