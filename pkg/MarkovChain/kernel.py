import math

from Common.errors import InputError
from Distributions import HomogeneousDistribution
from Distributions.subset import Subset
from MarkovChain.chain_config import LAZINESS


def exchange_probability(n: int, k: int, log_mass_from: float, log_mass_to: float) -> float:
    """ P(S, T) for exchange-adjacent support members S, T:
    the pair (i, j) is proposed with probability 1 / (k (n - k)) and accepted w.p. 1/2 min(1, mu(T) / mu(S)) """
    log_ratio = log_mass_to - log_mass_from
    ratio = 1.0 if log_ratio >= 0 else math.exp(log_ratio)
    return LAZINESS * ratio / (k * (n - k))


def stationary_transition_prob(d: HomogeneousDistribution, s: Subset, t: Subset) -> float:
    """ Off-diagonal entry P(S, T) of the chain's kernel; 0 unless |S - T| == 1 """
    s, t = tuple(s), tuple(t)
    if s == t:
        raise InputError("transition probability is defined here for distinct states only")
    log_mass_s, log_mass_t = d.log_mass(s), d.log_mass(t)
    for subset, log_mass in ((s, log_mass_s), (t, log_mass_t)):
        if log_mass == -math.inf:
            raise InputError(f"state {list(subset)} is not in the support")
    if len(set(s) - set(t)) != 1:
        return 0.0
    return exchange_probability(d.n, d.k, log_mass_s, log_mass_t)
