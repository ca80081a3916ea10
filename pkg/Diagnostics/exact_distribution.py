import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np
from scipy.special import logsumexp

from Common.config import ENUMERATION_CAP
from Common.errors import DomainError, InputError
from Distributions import HomogeneousDistribution, iter_candidates
from Distributions.subset import Subset


@dataclass(frozen=True)
class ExactDistribution:
    """ The normalized distribution over its support, states in lexicographic order """
    n: int
    k: int
    states: Tuple[Subset, ...]
    probs: np.ndarray
    log_masses: np.ndarray
    _index: Dict[Subset, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, '_index', {s: a for a, s in enumerate(self.states)})

    def __len__(self):
        return len(self.states)

    def index(self, subset) -> int:
        try:
            return self._index[tuple(subset)]
        except KeyError:
            raise InputError(f"state {list(subset)} is not in the support") from None

    def get_index(self, subset):
        return self._index.get(subset)

    def prob(self, subset) -> float:
        return float(self.probs[self.index(subset)])

    def log_prob(self, subset) -> float:
        return float(self.log_masses[self.index(subset)] - logsumexp(self.log_masses))


def enumerate_distribution(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP) -> ExactDistribution:
    """
    Visits every candidate k-subset in lexicographic order, keeps the positive masses and normalizes.
    :raises CapacityError: more than cap candidates
    :raises DomainError: the support is empty
    """
    states, log_masses = [], []
    for subset in iter_candidates(d, cap):
        log_mass = d.log_mass(tuple(subset))
        if log_mass > -math.inf:
            states.append(tuple(subset))
            log_masses.append(log_mass)
    if not states:
        raise DomainError(f"{d!r} has empty support")
    log_masses = np.array(log_masses)
    probs = np.exp(log_masses - logsumexp(log_masses))
    probs /= probs.sum()
    probs.setflags(write=False)
    log_masses.setflags(write=False)
    return ExactDistribution(d.n, d.k, tuple(states), probs, log_masses)
