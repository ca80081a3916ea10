from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from Common.config import ENUMERATION_CAP
from Diagnostics.exact_distribution import ExactDistribution, enumerate_distribution
from Distributions import HomogeneousDistribution
from Distributions.subset import Subset, exchange
from MarkovChain.kernel import exchange_probability

ROW_SUM_ATOL = 1e-12
DETAILED_BALANCE_RTOL = 1e-12


@dataclass(frozen=True)
class TransitionMatrix:
    """ Dense kernel P of the chain over the states of an ExactDistribution (same order) """
    states: Tuple[Subset, ...]
    P: np.ndarray

    def check_invariants(self, pi: ExactDistribution) -> List[str]:
        """ Row-stochastic, lazy and reversible with respect to pi. Returns the violations found """
        problems = []
        row_error = np.max(np.abs(self.P.sum(axis=1) - 1))
        if row_error > ROW_SUM_ATOL:
            problems.append(f"rows sum to 1 only within {row_error:.3e}")
        if np.min(np.diag(self.P)) < 0.5 - ROW_SUM_ATOL:
            problems.append(f"not lazy: smallest holding probability {np.min(np.diag(self.P)):.6g}")
        flow = pi.probs[:, None] * self.P
        imbalance = np.abs(flow - flow.T)
        scale = np.maximum(flow, flow.T)
        if np.any(imbalance > DETAILED_BALANCE_RTOL * scale):
            problems.append(f"detailed balance fails by {np.max(imbalance - DETAILED_BALANCE_RTOL * scale):.3e}")
        return problems


def build_transition_matrix(d: HomogeneousDistribution, exact: Optional[ExactDistribution] = None,
                            cap: int = ENUMERATION_CAP) -> TransitionMatrix:
    """ Off-diagonal entries from the exchange kernel, holding probability 1 - (row sum) on the diagonal """
    if exact is None:
        exact = enumerate_distribution(d, cap)
    n, k, m = d.n, d.k, len(exact)
    p = np.zeros((m, m))
    for a, state in enumerate(exact.states):
        members = set(state)
        absent = [j for j in range(n) if j not in members]
        for i in state:
            for j in absent:
                b = exact.get_index(exchange(state, i, j))
                if b is not None:
                    p[a, b] = exchange_probability(n, k, exact.log_masses[a], exact.log_masses[b])
    p[np.diag_indices(m)] = 1 - p.sum(axis=1)
    p.setflags(write=False)
    return TransitionMatrix(exact.states, p)
