from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from Common.config import ENUMERATION_CAP, NEGATIVE_CORRELATION_SLACK
from Common.errors import DomainError
from Diagnostics.exact_distribution import ExactDistribution, enumerate_distribution
from Distributions import HomogeneousDistribution, condition


@dataclass(frozen=True)
class CorrelationCheck:
    """ worst_gap = min over i < j of P(i) P(j) - P(i, j in S), attained at worst_pair """
    ok: bool
    worst_pair: Optional[Tuple[int, int]]
    worst_gap: float
    conditioned_on: Optional[Tuple[int, bool]] = None  # (element, contains) when found under conditioning

    def __bool__(self):
        return self.ok


def inclusion_marginals(pi: ExactDistribution, n: int) -> Tuple[np.ndarray, np.ndarray]:
    """ P(i in S) for every i and P(i, j in S) for every pair """
    indicators = np.zeros((len(pi), n))
    for a, state in enumerate(pi.states):
        indicators[a, list(state)] = 1.0
    singles = pi.probs @ indicators
    pairs = indicators.T @ (indicators * pi.probs[:, None])
    return singles, pairs


def check_negative_correlation(pi: ExactDistribution, n: Optional[int] = None,
                               slack: float = NEGATIVE_CORRELATION_SLACK) -> CorrelationCheck:
    """ P(i in S) P(j in S) >= P(i, j in S) for all i < j, up to -slack """
    n = pi.n if n is None else n
    if n < 2:
        return CorrelationCheck(True, None, 0.0)
    singles, pairs = inclusion_marginals(pi, n)
    gaps = np.outer(singles, singles) - pairs
    rows, cols = np.triu_indices(n, 1)
    worst = int(np.argmin(gaps[rows, cols]))
    worst_gap = float(gaps[rows[worst], cols[worst]])
    return CorrelationCheck(worst_gap >= -slack, (int(rows[worst]), int(cols[worst])), worst_gap)


def check_conditional_negative_correlation(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP,
                                           slack: float = NEGATIVE_CORRELATION_SLACK) -> CorrelationCheck:
    """ The pairwise check on every single-element conditioning with nonempty support.
    Returns the first failure (pair in the labels of d), or the overall worst gap when all pass """
    worst = CorrelationCheck(True, None, np.inf)
    for element in range(d.n):
        for contains in (True, False):
            try:
                conditioned = condition(d, element, contains, cap)
                exact = enumerate_distribution(conditioned, cap)
            except DomainError:
                continue
            result = check_negative_correlation(exact, conditioned.n, slack)
            if result.worst_pair is None:
                continue
            pair = tuple(conditioned.labels[i] for i in result.worst_pair)
            labelled = CorrelationCheck(result.ok, pair, result.worst_gap, (element, contains))
            if not result.ok:
                return labelled
            if result.worst_gap < worst.worst_gap:
                worst = labelled
    if worst.worst_pair is None:
        return CorrelationCheck(True, None, 0.0)
    return worst
