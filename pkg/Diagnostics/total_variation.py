import logging
import math
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from Common.errors import InputError
from Diagnostics.exact_distribution import ExactDistribution
from Diagnostics.transition_matrix import TransitionMatrix

logger = logging.getLogger(__name__)

MONOTONE_ATOL = 1e-12


def total_variation(p, q) -> float:
    """ Half the L1 distance between two distributions on the same states """
    return 0.5 * float(np.sum(np.abs(np.asarray(p, dtype=float) - np.asarray(q, dtype=float))))


def is_nonincreasing(curve: Sequence[Tuple[int, float]], atol: float = MONOTONE_ATOL) -> bool:
    return all(later <= earlier + atol for (_, earlier), (_, later) in zip(curve, curve[1:]))


def tv_curve(transition: TransitionMatrix, pi: ExactDistribution, start, t_max: int) -> List[Tuple[int, float]]:
    """ Exact TV(P^t(S0, .), pi) for t = 0..t_max, by iterated vector-matrix products of the indicator of S0 """
    row = np.zeros(len(pi))
    row[pi.index(start)] = 1.0
    curve = [(0, total_variation(row, pi.probs))]
    for t in range(1, t_max + 1):
        row = row @ transition.P
        curve.append((t, total_variation(row, pi.probs)))
    if not is_nonincreasing(curve):
        logger.warning("TV curve from %s increases somewhere, the chain is not lazy and reversible", list(start))
    return curve


def exact_mixing_time(transition: TransitionMatrix, pi: ExactDistribution, start, epsilon: float,
                      t_max: int) -> Optional[int]:
    """ First t <= t_max with TV(P^t(S0, .), pi) <= epsilon, or None """
    row = np.zeros(len(pi))
    row[pi.index(start)] = 1.0
    for t in range(t_max + 1):
        if total_variation(row, pi.probs) <= epsilon:
            return t
        row = row @ transition.P
    return None


def _binary_powers(p: np.ndarray, max_exponent: int) -> List[np.ndarray]:
    """ P, P^2, P^4, ... up to the bit length of max_exponent """
    powers = [p]
    for _ in range(1, max(max_exponent.bit_length(), 1)):
        powers.append(powers[-1] @ powers[-1])
    return powers


def tv_at_budget(transition: TransitionMatrix, pi: ExactDistribution, c_mu: float,
                 epsilon: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    For every start state x: its budget tau_x = ceil((1 / c_mu) ln(1 / (epsilon pi(x)))) and the exact
    TV(P^tau_x(x, .), pi), through the binary expansion of tau_x over repeated squares of P
    """
    log_probs = np.log(pi.probs)
    taus = np.array([max(math.ceil((math.log(1 / epsilon) - lp) / c_mu), 0) for lp in log_probs], dtype=int)
    powers = _binary_powers(transition.P, int(taus.max()))
    tvs = np.empty(len(pi))
    for a, tau in enumerate(taus):
        row = np.zeros(len(pi))
        row[a] = 1.0
        for bit, power in enumerate(powers):
            if (int(tau) >> bit) & 1:
                row = row @ power
        tvs[a] = total_variation(row, pi.probs)
    return taus, tvs


def empirical_tv(samples: Iterable, pi: ExactDistribution) -> float:
    """ TV between the empirical distribution of samples and pi; samples outside the support count fully """
    counts = np.zeros(len(pi))
    outside = 0
    total = 0
    for subset in samples:
        total += 1
        index = pi.get_index(tuple(subset))
        if index is None:
            outside += 1
        else:
            counts[index] += 1
    if not total:
        raise InputError("no samples")
    return total_variation(counts / total, pi.probs) + 0.5 * outside / total


def multinomial_tv_allowance(support_size: int, n_samples: int) -> float:
    """ 3 sqrt(|support| / (2 N)): the sampling-error allowance on an empirical TV from N draws """
    return 3 * math.sqrt(support_size / (2 * n_samples))
