import logging
from typing import List

import numpy as np

from Common.errors import DomainError
from Distributions import KDPP
from LinearAlgebra import cholesky, extend_factor, extend_log_dets, principal_submatrix
from StartState.init_report import InitMethod, InitReport

logger = logging.getLogger(__name__)


def greedy_init_kdpp(d: KDPP) -> InitReport:
    """
    Grows S one element at a time, each round adding the j maximizing det(L_{S+j}) (ties to the smallest j).
    det(L_S) ends within a factor k! of the maximum over k-subsets, for O(n k^3) work overall
    :raises DomainError: every extension has zero mass before |S| reaches k
    """
    ensemble = d.ensemble
    subset: List[int] = []
    factor = cholesky(principal_submatrix(ensemble, subset), d.tol)
    for round_index in range(d.k):
        candidates = extend_log_dets(ensemble, factor, subset, d.tol)
        best = int(np.argmax(candidates))
        if candidates[best] == -np.inf:
            raise DomainError(f"greedy start stalled at {len(subset)} < k={d.k} elements: "
                              f"every extension of {subset} has zero determinant")
        factor = extend_factor(ensemble, factor, subset, best, d.tol)
        subset = sorted(subset + [best])
        logger.debug("Greedy round %d: added %d, log det %.6g", round_index + 1, best, factor.logdet)
    return InitReport(tuple(subset), factor.logdet, InitMethod.GREEDY_DET)
