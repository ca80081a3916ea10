import logging
import math
from typing import List, Optional

import numpy as np

from Common.config import PSD_RTOL
from Common.errors import DomainError, InputError, NotPositiveDefiniteError
from Distributions.homogeneous_distribution import HomogeneousDistribution
from Distributions.subset import Subset
from LinearAlgebra import (SymmetricMatrix, cholesky, extend_factor, extend_log_dets, principal_submatrix,
                           psd_tolerance, symmetric_eigen)

logger = logging.getLogger(__name__)

PSD_EIGEN_RTOL = 1e-9  # Smallest eigenvalue may dip to -PSD_EIGEN_RTOL * max diagonal


class KDPP(HomogeneousDistribution):
    """ k-determinantal point process: mass(S) = det(L_S) for a PSD ensemble matrix L """

    def __init__(self, ensemble, k: int, rtol: float = PSD_RTOL):
        ensemble = ensemble if isinstance(ensemble, SymmetricMatrix) else SymmetricMatrix(ensemble)
        if ensemble.n < 1:
            raise InputError("ensemble matrix must be at least 1x1")
        if not 1 <= k <= ensemble.n:
            raise InputError(f"k={k} must lie in [1, {ensemble.n}]")
        super().__init__(ensemble.n, k)
        self.ensemble: SymmetricMatrix = ensemble
        self.rtol = rtol
        self.tol: float = psd_tolerance(ensemble, rtol)

        eigenvalues = symmetric_eigen(ensemble).eigenvalues
        scale = max(ensemble.max_diagonal, 0.0)
        if eigenvalues[0] < -PSD_EIGEN_RTOL * scale:
            raise DomainError(f"ensemble matrix is not PSD (smallest eigenvalue {eigenvalues[0]:.3e})")
        witness = self._positive_k_subset()
        if witness is None:
            raise DomainError(f"k={k} exceeds the rank of the ensemble matrix: every k-subset has zero mass")
        logger.debug("k-DPP with n=%d, k=%d, positive-mass subset %s", self.n, k, list(witness))

    @classmethod
    def from_features(cls, features, k: int, rtol: float = PSD_RTOL) -> 'KDPP':
        """ k-volume sampling of the rows of an n x m feature matrix X is the k-DPP with L = X X^T """
        x = np.asarray(features, dtype=float)
        if x.ndim != 2:
            raise InputError(f"feature matrix must be 2-dimensional, got shape {x.shape}")
        return cls(x @ x.T, k, rtol)

    def log_mass(self, subset: Subset) -> float:
        self.validate_subset(subset)
        try:
            return cholesky(principal_submatrix(self.ensemble, subset), self.tol).logdet
        except NotPositiveDefiniteError:
            return -math.inf

    def _positive_k_subset(self) -> Optional[Subset]:
        """ Greedy Schur-complement rounds under self.tol; None when they stall before k elements """
        subset: List[int] = []
        factor = cholesky(principal_submatrix(self.ensemble, subset), self.tol)
        for _ in range(self.k):
            candidates = extend_log_dets(self.ensemble, factor, subset, self.tol)
            best = int(np.argmax(candidates))
            if candidates[best] == -np.inf:
                return None
            try:
                factor = extend_factor(self.ensemble, factor, subset, best, self.tol)
            except NotPositiveDefiniteError:
                return None
            subset = sorted(subset + [best])
        return tuple(subset)
