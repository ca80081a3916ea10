import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import scipy.linalg

from Common.config import PSD_RTOL
from Common.errors import InputError, NotPositiveDefiniteError
from LinearAlgebra.symmetric_matrix import SymmetricMatrix, principal_submatrix


@dataclass(frozen=True)
class CholeskyFactor:
    """ Lower-triangular F with F F^T = M, and log det M = 2 * sum(log diag F) """
    lower: np.ndarray
    logdet: float

    @property
    def n(self) -> int:
        return self.lower.shape[0]


def psd_tolerance(matrix: SymmetricMatrix, rtol: float = PSD_RTOL) -> float:
    """ Absolute pivot tolerance for submatrices of matrix """
    return rtol * max(matrix.max_diagonal, 0.0)


def cholesky(matrix: SymmetricMatrix, tol: Optional[float] = None) -> CholeskyFactor:
    """
    Factors a positive definite matrix.
    :param tol: a pivot (squared diagonal of the factor) <= tol is treated as zero.
        Defaults to PSD_RTOL * max diagonal of matrix
    :raises NotPositiveDefiniteError: the matrix is not positive definite beyond tol
    """
    if tol is None:
        tol = psd_tolerance(matrix)
    if not matrix.n:
        return CholeskyFactor(np.zeros((0, 0)), 0.0)
    try:
        lower = scipy.linalg.cholesky(matrix.entries, lower=True, check_finite=False)
    except np.linalg.LinAlgError:
        raise NotPositiveDefiniteError(None, float('nan')) from None
    pivots = np.diag(lower) ** 2
    small = np.flatnonzero(pivots <= tol)
    if small.size:
        raise NotPositiveDefiniteError(int(small[0]), float(pivots[small[0]]))
    lower.setflags(write=False)
    return CholeskyFactor(lower, float(2 * np.sum(np.log(np.diag(lower)))))


def log_det_psd(matrix: SymmetricMatrix, tol: Optional[float] = None) -> float:
    """ log det of a PSD matrix; -inf when it is singular or indefinite beyond tol """
    try:
        return cholesky(matrix, tol).logdet
    except NotPositiveDefiniteError:
        return -math.inf


def det_psd(matrix: SymmetricMatrix, tol: Optional[float] = None) -> float:
    return math.exp(log_det_psd(matrix, tol))


def _schur_complement(matrix: SymmetricMatrix, factor: CholeskyFactor, subset: Sequence[int], j: int):
    subset = sorted(int(i) for i in subset)
    if j in subset:
        raise InputError(f"element {j} is already in the subset")
    if not 0 <= j < matrix.n:
        raise InputError(f"index {j} is outside [0, {matrix.n})")
    if factor.n != len(subset):
        raise InputError(f"factor has dimension {factor.n}, subset has {len(subset)} elements")
    if not subset:
        return np.zeros(0), float(matrix[j, j])
    column = matrix.entries[subset, j]
    v = scipy.linalg.solve_triangular(factor.lower, column, lower=True, check_finite=False)
    return v, float(matrix[j, j] - v @ v)


def extend_log_det(matrix: SymmetricMatrix, factor: CholeskyFactor, subset: Sequence[int], j: int,
                   tol: Optional[float] = None) -> float:
    """ log det M_{S+j} from the factor of M_S, through the Schur complement M_jj - v^T v with F v = M_{S,j} """
    if tol is None:
        tol = psd_tolerance(matrix)
    v, schur = _schur_complement(matrix, factor, subset, j)
    if schur <= tol:
        return -math.inf
    return factor.logdet + math.log(schur)


def extend_det(matrix: SymmetricMatrix, factor: CholeskyFactor, subset: Sequence[int], j: int,
               tol: Optional[float] = None) -> float:
    return math.exp(extend_log_det(matrix, factor, subset, j, tol))


def extend_factor(matrix: SymmetricMatrix, factor: CholeskyFactor, subset: Sequence[int], j: int,
                  tol: Optional[float] = None) -> CholeskyFactor:
    """
    Factor of M_{S+j} in the index order of sorted(S + [j]).
    Appending j as the last row is only a valid factor of the sorted submatrix when j > max(S),
    so other positions fall back to a fresh factorization
    """
    if tol is None:
        tol = psd_tolerance(matrix)
    v, schur = _schur_complement(matrix, factor, subset, j)
    if schur <= tol:
        raise NotPositiveDefiniteError(len(subset), schur)
    if subset and j < max(subset):
        return cholesky(principal_submatrix(matrix, list(subset) + [j]), tol)
    k = factor.n
    lower = np.zeros((k + 1, k + 1))
    lower[:k, :k] = factor.lower
    lower[k, :k] = v
    lower[k, k] = math.sqrt(schur)
    lower.setflags(write=False)
    return CholeskyFactor(lower, factor.logdet + math.log(schur))


def extend_log_dets(matrix: SymmetricMatrix, factor: CholeskyFactor, subset: Sequence[int],
                    tol: Optional[float] = None) -> np.ndarray:
    """ extend_log_det for every j at once (one triangular solve with all columns); -inf for j in S """
    if tol is None:
        tol = psd_tolerance(matrix)
    subset = sorted(int(i) for i in subset)
    if factor.n != len(subset):
        raise InputError(f"factor has dimension {factor.n}, subset has {len(subset)} elements")
    diagonal = np.diag(matrix.entries)
    if subset:
        v = scipy.linalg.solve_triangular(factor.lower, matrix.entries[subset, :], lower=True, check_finite=False)
        schur = diagonal - np.sum(v * v, axis=0)
    else:
        schur = diagonal.copy()
    log_dets = np.full(matrix.n, -np.inf)
    positive = schur > tol
    log_dets[positive] = factor.logdet + np.log(schur[positive])
    log_dets[subset] = -np.inf
    return log_dets
