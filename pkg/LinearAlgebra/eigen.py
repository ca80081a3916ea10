import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from Common.config import EIGEN_RTOL, JACOBI_MAX_DIM, JACOBI_MAX_SWEEPS
from Common.errors import InputError, NumericalError
from LinearAlgebra.symmetric_matrix import SymmetricMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EigenDecomposition:
    """ M = V diag(eigenvalues) V^T with eigenvalues ascending and V orthonormal (columns) """
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


def _off_diagonal_norm(a: np.ndarray) -> float:
    return math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int) -> None:
    """ One Jacobi rotation annihilating a[p, q], applied in place to a and to the columns of v """
    apq = a[p, q]
    theta = (a[q, q] - a[p, p]) / (2 * apq)
    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1))
    c = 1 / math.sqrt(t * t + 1)
    s = t * c

    col_p, col_q = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * row_p - s * row_q
    a[q, :] = s * row_p + c * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def _jacobi(matrix: SymmetricMatrix, max_sweeps: int, rtol: float):
    n = matrix.n
    a = np.array(matrix.entries, dtype=float)
    v = np.eye(n)
    threshold = rtol * float(np.linalg.norm(a))
    for sweep in range(max_sweeps + 1):
        if _off_diagonal_norm(a) <= threshold:
            logger.debug("Jacobi converged on a %dx%d matrix after %d sweeps", n, n, sweep)
            return np.diag(a).copy(), v
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, v, p, q)
    raise NumericalError(f"Jacobi eigensolver did not converge in {max_sweeps} sweeps "
                         f"(off-diagonal norm {_off_diagonal_norm(a):.3e})")


def symmetric_eigen(matrix: SymmetricMatrix, method: str = 'auto', max_sweeps: int = JACOBI_MAX_SWEEPS,
                    max_jacobi_dim: int = JACOBI_MAX_DIM, rtol: float = EIGEN_RTOL) -> EigenDecomposition:
    """
    Eigenvalues (ascending) and orthonormal eigenvectors of a symmetric matrix.
    :param method: 'jacobi' (cyclic Jacobi rotations), 'lapack' (scipy.linalg.eigh), or 'auto',
        which uses Jacobi up to max_jacobi_dim and LAPACK above it
    :raises NumericalError: Jacobi did not converge within max_sweeps
    """
    if method == 'auto':
        method = 'jacobi' if matrix.n <= max_jacobi_dim else 'lapack'
    if method == 'jacobi':
        eigenvalues, eigenvectors = _jacobi(matrix, max_sweeps, rtol)
    elif method == 'lapack':
        eigenvalues, eigenvectors = scipy.linalg.eigh(matrix.entries)
    else:
        raise InputError(f"unknown eigensolver method {method!r}")
    order = np.argsort(eigenvalues, kind='stable')
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]
    eigenvalues.setflags(write=False)
    eigenvectors.setflags(write=False)
    return EigenDecomposition(eigenvalues, eigenvectors)
