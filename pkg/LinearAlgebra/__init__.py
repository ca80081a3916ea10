from .symmetric_matrix import SymmetricMatrix, principal_submatrix
from .cholesky import (CholeskyFactor, cholesky, det_psd, log_det_psd, extend_det, extend_log_det, extend_log_dets,
                       extend_factor, psd_tolerance)
from .eigen import EigenDecomposition, symmetric_eigen
