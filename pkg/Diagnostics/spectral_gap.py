import math

import numpy as np

from Common.errors import InputError
from Diagnostics.exact_distribution import ExactDistribution
from Diagnostics.transition_matrix import TransitionMatrix
from LinearAlgebra import SymmetricMatrix, symmetric_eigen


def _symmetrized(transition: TransitionMatrix, pi: ExactDistribution) -> SymmetricMatrix:
    """ A = D^{1/2} P D^{-1/2} with D = diag(pi), symmetric for a reversible chain """
    root = np.sqrt(pi.probs)
    return SymmetricMatrix(root[:, None] * transition.P / root[None, :])


def poincare_constant(transition: TransitionMatrix, pi: ExactDistribution) -> float:
    """ lambda = 1 - (second largest eigenvalue of P). A one-state chain has lambda = 1 """
    if len(pi) == 1:
        return 1.0
    eigenvalues = symmetric_eigen(_symmetrized(transition, pi)).eigenvalues
    return float(1 - eigenvalues[-2])


def poincare_eigenfunction(transition: TransitionMatrix, pi: ExactDistribution) -> np.ndarray:
    """ f = D^{-1/2} u for u the eigenvector of the second largest eigenvalue; attains the Poincare infimum """
    if len(pi) == 1:
        raise InputError("a one-state chain has no non-constant function")
    eigenvectors = symmetric_eigen(_symmetrized(transition, pi)).eigenvectors
    return eigenvectors[:, -2] / np.sqrt(pi.probs)


def dirichlet_ratio(transition: TransitionMatrix, pi: ExactDistribution, f) -> float:
    """ Dirichlet form E(f, f) over Var_pi(f); >= lambda for every non-constant f """
    f = np.asarray(f, dtype=float)
    differences = (f[:, None] - f[None, :]) ** 2
    dirichlet = 0.5 * float(np.sum(differences * transition.P * pi.probs[:, None]))
    mean = float(pi.probs @ f)
    variance = float(pi.probs @ (f - mean) ** 2)
    if variance <= 0:
        raise InputError("f is constant under pi")
    return dirichlet / variance


def spectral_mixing_bound(poincare: float, pi_start: float, epsilon: float) -> int:
    """ ceil((1 / lambda) * ln(1 / (epsilon * pi(x)))) """
    return max(math.ceil(math.log(1 / (epsilon * pi_start)) / poincare), 0)
