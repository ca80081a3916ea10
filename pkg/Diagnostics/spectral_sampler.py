import numpy as np

from Common.errors import DomainError
from Distributions import KDPP
from Distributions.subset import Subset
from LinearAlgebra import symmetric_eigen


def elementary_symmetric_table(eigenvalues: np.ndarray, k: int) -> np.ndarray:
    """ E[l, m] = e_l(eigenvalues[:m]), through e_l(first m) = e_l(first m-1) + lambda_m e_{l-1}(first m-1) """
    n = eigenvalues.size
    table = np.zeros((k + 1, n + 1))
    table[0, :] = 1.0
    for level in range(1, k + 1):
        for m in range(1, n + 1):
            table[level, m] = table[level, m - 1] + eigenvalues[m - 1] * table[level - 1, m - 1]
    return table


class SpectralKdppSampler:
    """
    Exact k-DPP sampler from the eigendecomposition of L: picks k eigenvectors with probability
    proportional to the product of their eigenvalues, then samples the projection DPP they span.
    Independent of the Markov chain, so it serves as a reference for it
    """

    def __init__(self, d: KDPP):
        decomposition = symmetric_eigen(d.ensemble)
        eigenvalues = np.clip(decomposition.eigenvalues, 0, None)
        top = eigenvalues.max() if eigenvalues.size else 0.0
        if top <= 0:
            raise DomainError("ensemble matrix has no positive eigenvalue")
        # e_l ratios are scale-invariant; scaling to max 1 keeps the table in range
        self.eigenvalues = eigenvalues / top
        self.eigenvectors = np.asarray(decomposition.eigenvectors)
        self.n, self.k = d.n, d.k
        self.table = elementary_symmetric_table(self.eigenvalues, self.k)
        e_k = self.table[self.k, self.n]
        if not np.isfinite(e_k) or e_k <= 0:
            raise DomainError(f"e_k of the eigenvalues is {e_k!r}, no k-subset can be sampled")

    def select_eigenvectors(self, rng: np.random.Generator) -> list:
        selected = []
        remaining = self.k
        for m in range(self.n, 0, -1):
            if not remaining:
                break
            denominator = self.table[remaining, m]
            if denominator <= 0:
                continue
            marginal = self.eigenvalues[m - 1] * self.table[remaining - 1, m - 1] / denominator
            if rng.random() < marginal:
                selected.append(m - 1)
                remaining -= 1
        if remaining:
            raise DomainError("eigenvector selection ran out of eigenvalues")
        return selected

    def sample(self, rng: np.random.Generator) -> Subset:
        v = self.eigenvectors[:, self.select_eigenvectors(rng)]
        items = []
        while v.shape[1]:
            weights = np.sum(v * v, axis=1)
            item = int(rng.choice(self.n, p=weights / weights.sum()))
            items.append(item)
            column = int(np.argmax(np.abs(v[item, :])))
            pivot = v[:, column]
            v = np.delete(v, column, axis=1)
            # Project onto the subspace orthogonal to e_item, then re-orthonormalize
            v = v - np.outer(pivot, v[item, :] / pivot[item])
            if v.shape[1]:
                v, _ = np.linalg.qr(v)
        return tuple(sorted(items))


def spectral_kdpp_sample(d: KDPP, rng: np.random.Generator) -> Subset:
    return SpectralKdppSampler(d).sample(rng)
