"""
Seeded instance builders for the tests and the exact-guarantee suite.
Every builder takes a numpy Generator so instances are reproducible from a seed.
"""
from itertools import combinations
from typing import Optional

import numpy as np

from Common.errors import DomainError
from Distributions.explicit_table import ExplicitTable
from Distributions.kdpp import KDPP
from Distributions.spanning_tree import WeightedGraph
from LinearAlgebra import SymmetricMatrix

MATROID_ENTRIES = np.array([-1, 0, 0, 1, 2])  # Entry pool for matroid representations; zeros make it sparse


def random_gram_ensemble(n: int, rng: np.random.Generator, rank: Optional[int] = None) -> SymmetricMatrix:
    """ L = X X^T for a Gaussian n x rank factor X """
    factor = rng.standard_normal((n, rank or n))
    return SymmetricMatrix(factor @ factor.T)


def random_kdpp(n: int, k: int, rng: np.random.Generator, rank: Optional[int] = None) -> KDPP:
    return KDPP(random_gram_ensemble(n, rng, rank), k)


def random_connected_graph(vertex_count: int, rng: np.random.Generator, extra_edges: int = 3,
                           low: float = 0.5, high: float = 2.0) -> WeightedGraph:
    """ A random tree over a shuffled vertex order, plus extra_edges random non-loop edges """
    order = rng.permutation(vertex_count)
    edges = []
    for position in range(1, vertex_count):
        parent = order[rng.integers(position)]
        edges.append((int(parent), int(order[position])))
    if vertex_count > 1:
        for _ in range(extra_edges):
            u, w = rng.choice(vertex_count, size=2, replace=False)
            edges.append((int(u), int(w)))
    weighted = [(u, w, float(rng.uniform(low, high))) for u, w in edges]
    return WeightedGraph(vertex_count, weighted)


def random_matroid_table(n: int, k: int, rng: np.random.Generator, max_tries: int = 100) -> ExplicitTable:
    """
    Tabulated projection DPP of a sparse integer k x n matrix A: weight(S) = det(A_S)^2.
    The support is the set of bases of the linear matroid of A, usually a proper subset of all k-subsets
    """
    for _ in range(max_tries):
        a = rng.choice(MATROID_ENTRIES, size=(k, n)).astype(float)
        entries = {}
        for subset in combinations(range(n), k):
            minor = round(float(np.linalg.det(a[:, subset]))) if k else 1
            if minor:
                entries[subset] = float(minor * minor)
        if entries:
            return ExplicitTable(n, k, entries)
    raise DomainError(f"no full-rank {k}x{n} representation found in {max_tries} tries")


def cycle_graph(vertex_count: int, weight: float = 1.0) -> WeightedGraph:
    return WeightedGraph(vertex_count, [(v, (v + 1) % vertex_count, weight) for v in range(vertex_count)])


def path_graph(vertex_count: int, weight: float = 1.0) -> WeightedGraph:
    return WeightedGraph(vertex_count, [(v, v + 1, weight) for v in range(vertex_count - 1)])
