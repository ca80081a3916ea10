import math
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from Common.errors import DomainError, InputError
from Distributions.homogeneous_distribution import HomogeneousDistribution
from Distributions.subset import Subset, make_subset


class ExplicitTable(HomogeneousDistribution):
    """ A distribution given by its support and weights. Subsets absent from the table have mass 0 """

    def __init__(self, n: int, k: int, entries: Mapping[Iterable[int], float]):
        super().__init__(n, k)
        table: Dict[Subset, float] = {}
        for indices, weight in entries.items():
            subset = make_subset(indices, n)
            if len(subset) != k:
                raise InputError(f"table entry {list(subset)} has {len(subset)} elements, expected k={k}")
            weight = float(weight)
            if not weight > 0 or not math.isfinite(weight):
                raise InputError(f"table entry {list(subset)} has non-positive weight {weight}")
            if subset in table:
                raise InputError(f"table entry {list(subset)} is listed twice")
            table[subset] = weight
        if not table:
            raise DomainError("table has no entries")
        self.entries: Dict[Subset, float] = table

    def log_mass(self, subset: Subset) -> float:
        self.validate_subset(subset)
        weight = self.entries.get(tuple(subset))
        return math.log(weight) if weight else -math.inf

    def support(self) -> List[Subset]:
        return sorted(self.entries)


def truncate(weights: Mapping[Iterable[int], float], k: int, n: Optional[int] = None) -> ExplicitTable:
    """
    The truncation mu_k: keeps the positive-weight subsets of size exactly k, unnormalized.
    :param n: ground-set size; defaults to one past the largest element mentioned
    :raises DomainError: no subset of size k carries positive weight
    """
    subsets = {make_subset(indices): float(weight) for indices, weight in weights.items()}
    if n is None:
        n = 1 + max((s[-1] for s in subsets if s), default=-1)
    kept = {s: w for s, w in subsets.items() if len(s) == k and w > 0}
    if not kept:
        raise DomainError(f"no subset of size {k} has positive weight")
    return ExplicitTable(n, k, kept)


def product_measure(p: Sequence[float]) -> Dict[Subset, float]:
    """ Weights of independent inclusion with probabilities p over every subset of [n] """
    n = len(p)
    if any(not 0 <= q <= 1 for q in p):
        raise InputError("inclusion probabilities must lie in [0, 1]")
    weights = {}
    for size in range(n + 1):
        for subset in combinations(range(n), size):
            members = set(subset)
            weights[subset] = math.prod(p[i] if i in members else 1 - p[i] for i in range(n))
    return weights
