import math
from abc import ABC, abstractmethod
from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from Common.config import ENUMERATION_CAP
from Common.errors import CapacityError, InputError
from Distributions.subset import Subset


class HomogeneousDistribution(ABC):
    """
    An unnormalized measure on the k-subsets of {0, ..., n-1}.
    Subclasses implement log_mass; everything else derives from it. Instances are immutable,
    so several chains may read one distribution concurrently
    """

    def __init__(self, n: int, k: int):
        if n < 0 or not 0 <= k <= n:
            raise InputError(f"need 0 <= k <= n, got n={n}, k={k}")
        self._n = n
        self._k = k

    @property
    def n(self) -> int:
        return self._n

    @property
    def k(self) -> int:
        return self._k

    @property
    def labels(self) -> Tuple[int, ...]:
        """ User-facing label of each ground-set element (identity unless re-indexed by conditioning) """
        return tuple(range(self._n))

    def to_labels(self, subset: Subset) -> Subset:
        labels = self.labels
        return tuple(sorted(labels[i] for i in subset))

    def validate_subset(self, subset: Subset) -> None:
        if len(subset) != self._k:
            raise InputError(f"subset {list(subset)} has {len(subset)} elements, expected k={self._k}")
        if any(not 0 <= i < self._n for i in subset):
            raise InputError(f"subset {list(subset)} has elements outside [0, {self._n})")
        if any(a >= b for a, b in zip(subset, subset[1:])):
            raise InputError(f"subset {list(subset)} is not strictly increasing")

    @abstractmethod
    def log_mass(self, subset: Subset) -> float:
        """ log of the unnormalized mass, -inf outside the support """

    def mass(self, subset: Subset) -> float:
        return math.exp(self.log_mass(subset))

    def support(self) -> Optional[List[Subset]]:
        """ The support listed explicitly, when the backend knows it without enumerating; else None """
        return None

    def in_support(self, subset: Subset) -> bool:
        return self.log_mass(subset) > -math.inf

    def __repr__(self):
        return f'{type(self).__name__}(n={self._n}, k={self._k})'


def mass(d: HomogeneousDistribution, subset: Iterable[int]) -> float:
    return d.mass(tuple(subset))


def count_candidates(d: HomogeneousDistribution) -> int:
    listed = d.support()
    if listed is not None:
        return len(listed)
    return math.comb(d.n, d.k)


def iter_candidates(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP) -> Iterable[Subset]:
    """ Lexicographic iteration over every subset that may carry mass
    :raises CapacityError: more than cap subsets would be visited """
    required = count_candidates(d)
    if required > cap:
        raise CapacityError(required, cap)
    listed = d.support()
    if listed is not None:
        return iter(sorted(listed))
    return combinations(range(d.n), d.k)
