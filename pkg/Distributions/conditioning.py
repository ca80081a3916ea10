import math
from typing import List, Optional, Tuple

from Common.config import ENUMERATION_CAP
from Common.errors import DomainError, InputError
from Distributions.homogeneous_distribution import HomogeneousDistribution, count_candidates, iter_candidates
from Distributions.subset import Subset


class ConditionedDistribution(HomogeneousDistribution):
    """
    base conditioned on element i being in (contains=True) or out of the sample.
    The remaining n-1 elements are re-indexed densely, and labels maps them back
    to the labels of base
    """

    def __init__(self, base: HomogeneousDistribution, element: int, contains: bool):
        if not 0 <= element < base.n:
            raise InputError(f"element {element} is outside [0, {base.n})")
        if contains and base.k == 0:
            raise DomainError("cannot condition a 0-homogeneous distribution on containing an element")
        k = base.k - 1 if contains else base.k
        if k > base.n - 1:
            raise DomainError(f"conditioning on {element} being absent leaves fewer than k={k} elements")
        super().__init__(base.n - 1, k)
        self.base = base
        self.element = element
        self.contains = contains
        self._to_base: Tuple[int, ...] = tuple(a if a < element else a + 1 for a in range(base.n - 1))
        base_labels = base.labels
        self._labels = tuple(base_labels[b] for b in self._to_base)

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    def lift(self, subset: Subset) -> Subset:
        """ The base-distribution subset this conditioned subset stands for """
        lifted = [self._to_base[a] for a in subset]
        if self.contains:
            lifted.append(self.element)
        return tuple(sorted(lifted))

    def log_mass(self, subset: Subset) -> float:
        self.validate_subset(subset)
        return self.base.log_mass(self.lift(subset))

    def support(self) -> Optional[List[Subset]]:
        listed = self.base.support()
        if listed is None:
            return None
        from_base = {b: a for a, b in enumerate(self._to_base)}
        kept = [s for s in listed if (self.element in s) == self.contains]
        return sorted(tuple(from_base[b] for b in s if b != self.element) for s in kept)


def condition(d: HomogeneousDistribution, element: int, contains: bool,
              cap: int = ENUMERATION_CAP) -> ConditionedDistribution:
    """
    Conditional measure mu|_i (contains) or mu|_{not i}. Masses are the base masses, unnormalized.
    :raises DomainError: the conditioned support is empty (checked whenever it is enumerable under cap)
    """
    conditioned = ConditionedDistribution(d, element, contains)
    if count_candidates(conditioned) <= cap:
        if not any(conditioned.log_mass(s) > -math.inf for s in iter_candidates(conditioned, cap)):
            state = "in" if contains else "out of"
            raise DomainError(f"no support set has element {element} {state} it")
    return conditioned
