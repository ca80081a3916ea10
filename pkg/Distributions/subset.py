from typing import Iterable, Optional, Tuple

from Common.errors import InputError

# A chain state: strictly increasing element indices
Subset = Tuple[int, ...]


def make_subset(indices: Iterable[int], n: Optional[int] = None) -> Subset:
    """ Sorts and validates indices. Duplicates and (when n is given) indices outside [0, n) are rejected """
    subset = tuple(sorted(int(i) for i in indices))
    for a, b in zip(subset, subset[1:]):
        if a == b:
            raise InputError(f"duplicate element {a} in subset")
    if n is not None and subset and (subset[0] < 0 or subset[-1] >= n):
        raise InputError(f"subset {list(subset)} has elements outside [0, {n})")
    return subset


def exchange(subset: Subset, i: int, j: int) -> Subset:
    """ S - i + j """
    return tuple(sorted([x for x in subset if x != i] + [j]))
