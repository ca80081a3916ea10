import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

from Common.config import ENUMERATION_CAP
from Distributions.homogeneous_distribution import HomogeneousDistribution, iter_candidates
from Distributions.subset import Subset, exchange


@dataclass(frozen=True)
class ExchangeCheck:
    ok: bool
    witness: Optional[Tuple[Subset, Subset, int]] = None  # (S, T, i) with no j in T - S making S - i + j a basis

    def __bool__(self):
        return self.ok


def support_of(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP) -> List[Subset]:
    """ Support members in lexicographic order """
    return [s for s in iter_candidates(d, cap) if d.log_mass(s) > -math.inf]


def check_exchange_property(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP) -> ExchangeCheck:
    """
    Basis-exchange axiom over the whole support: for all S, T in the support and i in S - T,
    some j in T - S has S - i + j in the support. Returns the first violation in lexicographic order
    """
    support = support_of(d, cap)
    members = set(support)
    for s in support:
        for t in support:
            if s == t:
                continue
            t_only = [j for j in t if j not in s]
            for i in s:
                if i in t:
                    continue
                if not any(exchange(s, i, j) in members for j in t_only):
                    return ExchangeCheck(False, (s, t, i))
    return ExchangeCheck(True)
