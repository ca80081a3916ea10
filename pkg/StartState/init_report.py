import math
from dataclasses import dataclass
from enum import Enum

from Distributions.subset import Subset


class InitMethod(str, Enum):
    GREEDY_DET = 'greedy_det'
    MAX_WEIGHT_TREE = 'max_weight_tree'
    TABLE_ARGMAX = 'table_argmax'
    ENUMERATED_ARGMAX = 'enumerated_argmax'


@dataclass(frozen=True)
class InitReport:
    subset: Subset
    logmass: float
    method: InitMethod

    def start_mass_lower_bound(self, n: int, k: int) -> float:
        """
        Lower bound on the normalized mass of the start state implied by the method:
        the greedy start is within k! of the mode, so mu(S0) >= 1 / (k! C(n, k));
        the argmax starts are the mode, so mu(S0) >= 1 / C(n, k)
        """
        log_bound = -math.log(math.comb(n, k))
        if self.method == InitMethod.GREEDY_DET:
            log_bound -= math.lgamma(k + 1)
        return math.exp(log_bound)

    def to_record(self) -> dict:
        return {"subset": list(self.subset), "logmass": self.logmass, "method": self.method.value}
