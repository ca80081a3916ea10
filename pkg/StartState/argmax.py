import math

from Common.config import ENUMERATION_CAP
from Common.errors import DomainError
from Distributions import ExplicitTable, HomogeneousDistribution, iter_candidates
from StartState.init_report import InitMethod, InitReport


def init_table(table: ExplicitTable) -> InitReport:
    """ Heaviest entry; ties go to the lexicographically smallest subset """
    subset = min(table.entries, key=lambda s: (-table.entries[s], s))
    return InitReport(subset, math.log(table.entries[subset]), InitMethod.TABLE_ARGMAX)


def init_enumerated(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP) -> InitReport:
    """ Mode of any enumerable distribution, lexicographic tie-break """
    best, best_logmass = None, -math.inf
    for subset in iter_candidates(d, cap):
        logmass = d.log_mass(subset)
        if logmass > best_logmass:
            best, best_logmass = subset, logmass
    if best is None:
        raise DomainError("distribution has empty support")
    return InitReport(tuple(best), best_logmass, InitMethod.ENUMERATED_ARGMAX)
