from Common.config import ENUMERATION_CAP
from Distributions import KDPP, ExplicitTable, HomogeneousDistribution, WeightedGraph
from StartState.argmax import init_enumerated, init_table
from StartState.greedy import greedy_init_kdpp
from StartState.init_report import InitReport
from StartState.max_weight_tree import init_spanning_tree


def initialize(d: HomogeneousDistribution, cap: int = ENUMERATION_CAP) -> InitReport:
    """ The start-state initializer that fits the backend """
    if isinstance(d, KDPP):
        return greedy_init_kdpp(d)
    if isinstance(d, WeightedGraph):
        return init_spanning_tree(d)
    if isinstance(d, ExplicitTable):
        return init_table(d)
    return init_enumerated(d, cap)
