from .subset import Subset, make_subset
from .homogeneous_distribution import HomogeneousDistribution, mass, iter_candidates, count_candidates
from .kdpp import KDPP
from .explicit_table import ExplicitTable, truncate, product_measure
from .spanning_tree import WeightedGraph
from .conditioning import ConditionedDistribution, condition
from .exchange import ExchangeCheck, check_exchange_property, support_of
