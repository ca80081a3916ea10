from .init_report import InitReport, InitMethod
from .greedy import greedy_init_kdpp
from .max_weight_tree import init_spanning_tree
from .argmax import init_table, init_enumerated
from .initialize import initialize
