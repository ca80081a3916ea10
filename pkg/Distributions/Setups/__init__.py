from .random_instances import (random_gram_ensemble, random_kdpp, random_connected_graph, random_matroid_table,
                               cycle_graph, path_graph)
