from networkx.utils import UnionFind

from Distributions import WeightedGraph
from StartState.init_report import InitMethod, InitReport


def init_spanning_tree(graph: WeightedGraph) -> InitReport:
    """ Kruskal's algorithm on descending weights (ties to the smaller edge index): the maximum-weight
    spanning tree, i.e. the mode of the weighted spanning-tree distribution """
    components = UnionFind()
    tree = []
    for index in sorted(range(graph.n), key=lambda e: (-graph.edges[e][2], e)):
        u, w, _ = graph.edges[index]
        if components[u] != components[w]:
            tree.append(index)
            components.union(u, w)
    subset = tuple(sorted(tree))
    return InitReport(subset, graph.log_mass(subset), InitMethod.MAX_WEIGHT_TREE)
