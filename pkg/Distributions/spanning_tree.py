import math
from typing import List, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from Common.errors import InputError
from Distributions.homogeneous_distribution import HomogeneousDistribution
from Distributions.subset import Subset

Edge = Tuple[int, int, float]


class WeightedGraph(HomogeneousDistribution):
    """
    Weighted spanning trees of a connected multigraph. The ground set is the edge list
    (element i is edges[i]), k = vertex_count - 1, and a tree has mass equal to the product
    of its edge weights
    """

    def __init__(self, vertex_count: int, edges: Sequence[Edge]):
        if vertex_count < 1:
            raise InputError("graph needs at least one vertex")
        checked: List[Edge] = []
        for index, (u, w, weight) in enumerate(edges):
            u, w, weight = int(u), int(w), float(weight)
            if not (0 <= u < vertex_count and 0 <= w < vertex_count):
                raise InputError(f"edge {index} ({u}, {w}) has a vertex outside [0, {vertex_count})")
            if u == w:
                raise InputError(f"edge {index} is a self-loop at vertex {u}")
            if not weight > 0 or not math.isfinite(weight):
                raise InputError(f"edge {index} has non-positive weight {weight}")
            checked.append((u, w, weight))
        super().__init__(len(checked), vertex_count - 1)
        self.vertex_count = vertex_count
        self.edges: Tuple[Edge, ...] = tuple(checked)
        self._log_weights = tuple(math.log(weight) for _, _, weight in checked)
        if not nx.is_connected(self.to_networkx()):
            raise InputError("graph is not connected, it has no spanning tree")

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.vertex_count))
        for index, (u, w, weight) in enumerate(self.edges):
            graph.add_edge(u, w, key=index, weight=weight)
        return graph

    def is_spanning_tree(self, subset: Subset) -> bool:
        """ k = vertex_count - 1 edges without a cycle connect every vertex """
        components = UnionFind()
        for index in subset:
            u, w, _ = self.edges[index]
            if components[u] == components[w]:
                return False
            components.union(u, w)
        return True

    def log_mass(self, subset: Subset) -> float:
        self.validate_subset(subset)
        if not self.is_spanning_tree(subset):
            return -math.inf
        return math.fsum(self._log_weights[i] for i in subset)
