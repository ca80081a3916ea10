import math
from itertools import combinations

import numpy as np
import pytest

from Common.errors import DomainError
from Distributions import KDPP, ConditionedDistribution, ExplicitTable, WeightedGraph, condition
from Distributions.Setups import cycle_graph, path_graph, random_connected_graph, random_kdpp
from StartState import (InitMethod, greedy_init_kdpp, init_enumerated, init_spanning_tree, init_table,
                        initialize)


class TestGreedy:
    def test_diagonal(self, diagonal_kdpp):
        report = greedy_init_kdpp(diagonal_kdpp)
        assert report.subset == (0, 1)
        assert report.logmass == pytest.approx(math.log(12))
        assert report.method == InitMethod.GREEDY_DET

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_identity_tie_break(self, k):
        report = greedy_init_kdpp(KDPP(np.eye(5), k))
        assert report.subset == tuple(range(k))
        assert report.logmass == pytest.approx(0.0, abs=1e-12)

    def test_k_factorial_guarantee(self, rng):
        d = random_kdpp(8, 3, rng)
        best = max(d.log_mass(s) for s in combinations(range(8), 3))
        report = greedy_init_kdpp(d)
        assert report.logmass >= best - math.log(math.factorial(3)) - 1e-9
        assert report.logmass == pytest.approx(d.log_mass(report.subset), rel=1e-9)

    def test_rank_deficient(self, rng):
        d = random_kdpp(7, 3, rng, rank=3)
        report = greedy_init_kdpp(d)
        assert d.in_support(report.subset)

    def test_start_mass_lower_bound(self, diagonal_kdpp):
        report = greedy_init_kdpp(diagonal_kdpp)
        assert report.start_mass_lower_bound(4, 2) == pytest.approx(1 / (2 * 6))


class TestSpanningTree:
    def test_triangle_tie_break(self):
        assert init_spanning_tree(cycle_graph(3)).subset == (0, 1)

    def test_path(self):
        assert init_spanning_tree(path_graph(5)).subset == (0, 1, 2, 3)

    def test_heaviest_edges(self):
        graph = WeightedGraph(3, [(0, 1, 1.0), (1, 2, 3.0), (0, 2, 2.0)])
        report = init_spanning_tree(graph)
        assert report.subset == (1, 2)
        assert report.logmass == pytest.approx(math.log(6))

    def test_is_mode(self, rng):
        graph = random_connected_graph(6, rng, extra_edges=4)
        best = max(graph.log_mass(s) for s in combinations(range(graph.n), graph.k))
        assert init_spanning_tree(graph).logmass == pytest.approx(best)


class TestArgmax:
    def test_table(self):
        report = init_table(ExplicitTable(3, 2, {(0, 1): 2.0, (1, 2): 3.0}))
        assert report.subset == (1, 2)
        assert report.method == InitMethod.TABLE_ARGMAX

    def test_table_tie_break(self):
        assert init_table(ExplicitTable(4, 2, {(2, 3): 1.0, (0, 3): 1.0, (1, 2): 1.0})).subset == (0, 3)

    def test_singleton_table(self):
        assert init_table(ExplicitTable(5, 2, {(1, 4): 0.5})).subset == (1, 4)

    def test_enumerated(self, diagonal_kdpp):
        report = init_enumerated(condition(diagonal_kdpp, 0, False))
        assert report.subset == (0, 1)
        assert report.logmass == pytest.approx(math.log(6))
        assert report.method == InitMethod.ENUMERATED_ARGMAX
        assert report.start_mass_lower_bound(3, 2) == pytest.approx(1 / 3)


class TestInitialize:
    def test_dispatch(self, diagonal_kdpp, heavy_light_table):
        assert initialize(diagonal_kdpp).method == InitMethod.GREEDY_DET
        assert initialize(cycle_graph(4)).method == InitMethod.MAX_WEIGHT_TREE
        assert initialize(heavy_light_table).method == InitMethod.TABLE_ARGMAX
        assert initialize(condition(heavy_light_table, 0, True)).method == InitMethod.ENUMERATED_ARGMAX

    def test_record(self, diagonal_kdpp):
        record = initialize(diagonal_kdpp).to_record()
        assert record["subset"] == [0, 1]
        assert record["method"] == "greedy_det"

    def test_empty_conditioned_support(self):
        table = ExplicitTable(4, 2, {(0, 1): 1.0})
        conditioned = condition(table, 3, False)
        with pytest.raises(DomainError):
            init_enumerated(ConditionedDistribution(conditioned, 0, False))
