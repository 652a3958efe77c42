import math
import unittest

import networkx as nx

from ....graph.graph import Graph, build_graph, girth, enumerate_cycles, normalize_cycle, validate_cycle
from ....util import (SelfLoopException, DuplicateEdgeException, VertexRangeException, DegreeExceededException,
                      CycleFormatException)


class TestGraph(unittest.TestCase):
    def setUp(self):
        self.k4 = Graph.from_networkx(nx.complete_graph(4))
        self.prism = Graph.from_networkx(nx.circular_ladder_graph(3))
        self.k33 = Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        self.petersen = Graph.from_networkx(nx.petersen_graph())
        self.heawood = Graph.from_networkx(nx.heawood_graph())
        self.cube = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))

    def test_build_graph_rejections(self):
        self.assertRaises(SelfLoopException, build_graph, 3, [(1, 1)])
        self.assertRaises(DuplicateEdgeException, build_graph, 3, [(0, 1), (1, 0)])
        self.assertRaises(VertexRangeException, build_graph, 3, [(0, 3)])
        self.assertRaises(DegreeExceededException, build_graph, 5, [(0, 1), (0, 2), (0, 3), (0, 4)])

    def test_adjacency_is_sorted(self):
        graph = build_graph(4, [(3, 0), (2, 0), (1, 0)])
        assert graph.neighbors(0) == (1, 2, 3)
        assert graph.m == 3
        assert graph.edges() == [(0, 1), (0, 2), (0, 3)]

    def test_cubic_and_connected(self):
        for graph in [self.k4, self.prism, self.k33, self.petersen, self.heawood]:
            assert graph.is_cubic()
            assert graph.is_connected()
        two_k4 = build_graph(8, list(self.k4.edges()) + [(u + 4, v + 4) for u, v in self.k4.edges()])
        assert two_k4.is_cubic()
        assert not two_k4.is_connected()
        assert two_k4.component_count() == 2

    def test_girth(self):
        assert girth(self.k4) == 3
        assert girth(self.prism) == 3
        assert girth(self.k33) == 4
        assert girth(self.cube) == 4
        assert girth(self.petersen) == 5
        assert girth(self.heawood) == 6
        assert girth(build_graph(4, [(0, 1), (1, 2), (1, 3)])) == math.inf

    def test_girth_of_disconnected_graph(self):
        edges = list(self.petersen.edges()) + [(u + 10, v + 10) for u, v in self.k4.edges()]
        assert girth(build_graph(14, edges)) == 3

    def test_enumerate_cycles(self):
        assert len(enumerate_cycles(self.prism, 3)) == 2
        assert len(enumerate_cycles(self.prism, 4)) == 3
        assert len(enumerate_cycles(self.cube, 4)) == 6
        assert len(enumerate_cycles(self.heawood, 6)) == 28
        assert enumerate_cycles(self.k4, 6) == []
        assert enumerate_cycles(self.petersen, 4) == []
        self.assertRaises(ValueError, enumerate_cycles, self.k4, 2)

    def test_cycles_are_normalized_and_unique(self):
        cycles = enumerate_cycles(self.heawood, 6)
        assert len(set(cycles)) == len(cycles)
        for cycle in cycles:
            assert cycle == normalize_cycle(cycle)
            assert validate_cycle(self.heawood, cycle, 6) == cycle

    def test_normalize_cycle(self):
        assert normalize_cycle((3, 1, 2)) == (1, 2, 3)
        assert normalize_cycle((2, 5, 1, 4)) == (1, 4, 2, 5)
        assert normalize_cycle([4, 0, 5]) == (0, 4, 5)

    def test_validate_cycle(self):
        self.assertRaises(CycleFormatException, validate_cycle, self.prism, (0, 1, 2), 6)
        self.assertRaises(CycleFormatException, validate_cycle, self.k4, (0, 1, 1))
        self.assertRaises(CycleFormatException, validate_cycle, self.petersen, (0, 1, 2, 3, 4, 5))

    def test_relabel_and_networkx_round_trip(self):
        perm = [9, 3, 7, 1, 0, 8, 2, 6, 4, 5]
        relabeled = self.petersen.relabel(perm)
        assert relabeled.m == self.petersen.m
        assert nx.is_isomorphic(relabeled.to_networkx(), self.petersen.to_networkx())
        assert Graph.from_networkx(self.petersen.to_networkx()) == self.petersen

    def test_distances(self):
        distances = self.cube.distances_from(0)
        assert max(distances.values()) == 3
        assert sorted(distances.values()).count(1) == 3


if __name__ == '__main__':
    unittest.main()
