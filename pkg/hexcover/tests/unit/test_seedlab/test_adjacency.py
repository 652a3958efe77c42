import unittest

import networkx as nx

from ....cdc.oracle import find_6cdc
from ....circulant.families import torus_2layer
from ....generator.substitution import cdc_configuration
from ....graph.graph import Graph
from ....seedlab.adjacency import build_cycle_adjacency_graph, configuration_adjacency


class TestCycleAdjacency(unittest.TestCase):
    def setUp(self):
        self.prism = torus_2layer(6)
        self.heawood = Graph.from_networkx(nx.heawood_graph())

    def test_prism(self):
        cdc = find_6cdc(self.prism)[0]
        adjacency = build_cycle_adjacency_graph(self.prism, cdc)
        assert list(adjacency.degrees()) == [2, 2, 2]
        assert adjacency.is_regular(2)
        assert len(adjacency.triangles()) == 1
        assert set(adjacency.vertex_triangles()) == {frozenset({0, 1, 2})}
        assert not adjacency.has_vertex_triangle_bijection()
        assert adjacency.stray_triangles() == []

    def test_heawood(self):
        cdc = find_6cdc(self.heawood)[0]
        adjacency = build_cycle_adjacency_graph(self.heawood, cdc)
        assert adjacency.graph.number_of_nodes() == 7
        assert adjacency.is_regular(6)
        assert not adjacency.is_regular(5)
        assert len(adjacency.triangles()) == 35
        assert len(adjacency.stray_triangles()) == 35 - 14

    def test_from_configuration(self):
        cdc = find_6cdc(self.heawood)[0]
        adjacency = configuration_adjacency(cdc_configuration(cdc))
        assert adjacency.is_regular(6)
        assert len(set(adjacency.vertex_triangles())) == 14
        assert len(adjacency.stray_triangles()) == 21


if __name__ == '__main__':
    unittest.main()
