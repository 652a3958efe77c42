import unittest

import networkx as nx

from ....circulant.families import CirculantSpec, circulant, cubic_circulants, mobius_ladder, torus_2layer
from ....graph.canonical import is_isomorphic
from ....graph.graph import Graph, girth


class TestFamilies(unittest.TestCase):
    def setUp(self):
        self.k4 = Graph.from_networkx(nx.complete_graph(4))
        self.k33 = Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        self.cube = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.hypercube_graph(3)))
        self.prism = Graph.from_networkx(nx.circular_ladder_graph(3))

    def test_small_members(self):
        assert is_isomorphic(mobius_ladder(4), self.k4)
        assert is_isomorphic(mobius_ladder(6), self.k33)
        assert is_isomorphic(torus_2layer(6), self.prism)
        assert is_isomorphic(torus_2layer(8), self.cube)

    def test_girths(self):
        assert girth(mobius_ladder(4)) == 3
        assert girth(torus_2layer(6)) == 3
        for n in range(8, 21, 2):
            assert girth(mobius_ladder(n)) == 4
            assert girth(torus_2layer(n)) == 4
            assert mobius_ladder(n).is_cubic()
            assert torus_2layer(n).is_cubic()

    def test_order_checks(self):
        self.assertRaises(ValueError, mobius_ladder, 7)
        self.assertRaises(ValueError, mobius_ladder, 2)
        self.assertRaises(ValueError, torus_2layer, 4)
        self.assertRaises(ValueError, CirculantSpec, 8, 4)
        self.assertRaises(ValueError, CirculantSpec, 8, 0)
        self.assertRaises(ValueError, CirculantSpec, 9, 1)

    def test_circulants(self):
        assert is_isomorphic(circulant(CirculantSpec(6, 1)).graph, mobius_ladder(6))
        assert is_isomorphic(circulant(CirculantSpec(6, 2)).graph, torus_2layer(6))
        assert is_isomorphic(circulant(CirculantSpec(8, 3)).graph, mobius_ladder(8))
        assert CirculantSpec(8, 2).connections == frozenset({2, 4, 6})

    def test_disconnected_circulant(self):
        spec = CirculantSpec(8, 2)
        assert not spec.is_connected
        result = circulant(spec)
        assert not result.connected
        assert result.graph.is_cubic()
        assert result.graph.component_count() == 2

    def test_cubic_circulants(self):
        found = cubic_circulants(8)
        assert [c.spec.s for c in found] == [1, 2]
        assert [c.connected for c in found] == [True, False]
        assert not any(is_isomorphic(c.graph, self.cube) for c in found)


if __name__ == '__main__':
    unittest.main()
