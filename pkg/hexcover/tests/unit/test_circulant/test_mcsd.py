import unittest

import networkx as nx

from ....circulant.api import check_mcsd_lemma, family_members, torus_discrepancies
from ....circulant.families import CirculantSpec, circulant, mobius_ladder, torus_2layer
from ....circulant.mcsd import MCSDLabeling, find_mcsd
from ....enumeration.cubic import enumerate_cubic
from ....graph.graph import Graph
from ....util import NotCubicException


class TestMCSD(unittest.TestCase):
    def setUp(self):
        self.petersen = Graph.from_networkx(nx.petersen_graph())

    def test_ladders(self):
        assert find_mcsd(mobius_ladder(4)).labels() == [1, 2, 3]
        assert find_mcsd(mobius_ladder(8)).labels() == [1, 4, 7]
        assert find_mcsd(torus_2layer(6)).labels() == [2, 3, 4]

    def test_labeling_is_consistent(self):
        labeling = find_mcsd(mobius_ladder(10))
        assert labeling.is_minimal()
        assert sorted(labeling.ranks) == list(range(10))
        for (u, v), (forward, backward) in labeling.edge_labels().items():
            assert (forward + backward) % 10 == 0

    def test_non_minimal_ordering(self):
        labeling = MCSDLabeling(torus_2layer(6), tuple(range(6)))
        assert not labeling.is_minimal()

    def test_no_mcsd(self):
        assert find_mcsd(self.petersen) is None
        assert find_mcsd(torus_2layer(8)) is None
        self.assertRaises(NotCubicException, find_mcsd, circulant(CirculantSpec(8, 2)).graph)

    def test_family_members(self):
        members = family_members(8)
        assert [(family, n) for family, n, _ in members] == [('M', 4), ('M', 6), ('T', 6), ('M', 8), ('T', 8)]

    def test_torus_discrepancies(self):
        assert torus_discrepancies(12) == [(8, False, False), (12, False, False)]

    def test_mcsd_lemma_on_small_corpora(self):
        frame = check_mcsd_lemma([enumerate_cubic(n) for n in (4, 6, 8)])
        assert frame['passed'].all()
        assert sorted(frame['family']) == ['M_4', 'M_6', 'M_8', 'T_6,2']


if __name__ == '__main__':
    unittest.main()
