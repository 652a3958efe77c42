import unittest

import networkx as nx

from ....cdc.oracle import find_6cdc
from ....circulant.families import mobius_ladder, torus_2layer
from ....configuration.seeds import enumerate_seed_configs
from ....generator.substitution import (Replacement, cdc_configuration, configuration_cdc, cycle_stretches,
                                         reduction_blocker, splice_hamiltonian)
from ....graph.graph import Graph
from ....graph.hamiltonian import is_hamiltonian_cycle, least_hamiltonian_cycle
from ....util import SubstitutionException


class TestSubstitution(unittest.TestCase):
    def setUp(self):
        self.prism = torus_2layer(6)
        self.prism_cdc = find_6cdc(self.prism)[0]
        self.heawood = Graph.from_networkx(nx.heawood_graph())

    def test_cover_configuration_round_trip(self):
        cfg = cdc_configuration(self.prism_cdc)
        assert cfg.graph == self.prism
        assert cfg.labels() == [0, 1, 2]
        assert configuration_cdc(cfg) == self.prism_cdc

    def test_open_labels_are_no_cover(self):
        seed = enumerate_seed_configs(3)[0]
        self.assertRaises(SubstitutionException, configuration_cdc, seed.cfg)

    def test_reduction_blocker(self):
        cfg = cdc_configuration(self.prism_cdc)
        assert reduction_blocker(cfg, 3) is None
        assert reduction_blocker(cfg, 4) == 'girth'
        heawood_cfg = cdc_configuration(find_6cdc(self.heawood)[0])
        assert reduction_blocker(heawood_cfg, 6) == 'hexagon'
        assert reduction_blocker(heawood_cfg, 5) is None

    def test_cycle_stretches(self):
        cycle = (0, 1, 2, 3, 4, 5)
        edges = {(1, 2), (2, 3)}
        assert cycle_stretches(cycle, edges) == [[3, 4, 5, 0, 1]]
        assert cycle_stretches(cycle, edges, inside=True) == [[1, 2, 3]]
        assert cycle_stretches(cycle, {(0, 1), (3, 4)}) == [[1, 2, 3], [4, 5, 0]]
        assert cycle_stretches(cycle, set(), inside=True) == []

    def test_splice_when_the_cycle_stays_inside_the_copy(self):
        host = mobius_ladder(6)
        host_cycle = least_hamiltonian_cycle(host)
        replacement = Replacement(cdc_configuration(self.prism_cdc), {}, {}, frozenset(host.edges()))
        cycle, paths = splice_hamiltonian(host_cycle, replacement)
        assert cycle == least_hamiltonian_cycle(self.prism)
        assert is_hamiltonian_cycle(self.prism, cycle)
        assert paths == []


if __name__ == '__main__':
    unittest.main()
