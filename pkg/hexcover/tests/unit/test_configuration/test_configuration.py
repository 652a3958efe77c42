import unittest

from ....cdc.oracle import find_6cdc
from ....circulant.families import torus_2layer
from ....configuration.configuration import (CycleConfiguration, deficiency, local_violation,
                                             configuration_violations, is_valid_configuration, repeated_pairs)
from ....configuration.seeds import build_S, enumerate_seed_configs
from ....generator.substitution import cdc_configuration
from ....graph.graph import build_graph
from ....util import CycleFormatException


class TestConfiguration(unittest.TestCase):
    def setUp(self):
        self.prism = torus_2layer(6)
        self.prism_cfg = cdc_configuration(find_6cdc(self.prism)[0])
        self.path = build_graph(3, [(0, 1), (1, 2)])

    def test_deficiency(self):
        for g in range(3, 7):
            assert deficiency(build_S(g)) == 2 * g
        assert deficiency(self.prism) == 0
        assert deficiency(self.path, [1]) == 1

    def test_local_rule(self):
        assert local_violation([(0, 1), (1, 2), (0, 2)]) is None
        assert local_violation([(0, 1), (0, 2)]) is None
        assert local_violation([(0, 0)]) is not None
        assert local_violation([(0, 1), (0, 1)]) is not None
        assert local_violation([(0, 1), (2, 3)]) is not None
        assert local_violation([(0, 1), (0, 2), (0, 3)]) is not None

    def test_full_cover_fragments(self):
        assert self.prism_cfg.labels() == [0, 1, 2]
        for label in self.prism_cfg.labels():
            fragments = self.prism_cfg.fragments(label)
            assert len(fragments) == 1
            assert fragments[0].closed and fragments[0].length == 6
        assert self.prism_cfg.closed_labels() == [0, 1, 2]
        assert not configuration_violations(self.prism_cfg, girth=3)

    def test_open_fragments(self):
        cfg = CycleConfiguration.from_mapping(self.path, {(0, 1): (0, 1), (1, 2): (1, 2)})
        assert cfg.ending_labels(1) == [0, 2]
        fragment = cfg.fragment_at(0, 1)
        assert not fragment.closed
        assert fragment.endpoints == (0, 2)
        assert fragment.length == 2
        assert fragment.other_end(0) == 2
        assert cfg.deficient_vertices() == [0, 1, 2]
        assert is_valid_configuration(cfg)

    def test_violations(self):
        triangle = build_graph(3, [(0, 1), (1, 2), (0, 2)])
        short = CycleConfiguration.from_mapping(triangle, {(0, 1): (0, 1), (1, 2): (0, 2), (0, 2): (0, 3)})
        reasons = configuration_violations(short, first_only=False)
        assert any('closes a cycle of length 3' in r for r in reasons)
        repeated = CycleConfiguration.from_mapping(self.path, {(0, 1): (0, 1), (1, 2): (0, 1)})
        assert configuration_violations(repeated)
        assert not is_valid_configuration(self.prism_cfg.relabeled({0: 0, 1: 1, 2: 1}))

    def test_distinct_pairs(self):
        path = build_graph(4, [(0, 1), (1, 2), (2, 3)])
        cfg = CycleConfiguration.from_mapping(path, {(0, 1): (0, 1), (1, 2): (1, 2), (2, 3): (0, 1)})
        assert not configuration_violations(cfg)
        assert configuration_violations(cfg, distinct_pairs=True)
        assert repeated_pairs(cfg) == [(0, 1)]

    def test_repeated_pairs_in_girth_5_seeds(self):
        seeds = {s.name: s.cfg for s in enumerate_seed_configs(5)}
        assert repeated_pairs(seeds['5a'])
        assert configuration_violations(seeds['5a'], girth=5, distinct_pairs=True)
        assert not configuration_violations(seeds['5a'], girth=5)
        assert repeated_pairs(seeds['5b'])
        assert repeated_pairs(seeds['5c']) == []

    def test_renumbered_and_certificate(self):
        relabeled = self.prism_cfg.relabeled({0: 7, 1: 3, 2: 5})
        assert relabeled.labels() == [3, 5, 7]
        assert relabeled.renumbered().labels() == [0, 1, 2]
        assert relabeled.certificate() == self.prism_cfg.certificate()

    def test_text_round_trip(self):
        text = self.prism_cfg.to_text()
        assert text.splitlines()[0] == '6'
        assert CycleConfiguration.from_text(text) == self.prism_cfg
        self.assertRaises(CycleFormatException, CycleConfiguration.from_text, '')
        self.assertRaises(CycleFormatException, CycleConfiguration.from_text, 'x\n0 1 0 1\n')
        self.assertRaises(CycleFormatException, CycleConfiguration.from_text, '3\n0 1 0\n')

    def test_missing_pair(self):
        self.assertRaises(CycleFormatException, CycleConfiguration.from_mapping, self.path, {(0, 1): (0, 1)})

    def test_pullback(self):
        s3 = build_S(3)
        pulled = self.prism_cfg.pullback(s3, (0, 1, 2, 3, 4, 5))
        assert pulled.graph == s3
        assert pulled.pair(0, 3) == self.prism_cfg.pair(0, 3)
        assert deficiency(pulled.graph) == 6


if __name__ == '__main__':
    unittest.main()
