import unittest

import networkx as nx
import numpy as np

from ....cdc.cover import CDC, verify_6cdc, intersection_stats, COVERAGE, CYCLE_COUNT, LEMMAS
from ....cdc.oracle import find_6cdc, ALL
from ....graph.graph import Graph, build_graph
from ....util import CycleFormatException, NotCubicException


class TestCover(unittest.TestCase):
    def setUp(self):
        self.k4 = Graph.from_networkx(nx.complete_graph(4))
        self.prism = Graph.from_networkx(nx.circular_ladder_graph(3))
        self.k33 = Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        self.petersen = Graph.from_networkx(nx.petersen_graph())
        self.heawood = Graph.from_networkx(nx.heawood_graph())

    def test_prism_has_one_cover(self):
        covers = find_6cdc(self.prism, ALL)
        assert len(covers) == 1
        mu, sigma = intersection_stats(covers[0])
        assert covers[0].t == 3
        assert mu.max() == 3
        assert (sigma == 2).all()

    def test_small_negatives(self):
        assert find_6cdc(self.k4) == []
        assert find_6cdc(self.petersen, ALL) == []

    def test_heawood(self):
        covers = find_6cdc(self.heawood)
        assert len(covers) == 1
        cdc = covers[0]
        assert cdc.t == 7
        report = verify_6cdc(self.heawood, cdc)
        assert report.passed
        assert (report.sigma == 6).all()

    def test_every_cover_passes(self):
        for graph in [self.prism, self.k33, self.heawood]:
            for cdc in find_6cdc(graph, ALL):
                report = verify_6cdc(graph, cdc, fail_fast=False)
                assert report.passed
                assert report.first_failure() is None
                assert list(report.to_frame()['status']) == ['pass'] * len(LEMMAS)

    def test_detects_broken_cover(self):
        cdc = find_6cdc(self.prism)[0]
        report = verify_6cdc(self.prism, cdc.cycles[:2], fail_fast=False)
        assert not report.passed
        assert report.results[COVERAGE] is False
        assert report.results[CYCLE_COUNT] is False
        report = verify_6cdc(self.prism, cdc.cycles[:2])
        assert report.first_failure() == COVERAGE
        assert CYCLE_COUNT not in report.results

    def test_rejects_non_hexagons(self):
        self.assertRaises(CycleFormatException, verify_6cdc, self.prism, [(0, 1, 2)])
        self.assertRaises(NotCubicException, find_6cdc, build_graph(3, [(0, 1), (1, 2)]))

    def test_text_round_trip(self):
        cdc = find_6cdc(self.heawood)[0]
        text = cdc.to_text()
        assert text.startswith('14 21 7\n')
        assert CDC.from_text(self.heawood, text) == cdc
        self.assertRaises(CycleFormatException, CDC.from_text, self.prism, text)
        self.assertRaises(CycleFormatException, CDC.from_text, self.heawood, text.replace('14 21 7', '14 21 8'))

    def test_certificate_ignores_relabeling(self):
        perm = [3, 0, 5, 1, 4, 2]
        relabeled = self.prism.relabel(perm)
        first = find_6cdc(self.prism)[0]
        second = find_6cdc(relabeled)[0]
        assert first.certificate() == second.certificate()

    def test_mu_symmetric(self):
        mu, sigma = intersection_stats(find_6cdc(self.heawood)[0])
        assert np.array_equal(mu, mu.T)
        assert (np.diag(mu) == 0).all()


if __name__ == '__main__':
    unittest.main()
