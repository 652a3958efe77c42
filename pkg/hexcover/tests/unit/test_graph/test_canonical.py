import unittest

import networkx as nx

from ....graph.canonical import canonical_form, find_isomorphism, is_isomorphic, labeled_certificate
from ....graph.graph import Graph


class TestCanonical(unittest.TestCase):
    def setUp(self):
        self.prism = Graph.from_networkx(nx.circular_ladder_graph(3))
        self.k33 = Graph.from_networkx(nx.complete_bipartite_graph(3, 3))
        self.petersen = Graph.from_networkx(nx.petersen_graph())
        self.heawood = Graph.from_networkx(nx.heawood_graph())

    def test_certificate_ignores_labels(self):
        perm = [5, 2, 8, 0, 9, 1, 4, 7, 3, 6]
        assert canonical_form(self.petersen).certificate == canonical_form(self.petersen.relabel(perm)).certificate

    def test_certificate_separates(self):
        assert canonical_form(self.prism).certificate != canonical_form(self.k33).certificate
        assert not is_isomorphic(self.prism, self.k33)

    def test_permutation_gives_canonical_graph(self):
        form = canonical_form(self.heawood)
        assert sorted(form.permutation) == list(range(14))
        relabeled = self.heawood.relabel([3, 10, 7, 0, 13, 5, 12, 1, 8, 2, 11, 4, 9, 6])
        other = canonical_form(relabeled)
        assert self.heawood.relabel(form.permutation) == relabeled.relabel(other.permutation)

    def test_find_isomorphism(self):
        perm = [2, 0, 1, 5, 3, 4]
        mapping = find_isomorphism(self.prism, self.prism.relabel(perm))
        assert mapping is not None
        target = self.prism.relabel(perm)
        for u, v in self.prism.edges():
            assert target.has_edge(mapping[u], mapping[v])
        assert find_isomorphism(self.prism, self.k33) is None
        assert find_isomorphism(self.prism, self.petersen) is None

    def test_agrees_with_networkx(self):
        graphs = [self.prism, self.k33, self.petersen, self.heawood]
        for a in graphs:
            for b in graphs:
                assert is_isomorphic(a, b) == nx.is_isomorphic(a.to_networkx(), b.to_networkx())

    def test_labeled_certificate_ignores_label_names(self):
        edges = [(0, 1), (1, 2), (0, 2)]
        first = labeled_certificate(3, [(e, (0, 1)) for e in edges])
        renamed = labeled_certificate(3, [(e, (7, 4)) for e in edges])
        assert first == renamed
        split = labeled_certificate(3, [((0, 1), (0, 1)), ((1, 2), (0, 1)), ((0, 2), (0, 2))])
        assert first != split

    def test_vertex_colors_matter(self):
        edges = [((0, 1), ()), ((1, 2), ())]
        end = labeled_certificate(3, edges, [1, 0, 0])
        middle = labeled_certificate(3, edges, [0, 1, 0])
        assert end != middle
        assert end == labeled_certificate(3, edges, [0, 0, 1])


if __name__ == '__main__':
    unittest.main()
