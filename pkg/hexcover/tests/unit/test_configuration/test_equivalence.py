import unittest

from ....configuration.equivalence import configs_equivalent, is_self_similar, iter_copies
from ....configuration.seeds import build_S, enumerate_seed_configs
from ....circulant.families import torus_2layer


class TestEquivalence(unittest.TestCase):
    def setUp(self):
        self.seed3 = enumerate_seed_configs(3)[0].cfg
        self.seed4 = enumerate_seed_configs(4)[0].cfg

    def test_equivalent_to_itself(self):
        correspondence = configs_equivalent(self.seed3, self.seed3)
        assert correspondence is not None
        assert sorted(correspondence.vertex_map()) == [3, 4, 5]
        assert sorted(correspondence.vertex_map().values()) == [3, 4, 5]

    def test_label_permutation(self):
        labels = self.seed3.labels()
        permuted = self.seed3.relabeled(dict(zip(labels, reversed(labels))))
        correspondence = configs_equivalent(self.seed3, permuted)
        assert correspondence is not None
        assert len(set(correspondence.label_map.values())) == len(correspondence.label_map)

    def test_different_boundaries(self):
        assert configs_equivalent(self.seed3, self.seed4) is None
        assert configs_equivalent(self.seed4, self.seed3) is None

    def test_iter_copies(self):
        copies = list(iter_copies(build_S(3), torus_2layer(6)))
        assert len(copies) == 2
        assert sorted(sorted(c[:3]) for c in copies) == [[0, 1, 2], [3, 4, 5]]

    def test_self_similarity(self):
        assert is_self_similar(self.seed3, self.seed3)
        assert not is_self_similar(self.seed4, self.seed3)


if __name__ == '__main__':
    unittest.main()
