import unittest

from ....enumeration.cubic import EDGES, PAIRING, KNOWN_COUNTS, enumerate_cubic, load_corpus
from ....circulant.families import mobius_ladder, torus_2layer
from ....graph.canonical import canonical_form
from ....graph.graph import girth
from ....util import Graph6FormatException


class TestCubicEnumeration(unittest.TestCase):
    def test_counts(self):
        for n in (4, 6, 8, 10):
            corpus = enumerate_cubic(n)
            assert len(corpus) == KNOWN_COUNTS[n]
            for graph in corpus.graphs:
                assert graph.n == n
                assert graph.is_cubic()
                assert graph.is_connected()

    def test_strategies_agree(self):
        for n in (6, 8, 10):
            assert enumerate_cubic(n, EDGES).certificates == enumerate_cubic(n, PAIRING).certificates

    def test_corpus_is_canonical(self):
        corpus = enumerate_cubic(8)
        assert list(corpus.certificates) == sorted(set(corpus.certificates))
        for graph, certificate in zip(corpus.graphs, corpus.certificates):
            assert canonical_form(graph).certificate == certificate
        assert canonical_form(mobius_ladder(8)).certificate in corpus.certificates
        assert canonical_form(torus_2layer(8)).certificate in corpus.certificates
        assert sorted(girth(g) for g in corpus.graphs) == [3, 3, 3, 4, 4]

    def test_bad_orders(self):
        self.assertRaises(ValueError, enumerate_cubic, 7)
        self.assertRaises(ValueError, enumerate_cubic, 2)
        self.assertRaises(ValueError, enumerate_cubic, 18)
        self.assertRaises(ValueError, enumerate_cubic, 6, 'geng')

    def test_load_corpus(self):
        corpus = enumerate_cubic(8)
        text = corpus.to_text()
        assert len(text.splitlines()) == 5
        assert load_corpus(8, text) == corpus

    def test_invalid_corpus_text(self):
        lines = enumerate_cubic(8).to_text().splitlines()
        self.assertRaises(Graph6FormatException, load_corpus, 8, '\n'.join(lines[:4]))
        self.assertRaises(Graph6FormatException, load_corpus, 8, '\n'.join(lines[::-1]))
        self.assertRaises(Graph6FormatException, load_corpus, 8, '\n'.join(lines + lines[:1]))
        self.assertRaises(Graph6FormatException, load_corpus, 10, '\n'.join(lines))
        self.assertRaises(Graph6FormatException, load_corpus, 8, 'G????\n')


if __name__ == '__main__':
    unittest.main()
