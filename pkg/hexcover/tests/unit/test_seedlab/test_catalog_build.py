import os
import tempfile
import unittest

from ....circulant.families import torus_2layer
from ....configuration.configuration import deficiency
from ....generator.substitution import path_cover_key
from ....graph.canonical import is_isomorphic
from ....graph.graph import girth
from ....resource import CATALOG_FILE, ResourceManager
from ....seedlab.api import build_catalog, check_girth_anchors, derive_I
from ....seedlab.catalog import TYPE_I, TYPE_II, TYPE_III, load_catalog


class TestCatalogBuild(unittest.TestCase):
    def setUp(self):
        self.catalog = build_catalog(girths=(3, 4))

    def test_girth_3(self):
        entry = self.catalog.entry('3a')
        assert entry.expansion is not None
        assert girth(entry.expansion.graph) == 3
        assert deficiency(entry.expansion.graph) == 6
        assert [b.kind for b in entry.bases] == [TYPE_I]
        assert is_isomorphic(entry.bases[0].graph, torus_2layer(6))

    def test_girth_4(self):
        entries = self.catalog.for_girth(4)
        assert len(entries) == 4
        degenerate = [e for e in entries if e.degenerate]
        assert self.catalog.expansion_of(degenerate[0]) is self.catalog.entry(degenerate[0].parent).expansion
        check_girth_anchors(self.catalog, 4)

    def test_hamiltonian_data(self):
        for _, base in self.catalog.bases(3) + self.catalog.bases(4):
            assert len(base.hamiltonian) == base.graph.n

    def test_girth_3_trace(self):
        # the prism cycle meets S_3 in one path through five of its vertices, and the I_3 path that replaces it
        # visits every vertex of I_3 but the pendant the cycle leaves outside
        entry = self.catalog.entry('3a')
        base = entry.bases[0]
        assert len(base.trace) == 1
        assert len(base.trace[0]) == 5
        assert len(base.paths) == 1
        assert len(base.paths[0]) == entry.expansion.graph.n - 1
        key = path_cover_key('3a', base.paths, entry.expansion.graph.n)
        assert self.catalog.path_cover_cache()[key] == list(base.paths)

    def test_derive_I_is_deterministic(self):
        seed = self.catalog.entry('4a').seed
        assert derive_I(seed).certificate() == self.catalog.entry('4a').expansion.certificate()

    def test_text_round_trip(self):
        text = self.catalog.to_text()
        assert load_catalog(text).to_text() == text


class TestFullCatalog(unittest.TestCase):
    def setUp(self):
        self.catalog = build_catalog()

    def test_every_girth_matches_the_known_cases(self):
        assert self.catalog.girths() == [3, 4, 5, 6]
        for g in self.catalog.girths():
            check_girth_anchors(self.catalog, g)

    def test_girth_5_survivors(self):
        assert self.catalog.entry('5a').expansion is not None
        assert self.catalog.entry('5a').bases == []
        assert self.catalog.entry('5b').expansion is None
        assert self.catalog.entry('5b').bases == []
        survivor = self.catalog.entry('5c')
        assert girth(survivor.expansion.graph) == 5
        assert {b.kind for b in survivor.bases} == {TYPE_II}

    def test_girth_6_expansions(self):
        for name in ('6a', '6b', '6c', '6d', '6e'):
            expansion = self.catalog.entry(name).expansion
            assert expansion is not None
            assert deficiency(expansion.graph) == 12
        assert [b.kind for b in self.catalog.entry('6e').bases] == [TYPE_III, TYPE_III]

    def test_hamiltonian_data(self):
        for _, base in (pair for g in self.catalog.girths() for pair in self.catalog.bases(g)):
            assert len(base.hamiltonian) == base.graph.n


class TestSharedCatalog(unittest.TestCase):
    def setUp(self):
        self.manager = ResourceManager()
        self.previous = self.manager.cache_dir
        self.directory = tempfile.TemporaryDirectory()
        self.manager.set_cache_dir(self.directory.name)

    def tearDown(self):
        self.manager.set_cache_dir(self.previous)
        self.directory.cleanup()

    def test_written_and_reloaded(self):
        catalog = self.manager.catalog
        assert os.path.exists(os.path.join(self.directory.name, CATALOG_FILE))
        assert ResourceManager().catalog is catalog
        self.manager.set_cache_dir(self.directory.name)
        assert self.manager.catalog.to_text() == catalog.to_text()

    def test_corrupt_file_is_rebuilt(self):
        with open(os.path.join(self.directory.name, CATALOG_FILE), 'w') as handle:
            handle.write('not a catalog\n')
        assert self.manager.catalog.girths() == [3, 4, 5, 6]
        assert os.path.exists(os.path.join(self.directory.name, CATALOG_FILE + '.bak'))


if __name__ == '__main__':
    unittest.main()
