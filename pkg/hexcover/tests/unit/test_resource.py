import os
import tempfile
import unittest

from ...cdc.oracle import find_6cdc
from ...circulant.families import torus_2layer
from ...configuration.seeds import enumerate_seed_configs
from ...resource import CATALOG_FILE, ResourceManager
from ...seedlab.catalog import BaseInstance, SeedCatalog, SeedCatalogEntry, TYPE_I, load_catalog


class TestResourceManager(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.manager = ResourceManager()
        self.previous_dir = self.manager.cache_dir
        self.manager.set_cache_dir(self.directory.name)
        prism = torus_2layer(6)
        self.empty = SeedCatalog([SeedCatalogEntry(enumerate_seed_configs(3)[0])])
        self.full = SeedCatalog([SeedCatalogEntry(enumerate_seed_configs(3)[0],
                                                  bases=[BaseInstance(prism, find_6cdc(prism)[0], TYPE_I)])])

    def tearDown(self):
        self.manager.set_cache_dir(self.previous_dir)
        self.directory.cleanup()

    def test_write_keeps_previous_catalog(self):
        path = os.path.join(self.directory.name, CATALOG_FILE)
        self.manager.write_catalog(self.empty)
        assert not os.path.exists(path + '.bak')
        self.manager.write_catalog(self.full)
        with open(path + '.bak') as handle:
            assert handle.read() == self.empty.to_text()
        with open(path) as handle:
            assert load_catalog(handle.read()).to_text() == self.full.to_text()
        assert self.manager.catalog is self.full


if __name__ == '__main__':
    unittest.main()
