import logging
import os
import shutil

from . import config
from .enumeration.cubic import enumerate_cubic, load_corpus
from .seedlab.api import build_catalog
from .seedlab.catalog import load_catalog
from .util import CatalogFormatException, Graph6FormatException

CATALOG_FILE = 'catalog.txt'


class Borg:
    _shared_state = {}
    def __init__(self):
        self.__dict__ = self._shared_state


class ResourceManager(Borg):
    """
    Shared access to the seed catalog and the cubic graph corpora, read from the cache directory when present and
    derived and written there otherwise.
    """
    def __init__(self):
        Borg.__init__(self)
        if not hasattr(self, "resources"):
            self.resources = dict()
        if not hasattr(self, "cache_dir"):
            self.cache_dir = config.cache_dir
        if not hasattr(self, "jobs"):
            self.jobs = config.jobs

    def set_cache_dir(self, cache_dir):
        """Points the manager at another cache directory and forgets everything loaded from the old one."""
        self.cache_dir = cache_dir
        self.resources.clear()

    def _path(self, name):
        return os.path.join(self.cache_dir, name)

    def _write(self, name, text):
        os.makedirs(self.cache_dir, exist_ok=True)
        with open(self._path(name), 'w', newline='\n') as handle:
            handle.write(text)

    def _read(self, name):
        with open(self._path(name)) as handle:
            return handle.read()

    @property
    def catalog(self):
        if "catalog" not in self.resources:  ## Warning this is not thread safe
            self.resources["catalog"] = self._load_catalog()
        return self.resources["catalog"]

    def _load_catalog(self):
        if os.path.exists(self._path(CATALOG_FILE)):
            try:
                return load_catalog(self._read(CATALOG_FILE))
            except CatalogFormatException as e:
                backup = self._path(CATALOG_FILE + '.bak')
                logging.warning(f"catalog in {self.cache_dir} is unreadable ({e}); moved to {backup}, rebuilding")
                shutil.move(self._path(CATALOG_FILE), backup)
        return self.rebuild_catalog()

    def write_catalog(self, catalog):
        """Writes catalog to the cache directory, keeping the previous file as catalog.txt.bak."""
        path = self._path(CATALOG_FILE)
        if os.path.exists(path):
            shutil.copyfile(path, path + '.bak')
            logging.info(f"previous catalog kept as {path}.bak")
        self._write(CATALOG_FILE, catalog.to_text())
        self.resources["catalog"] = catalog

    def rebuild_catalog(self):
        """Derives the catalog from scratch, checks the anchors and writes it to the cache directory."""
        catalog = build_catalog(jobs=self.jobs)
        self.write_catalog(catalog)
        return catalog

    def corpus(self, n):
        key = f"corpus_{n}"
        if key not in self.resources:  ## Warning this is not thread safe
            self.resources[key] = self._load_corpus(n)
        return self.resources[key]

    def _load_corpus(self, n):
        name = f"corpus_{n}.g6"
        if os.path.exists(self._path(name)):
            try:
                return load_corpus(n, self._read(name))
            except Graph6FormatException as e:
                logging.warning(f"corpus cache {name} is invalid ({e}); enumerating again")
        corpus = enumerate_cubic(n)
        self._write(name, corpus.to_text())
        return corpus
