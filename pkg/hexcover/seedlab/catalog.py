from dataclasses import dataclass, field

from ..cdc.cover import CDC
from ..configuration.configuration import CycleConfiguration
from ..configuration.seeds import SeedConfiguration, SeedVariant
from ..generator.substitution import path_cover_key
from ..graph.graph6 import decode_graph6, graph6_text
from ..util import CatalogFormatException, CycleFormatException, Graph6FormatException, GraphConstructionException

HEADER = 'hexcover-catalog v1'

TYPE_I = 'i'
TYPE_II = 'ii'
TYPE_III = 'iii'
BASE_TYPES = [TYPE_I, TYPE_II, TYPE_III]


@dataclass
class BaseInstance:
    """
    A B_g instance: a cubic girth-g graph with a 6-CDC where substitution starts.

    hamiltonian is the stored Hamiltonian cycle, trace the paths it leaves inside the original S_g copy, and
    paths the matching path cover of I_g that replaces them.
    """
    graph: object
    cdc: CDC
    kind: str
    superseded_by: str = None
    hamiltonian: tuple = None
    trace: tuple = ()
    paths: tuple = ()


@dataclass
class SeedCatalogEntry:
    """
    Everything derived for one seed configuration: its self-similar expansion I_g (None when the search finds none)
    and its base instances. Degenerate entries borrow I_g from their parent entry.
    """
    seed: SeedConfiguration
    expansion: CycleConfiguration = None
    bases: list = field(default_factory=list)
    parent: str = None

    @property
    def name(self):
        return self.seed.name

    @property
    def g(self):
        return self.seed.g

    @property
    def degenerate(self):
        return self.seed.degenerate

    def expansion_size(self):
        if self.expansion is None:
            return None
        return self.expansion.graph.n, self.expansion.graph.m


@dataclass
class SeedCatalog:
    entries: list = field(default_factory=list)
    path_covers: dict = field(default=None, repr=False, compare=False)

    def path_cover_cache(self):
        """
        Splice cache shared by substitutions over this catalog, seeded with the path covers stored on the base
        instances of every entry that owns its I_g.
        """
        if self.path_covers is None:
            self.path_covers = {}
            for entry in self.entries:
                if entry.degenerate or entry.expansion is None:
                    continue
                for base in entry.bases:
                    if base.paths:
                        key = path_cover_key(entry.name, base.paths, entry.expansion.graph.n)
                        self.path_covers.setdefault(key, list(base.paths))
        return self.path_covers

    def for_girth(self, g):
        return [e for e in self.entries if e.g == g]

    def entry(self, name):
        found = next((e for e in self.entries if e.name == name), None)
        if found is None:
            raise KeyError(f"no catalog entry named {name!r}")
        return found

    def girths(self):
        return sorted({e.g for e in self.entries})

    def expansion_of(self, entry):
        """I_g used at the entry's sites: its own, or its parent's for a degenerate entry."""
        if entry.expansion is not None:
            return entry.expansion
        return self.entry(entry.parent).expansion if entry.parent else None

    def bases(self, g, include_superseded=True):
        return [(e, b) for e in self.for_girth(g) for b in e.bases if include_superseded or b.superseded_by is None]

    def to_text(self):
        lines = [HEADER]
        for entry in self.entries:
            lines.append(f"entry {entry.name} {entry.g} {entry.parent or '-'}")
            lines.append('quotient ' + ' '.join(str(v) for v in entry.seed.variant.quotient))
            lines.append('seed')
            lines.append(entry.seed.cfg.to_text().rstrip('\n'))
            lines.append('end')
            if entry.expansion is None:
                lines.append('expansion none')
            else:
                lines.append('expansion')
                lines.append(entry.expansion.to_text().rstrip('\n'))
                lines.append('end')
            for base in entry.bases:
                lines.append(f"base {base.kind} {base.superseded_by or '-'} {graph6_text(base.graph)}")
                lines.append('cdc')
                lines.append(base.cdc.to_text().rstrip('\n'))
                lines.append('end')
                lines.append('hamiltonian ' + _sequence(base.hamiltonian))
                lines.append('trace ' + _path_list(base.trace))
                lines.append('paths ' + _path_list(base.paths))
        return '\n'.join(lines) + '\n'


def _sequence(vertices):
    return '-' if not vertices else ' '.join(str(v) for v in vertices)


def _path_list(paths):
    return '-' if not paths else ' | '.join(' '.join(str(v) for v in p) for p in paths)


def _parse_sequence(text):
    return None if text.strip() == '-' else tuple(int(v) for v in text.split())


def _parse_path_list(text):
    if text.strip() == '-':
        return ()
    return tuple(tuple(int(v) for v in part.split()) for part in text.split('|'))


class _Reader:
    def __init__(self, text):
        self.lines = text.splitlines()
        self.position = 0

    def peek(self):
        return self.lines[self.position] if self.position < len(self.lines) else None

    def take(self, prefix=None):
        line = self.peek()
        if line is None:
            raise CatalogFormatException(f"catalog ends early, expected {prefix!r}")
        if prefix is not None and line.split(' ', 1)[0] != prefix:
            raise CatalogFormatException(f"line {self.position + 1}: expected {prefix!r}, found {line!r}")
        self.position += 1
        return line[len(prefix):].strip() if prefix else line

    def block(self):
        body = []
        while True:
            line = self.take()
            if line == 'end':
                return '\n'.join(body) + '\n'
            body.append(line)


def load_catalog(text):
    """
    Parses catalog text written by SeedCatalog.to_text.
    :raises CatalogFormatException: on a wrong header, a malformed section or an unreadable graph
    """
    reader = _Reader(text)
    if reader.take() != HEADER:
        raise CatalogFormatException(f"catalog header is not {HEADER!r}")
    entries = []
    try:
        while reader.peek() is not None and reader.peek().strip():
            fields = reader.take('entry').split()
            if len(fields) != 3:
                raise CatalogFormatException(f"entry line needs name, girth and parent, got {fields}")
            name, g, parent = fields[0], int(fields[1]), fields[2]
            quotient = tuple(int(v) for v in reader.take('quotient').split())
            reader.take('seed')
            cfg = CycleConfiguration.from_text(reader.block())
            seed = SeedConfiguration(g, name, cfg, SeedVariant(cfg.graph, quotient))
            entry = SeedCatalogEntry(seed, parent=None if parent == '-' else parent)
            if reader.take('expansion') != 'none':
                entry.expansion = CycleConfiguration.from_text(reader.block())
            while reader.peek() is not None and reader.peek().startswith('base '):
                kind, superseded, g6 = reader.take('base').split()
                if kind not in BASE_TYPES:
                    raise CatalogFormatException(f"unknown base type {kind!r} in entry {name}")
                graph = decode_graph6(g6)
                reader.take('cdc')
                cdc = CDC.from_text(graph, reader.block())
                entry.bases.append(BaseInstance(graph, cdc, kind, None if superseded == '-' else superseded,
                                                _parse_sequence(reader.take('hamiltonian')),
                                                _parse_path_list(reader.take('trace')),
                                                _parse_path_list(reader.take('paths'))))
            entries.append(entry)
    except (CycleFormatException, Graph6FormatException, GraphConstructionException, ValueError) as e:
        raise CatalogFormatException(f"unreadable catalog near line {reader.position}: {e}")
    return SeedCatalog(entries)
