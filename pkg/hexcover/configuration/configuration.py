from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import cached_property

from ..graph.canonical import labeled_certificate
from ..graph.graph import Graph, build_graph, edge_key
from ..util import read_int_rows, CycleFormatException

CYCLE_LENGTH = 6


def deficiency(graph, vertices=None):
    """
    3|V(H)| minus the degree sum, over the whole graph or over a vertex subset.
    :param graph: Graph with degrees at most 3
    :param vertices: optional iterable of vertices
    :return: non-negative integer
    """
    if vertices is None:
        vertices = range(graph.n)
    return sum(3 - graph.degree(v) for v in vertices)


@dataclass(frozen=True)
class Fragment:
    """A maximal connected piece of one label: an open path, or a closed cycle (vertices not repeated)."""
    label: int
    vertices: tuple
    closed: bool

    @property
    def length(self):
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    @property
    def endpoints(self):
        return () if self.closed else (self.vertices[0], self.vertices[-1])

    def other_end(self, v):
        return self.vertices[-1] if self.vertices[0] == v else self.vertices[0]


def local_violation(pairs):
    """
    Why the label pairs on the edges at one vertex cannot belong to a 6-CDC, or None.

    Any two pairs at a vertex share exactly one label; three pairs use exactly three labels.
    """
    for pair in pairs:
        if len(set(pair)) != 2:
            return f"edge label pair {pair} is not two distinct labels"
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if len(set(pairs[i]) & set(pairs[j])) != 1:
                return f"pairs {pairs[i]} and {pairs[j]} do not share exactly one label"
    if len(pairs) == 3 and len({label for pair in pairs for label in pair}) != 3:
        return f"pairs {pairs} do not use exactly three labels"
    if len(pairs) > 3:
        return f"{len(pairs)} labeled edges at one vertex"
    return None


@dataclass(frozen=True)
class CycleConfiguration:
    """
    A graph of positive or zero deficiency whose edges each carry the two labels of the cycles covering them.

    pairs is aligned with graph.edges(); each pair is a sorted tuple of two labels.
    """
    graph: Graph
    pairs: tuple

    @classmethod
    def from_mapping(cls, graph, mapping):
        """
        :param graph: host Graph
        :param mapping: dict edge -> iterable of two labels, covering every edge of graph
        """
        normalized = {edge_key(*e): tuple(sorted(p)) for e, p in mapping.items()}
        missing = [e for e in graph.edges() if e not in normalized]
        if missing:
            raise CycleFormatException(f"edges {missing[:3]} carry no label pair")
        return cls(graph, tuple(normalized[e] for e in graph.edges()))

    @cached_property
    def _pair_of(self):
        return dict(zip(self.graph.edges(), self.pairs))

    def pair(self, u, v):
        return self._pair_of[edge_key(u, v)]

    def mapping(self):
        return dict(self._pair_of)

    def labels(self):
        return sorted({label for pair in self.pairs for label in pair})

    def pairs_at(self, v):
        return [self.pair(v, w) for w in self.graph.neighbors(v)]

    def labels_at(self, v):
        return Counter(label for pair in self.pairs_at(v) for label in pair)

    def ending_labels(self, v):
        """Labels whose fragments end at v, i.e. labels met on exactly one edge at v."""
        return sorted(label for label, count in self.labels_at(v).items() if count == 1)

    def deficient_vertices(self):
        return [v for v in range(self.graph.n) if self.graph.degree(v) < 3]

    @cached_property
    def _fragments(self):
        by_label = defaultdict(list)
        for e, p in self._pair_of.items():
            for label in p:
                by_label[label].append(e)
        found = {}
        for label, edges in by_label.items():
            found[label] = _split_fragments(label, edges)
        return found

    def fragments(self, label):
        """
        Maximal connected edge sets of one label, each classified open or closed. Empty for unknown labels.
        """
        return list(self._fragments.get(label, []))

    def all_fragments(self):
        return {label: list(frags) for label, frags in self._fragments.items()}

    def fragment_at(self, v, label):
        return next((f for f in self._fragments.get(label, []) if v in f.vertices), None)

    def closed_labels(self):
        return sorted(label for label, frags in self._fragments.items() if any(f.closed for f in frags))

    def has_closed_label(self):
        return bool(self.closed_labels())

    def certificate(self):
        """Invariant under vertex relabeling and label bijections."""
        return labeled_certificate(self.graph.n, zip(self.graph.edges(), self.pairs))

    def relabeled(self, label_map):
        return CycleConfiguration(self.graph, tuple(tuple(sorted(label_map[a] for a in p)) for p in self.pairs))

    def renumbered(self):
        """Labels renumbered 0, 1, ... by first appearance in edge order."""
        order = {}
        for pair in self.pairs:
            for label in pair:
                order.setdefault(label, len(order))
        return self.relabeled(order)

    def pullback(self, pattern, embedding):
        """
        Configuration induced on pattern by a map of its vertices into this configuration's graph.
        The map need not be injective as long as every pattern edge lands on an edge.
        """
        mapping = {(u, v): self.pair(embedding[u], embedding[v]) for u, v in pattern.edges()}
        return CycleConfiguration.from_mapping(pattern, mapping)

    def to_text(self):
        lines = [str(self.graph.n)]
        lines += [f"{u} {v} {a} {b}" for (u, v), (a, b) in zip(self.graph.edges(), self.pairs)]
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, text):
        rows = [line for line in text.splitlines() if line.strip()]
        if not rows:
            raise CycleFormatException("empty configuration text")
        try:
            n = int(rows[0])
        except ValueError:
            raise CycleFormatException(f"configuration header {rows[0]!r} is not a vertex count")
        records = read_int_rows('\n'.join(rows[1:]), 4, 'configuration edge')
        graph = build_graph(n, [(u, v) for u, v, _, _ in records])
        return cls.from_mapping(graph, {(u, v): (a, b) for u, v, a, b in records})


def _split_fragments(label, edges):
    adjacency = defaultdict(list)
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    seen = set()
    fragments = []
    # paths first, walked from their smaller end
    for start in sorted(adjacency):
        if len(adjacency[start]) != 1 or start in seen:
            continue
        path = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [w for w in adjacency[cur] if w != prev and w not in seen]
            if not nxt or len(adjacency[cur]) > 2:
                break
            prev, cur = cur, nxt[0]
            path.append(cur)
            seen.add(cur)
        fragments.append(Fragment(label, tuple(path), False))
    for start in sorted(adjacency):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [w for w in adjacency[cur] if w != prev and w not in seen]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            cycle.append(cur)
            seen.add(cur)
        fragments.append(Fragment(label, tuple(cycle), True))
    return fragments


def fragments(cfg, label):
    """Module-level form of CycleConfiguration.fragments."""
    return cfg.fragments(label)


def _forced_pair(cfg, v):
    pairs = cfg.pairs_at(v)
    if len(pairs) != 2:
        return None
    return tuple(sorted(set(pairs[0]) ^ set(pairs[1])))


def repeated_pairs(cfg):
    """Label pairs carried by more than one edge."""
    return [p for p, c in Counter(cfg.pairs).items() if c > 1]


def configuration_violations(cfg, girth=None, distinct_pairs=False, first_only=True):
    """
    Reasons cfg cannot be part of a 6-CDC of a cubic graph of the given girth.

    Checks the local rule at every vertex, the fragment rules of every label (vertex-disjoint paths, closed
    fragments of length exactly 6 and alone, enough room left to close open fragments) and, when girth is
    given, the edges forced by length-5 fragments and the shortest closing path of single open fragments.
    :param cfg: CycleConfiguration
    :param girth: girth the completed graph must keep, or None to skip girth-dependent rules
    :param distinct_pairs: forbid two edges with the same label pair, which holds in every cubic graph of girth
        at least 5 with a 6-CDC
    :param first_only: stop at the first reason
    :return: list of strings, empty when no rule is broken
    """
    reasons = []

    def add(reason):
        reasons.append(reason)
        return first_only

    graph = cfg.graph
    for v in range(graph.n):
        reason = local_violation(cfg.pairs_at(v))
        if reason and add(f"vertex {v}: {reason}"):
            return reasons
    if distinct_pairs:
        repeated = repeated_pairs(cfg)
        if repeated and add(f"label pair {repeated[0]} on two edges"):
            return reasons

    distances = {}

    def distance(a, b):
        if a not in distances:
            distances[a] = graph.distances_from(a)
        return distances[a].get(b, float('inf'))

    forced = defaultdict(set)
    for label, frags in cfg.all_fragments().items():
        closed = [f for f in frags if f.closed]
        if closed:
            if len(frags) > 1 or closed[0].length != CYCLE_LENGTH:
                if add(f"label {label} closes a cycle of length {closed[0].length} or has other fragments"):
                    return reasons
            continue
        total = sum(f.length for f in frags) + len(frags)
        if total > CYCLE_LENGTH:
            if add(f"label {label} fragments need at least {total} edges"):
                return reasons
            continue
        for f in frags:
            if any(graph.degree(v) == 3 for v in f.endpoints):
                if add(f"label {label} ends at a full vertex"):
                    return reasons
        if girth is None or len(frags) != 1:
            continue
        a, b = frags[0].endpoints
        missing = CYCLE_LENGTH - frags[0].length
        if missing + distance(a, b) < girth:
            if add(f"label {label} can only close through a cycle shorter than {girth}"):
                return reasons
            continue
        if missing == 1:
            if graph.has_edge(a, b):
                if add(f"label {label} needs edge {a}-{b}, which already exists"):
                    return reasons
                continue
            forced[edge_key(a, b)].add(label)

    demand = Counter()
    for (a, b), labels in sorted(forced.items()):
        demand[a] += 1
        demand[b] += 1
        if len(labels) > 2:
            if add(f"edge {a}-{b} forced by {len(labels)} labels"):
                return reasons
            continue
        candidates = [_forced_pair(cfg, v) for v in (a, b)]
        candidates = [c for c in candidates if c is not None]
        if len(labels) == 2:
            candidates.append(tuple(sorted(labels)))
        if len(set(candidates)) > 1 or any(not labels <= set(c) for c in candidates):
            if add(f"edge {a}-{b} cannot carry a consistent pair for labels {sorted(labels)}"):
                return reasons
            continue
        if candidates:
            pair = candidates[0]
            for v in (a, b):
                reason = local_violation(cfg.pairs_at(v) + [pair])
                if reason and add(f"forced edge {a}-{b}: {reason}"):
                    return reasons
    for v, count in demand.items():
        if count > 3 - graph.degree(v):
            if add(f"vertex {v} is forced to take {count} new edges"):
                return reasons
    return reasons


def is_valid_configuration(cfg, girth=None, distinct_pairs=False):
    return not configuration_violations(cfg, girth, distinct_pairs)
