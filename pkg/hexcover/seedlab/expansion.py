import heapq
import logging
from dataclasses import dataclass
from functools import cached_property

from ..config import max_search_states
from ..configuration.configuration import CycleConfiguration, configuration_violations, local_violation
from ..graph.canonical import labeled_certificate
from ..graph.graph import build_graph, edge_key, enumerate_cycles, normalize_cycle
from ..util import SearchBoundExceededException
from .adjacency import configuration_adjacency

FULL = 3


@dataclass(frozen=True)
class ExpansionState:
    """
    A partial graph with a configuration, grown one edge at a time. frozen vertices are final boundary vertices
    and take no further edges.
    """
    n: int
    labeled_edges: tuple
    frozen: frozenset = frozenset()

    @classmethod
    def from_configuration(cls, cfg):
        return cls(cfg.graph.n, tuple(zip(cfg.graph.edges(), cfg.pairs)))

    @cached_property
    def pair_of(self):
        return dict(self.labeled_edges)

    @cached_property
    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.pair_of:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    @cached_property
    def graph(self):
        return build_graph(self.n, list(self.pair_of))

    @cached_property
    def configuration(self):
        return CycleConfiguration.from_mapping(self.graph, self.pair_of)

    @property
    def m(self):
        return len(self.labeled_edges)

    def degree(self, v):
        return len(self.adjacency[v])

    def pairs_at(self, v):
        return [self.pair_of[edge_key(v, w)] for w in self.adjacency[v]]

    def active(self):
        return [v for v in range(self.n) if self.degree(v) < FULL and v not in self.frozen]

    def open_deficiency(self):
        return sum(FULL - self.degree(v) for v in self.active())

    def labels(self):
        return {label for _, pair in self.labeled_edges for label in pair}

    def with_edge(self, u, w, pair):
        n = max(self.n, w + 1)
        edges = tuple(sorted(self.labeled_edges + ((edge_key(u, w), tuple(sorted(pair))),)))
        return ExpansionState(n, edges, self.frozen)

    def with_frozen(self, v):
        return ExpansionState(self.n, self.labeled_edges, self.frozen | {v})

    def certificate(self):
        colors = [1 if v in self.frozen else 0 for v in range(self.n)]
        return labeled_certificate(self.n, self.labeled_edges, colors)


@dataclass(frozen=True)
class ExpansionRules:
    """
    g: girth to keep. vertex_bound: largest vertex count explored.
    allow_freeze / max_frozen: whether degree-1 vertices may be declared final, and how many.
    allow_new_vertices: whether edges may lead to new vertices.
    hexagons_in_cover: every complete 6-cycle must be a closed label.
    distinct_pairs: no two edges may carry the same label pair.
    triangle_vertices: any three pairwise adjacent labels must be the three labels of one vertex.
    """
    g: int
    vertex_bound: int
    allow_freeze: bool = False
    max_frozen: int = 0
    allow_new_vertices: bool = True
    hexagons_in_cover: bool = False
    distinct_pairs: bool = False
    triangle_vertices: bool = False


def _candidate_pairs(state, u):
    pairs = state.pairs_at(u)
    if len(pairs) == 2:
        return [tuple(sorted(set(pairs[0]) ^ set(pairs[1])))]
    fresh = max(state.labels(), default=-1) + 1
    x, y = pairs[0]
    others = sorted(state.labels() - {x, y}) + [fresh]
    return [tuple(sorted((keep, c))) for keep in (x, y) for c in others]


def _hexagons_covered(state):
    cfg = state.configuration
    closed = {normalize_cycle(f.vertices) for label in cfg.closed_labels() for f in cfg.fragments(label)}
    return all(h in closed for h in enumerate_cycles(state.graph, 6))


def acceptable(state, rules):
    """Whether state breaks no configuration rule under the given search rules."""
    if configuration_violations(state.configuration, girth=rules.g, distinct_pairs=rules.distinct_pairs):
        return False
    if rules.triangle_vertices and configuration_adjacency(state.configuration).stray_triangles():
        return False
    return not rules.hexagons_in_cover or _hexagons_covered(state)


def choose_vertex(state):
    """The active vertex to branch on: degree-2 vertices first (their next pair is forced), then lowest index."""
    active = state.active()
    return min(active, key=lambda v: (-state.degree(v), v)) if active else None


def edge_moves(state, u, rules, partners=None):
    """
    Children of state obtained by adding one labeled edge at u, to an existing active vertex first, then to a
    new vertex. Children that shorten the girth or break a configuration rule are dropped.
    :param partners: optional restriction of the partner vertices; 'new' stands for a new vertex
    """
    distances = state.graph.distances_from(u)
    candidates = []
    for w in state.active():
        if w == u or w in state.adjacency[u]:
            continue
        if distances.get(w, float('inf')) + 1 < rules.g:
            continue
        candidates.append(w)
    if rules.allow_new_vertices and state.n < rules.vertex_bound:
        candidates.append('new')
    if partners is not None:
        candidates = [w for w in candidates if w in partners]
    children = []
    for w in candidates:
        target = state.n if w == 'new' else w
        for pair in _candidate_pairs(state, u):
            if w != 'new' and local_violation(state.pairs_at(w) + [pair]) is not None:
                continue
            child = state.with_edge(u, target, pair)
            if acceptable(child, rules):
                children.append(child)
    return children


def successors(state, rules):
    u = choose_vertex(state)
    if u is None:
        return []
    children = []
    if rules.allow_freeze and state.degree(u) == 1 and len(state.frozen) < rules.max_frozen:
        children.append(state.with_frozen(u))
    return children + edge_moves(state, u, rules)


class ExpansionSearch:
    """
    Best-first search over expansion states ordered by vertex count, then the deficiency still to fill, then edge
    count, then discovery order.
    Isomorphic states (as labeled graphs with frozen marks) are visited once.
    """

    def __init__(self, rules, prune=None, budget=None):
        self.rules = rules
        self.prune = prune
        self.budget = budget if budget is not None else max_search_states
        self.popped = 0
        self.cut = 0

    def leaves(self, starts):
        """
        Yields every reachable state without active vertices, in search order.
        :param starts: iterable of ExpansionState
        """
        heap = []
        seen = set()
        counter = 0
        for state in starts:
            key = state.certificate()
            if key not in seen:
                seen.add(key)
                heapq.heappush(heap, (state.n, state.open_deficiency(), state.m, counter, state))
                counter += 1
        while heap:
            state = heapq.heappop(heap)[-1]
            self.popped += 1
            if self.popped > self.budget:
                raise SearchBoundExceededException(
                    f"expansion search at girth {self.rules.g} popped more than {self.budget} states")
            if self.prune is not None and self.prune(state):
                continue
            if not state.active():
                yield state
                continue
            if state.n >= self.rules.vertex_bound and choose_vertex(state) is not None:
                self.cut += 1
            for child in successors(state, self.rules):
                key = child.certificate()
                if key in seen:
                    continue
                seen.add(key)
                heapq.heappush(heap, (child.n, child.open_deficiency(), child.m, counter, child))
                counter += 1
        if self.cut:
            logging.info(f"girth {self.rules.g} search: {self.popped} states, {self.cut} reached the vertex bound "
                         f"{self.rules.vertex_bound}")


def path_extensions(state, a, b, length, rules):
    """
    States adding a path of the given length from a to b through new vertices, every edge labeled consistently.
    """
    frontier = [(state, a)]
    for step in range(length):
        last = step == length - 1
        nxt = []
        for current, u in frontier:
            partners = {b} if last else {'new'}
            for child in edge_moves(current, u, rules, partners=partners):
                nxt.append((child, b if last else child.n - 1))
        frontier = nxt
    return [s for s, _ in frontier]
