import logging
from dataclasses import dataclass
from itertools import combinations

import tqdm

from ..config import max_cubic_order
from ..graph.canonical import canonical_form, canonical_labeling
from ..graph.graph import build_graph, edge_key
from ..graph.graph6 import decode_graph6, graph6_text
from ..util import create_even_order, Graph6FormatException

KNOWN_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509, 16: 4060}

EDGES = 'edges'
PAIRING = 'pairing'
STRATEGIES = [EDGES, PAIRING]

even_order = create_even_order(4)


@dataclass(frozen=True)
class Corpus:
    """The connected cubic graphs on n vertices, one per isomorphism class, sorted by canonical certificate."""
    n: int
    graphs: tuple
    certificates: tuple

    def __len__(self):
        return len(self.graphs)

    def to_text(self):
        return ''.join(graph6_text(g) + '\n' for g in self.graphs)


def _corpus(n, graphs):
    """Canonical copies of graphs, deduplicated and sorted by certificate."""
    by_certificate = {}
    for graph in graphs:
        form = canonical_form(graph)
        if form.certificate not in by_certificate:
            by_certificate[form.certificate] = graph.relabel(form.permutation)
    keys = sorted(by_certificate)
    return Corpus(n, tuple(by_certificate[k] for k in keys), tuple(keys))


def _complete_vertex(n, edges, degree, u):
    """Every way to give u its missing edges: to deficient vertices other than u, or to one new vertex each."""
    missing = 3 - degree[u]
    used = len(degree)
    neighbors = {w for e in edges for w in e if u in e and w != u}
    existing = [w for w in range(used) if w != u and degree[w] < 3 and w not in neighbors]
    room = n - used
    for fresh in range(min(missing, room) + 1):
        for chosen in combinations(existing, missing - fresh):
            new_edges = list(edges) + [edge_key(u, w) for w in chosen]
            new_edges += [(u, used + i) for i in range(fresh)]
            new_degree = list(degree) + [0] * fresh
            new_degree[u] = 3
            for w in chosen:
                new_degree[w] += 1
            for i in range(fresh):
                new_degree[used + i] = 1
            yield new_edges, new_degree


def _partial_certificate(edges, degree):
    adjacency = [[] for _ in degree]
    for u, v in edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    return canonical_labeling(len(degree), adjacency, [d == 3 for d in degree]).certificate


def _by_completion(n):
    """
    Grows connected partial graphs one completed vertex at a time, always completing the lowest deficient vertex.
    Partial graphs are merged when isomorphic with their completed vertices marked, since those have the same
    completions.
    """
    level = {b'': ([], [0])}
    found = []
    depth = 0
    while level:
        following = {}
        for edges, degree in tqdm.tqdm(level.values(), desc=f"n={n} step {depth}", leave=False, disable=None):
            u = next((v for v in range(len(degree)) if degree[v] < 3), None)
            if u is None:
                if len(degree) == n:
                    found.append(build_graph(n, edges))
                continue
            for new_edges, new_degree in _complete_vertex(n, edges, degree, u):
                following.setdefault(_partial_certificate(new_edges, new_degree), (new_edges, new_degree))
        level = following
        depth += 1
    return found


def _by_pairing(n):
    """
    Pairs the three stubs of every vertex in order, joining the smallest open stub to a later vertex or to the
    first unused one. Unused vertices are interchangeable and the stubs of one vertex are filled in increasing
    neighbor order, which keeps the labeled search small; isomorphic results are merged afterwards.
    """
    degree = [0] * n
    adjacency = [set() for _ in range(n)]
    found = []
    state = {'used': 1}

    def search():
        u = next((v for v in range(state['used']) if degree[v] < 3), None)
        if u is None:
            if state['used'] == n:
                found.append(build_graph(n, [(a, b) for a in range(n) for b in adjacency[a] if a < b]))
            return
        last = max((w for w in adjacency[u] if w > u), default=u)
        candidates = [w for w in range(last + 1, state['used']) if degree[w] < 3 and w not in adjacency[u]]
        if state['used'] < n:
            candidates.append(state['used'])
        for w in candidates:
            fresh = w == state['used']
            if fresh:
                state['used'] += 1
            adjacency[u].add(w)
            adjacency[w].add(u)
            degree[u] += 1
            degree[w] += 1
            search()
            degree[u] -= 1
            degree[w] -= 1
            adjacency[u].discard(w)
            adjacency[w].discard(u)
            if fresh:
                state['used'] -= 1

    search()
    return found


@even_order
def enumerate_cubic(n, strategy=EDGES):
    """
    All connected cubic graphs on n vertices up to isomorphism.
    :param n: even vertex count, 4..max_cubic_order
    :param strategy: 'edges' (edge insertion one vertex at a time, isomorph rejection of partial graphs) or
        'pairing' (stub pairing, isomorph rejection of the results only)
    :return: Corpus
    """
    if n > max_cubic_order:
        raise ValueError(f"enumeration is limited to {max_cubic_order} vertices, got {n}")
    if strategy not in STRATEGIES:
        raise ValueError(f"strategy must be one of {STRATEGIES}, got {strategy!r}")
    graphs = _by_completion(n) if strategy == EDGES else _by_pairing(n)
    corpus = _corpus(n, graphs)
    logging.info(f"{strategy}: {len(corpus)} connected cubic graphs on {n} vertices from {len(graphs)} candidates")
    expected = KNOWN_COUNTS.get(n)
    if expected is not None and expected != len(corpus):
        logging.warning(f"{strategy} found {len(corpus)} cubic graphs on {n} vertices, expected {expected}")
    return corpus


def load_corpus(n, text):
    """
    Reads a corpus cache written by Corpus.to_text, checking the graph count, cubicity and certificate order.
    :raises Graph6FormatException: when the cache does not hold a valid corpus
    """
    graphs = [decode_graph6(line) for line in text.splitlines() if line.strip()]
    if any(g.n != n or not g.is_cubic() for g in graphs):
        raise Graph6FormatException(f"corpus cache for n={n} holds a graph of another order or degree")
    certificates = tuple(canonical_form(g).certificate for g in graphs)
    if list(certificates) != sorted(set(certificates)):
        raise Graph6FormatException(f"corpus cache for n={n} is not sorted by certificate or repeats a graph")
    expected = KNOWN_COUNTS.get(n)
    if expected is not None and len(graphs) != expected:
        raise Graph6FormatException(f"corpus cache for n={n} holds {len(graphs)} graphs, expected {expected}")
    return Corpus(n, tuple(graphs), certificates)
