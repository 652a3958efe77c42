import logging
from dataclasses import dataclass
from itertools import combinations

from ..graph.graph import build_graph, girth as graph_girth
from .configuration import CycleConfiguration, configuration_violations, local_violation
from .equivalence import configs_equivalent

MIN_GIRTH = 3
MAX_GIRTH = 6


def _check_girth(g):
    if not MIN_GIRTH <= g <= MAX_GIRTH:
        raise ValueError(f"a cubic graph with a 6-CDC has girth between {MIN_GIRTH} and {MAX_GIRTH}, got {g}")


def build_S(g):
    """
    S_g: cycle c_0..c_{g-1} on vertices 0..g-1 plus pendant p_i = g+i attached to c_i.
    """
    _check_girth(g)
    edges = [(i, (i + 1) % g) for i in range(g)] + [(i, g + i) for i in range(g)]
    return build_graph(2 * g, edges)


@dataclass(frozen=True)
class SeedVariant:
    """
    S_g with some pendants identified. quotient[v] is the variant vertex of S_g vertex v; identity for S_g.
    """
    graph: object
    quotient: tuple

    @property
    def degenerate(self):
        return len(set(self.quotient)) < len(self.quotient)


def _pendant_partitions(items, max_block):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for size in range(min(max_block, len(items))):
        for others in combinations(rest, size):
            remaining = [x for x in rest if x not in others]
            for tail in _pendant_partitions(remaining, max_block):
                yield [(first,) + others] + tail


def seed_variants(g):
    """
    S_g followed by every identification of its pendants that keeps girth g and degrees at most 3.
    """
    _check_girth(g)
    s_graph = build_S(g)
    variants = [SeedVariant(s_graph, tuple(range(2 * g)))]
    for blocks in _pendant_partitions(list(range(g)), 3):
        if all(len(b) == 1 for b in blocks):
            continue
        if any(2 + min(abs(i - j), g - abs(i - j)) < g for b in blocks for i, j in combinations(b, 2)):
            continue
        quotient = list(range(g)) + [None] * g
        for index, block in enumerate(blocks):
            for i in block:
                quotient[g + i] = g + index
        edges = {(min(quotient[u], quotient[v]), max(quotient[u], quotient[v])) for u, v in s_graph.edges()}
        graph = build_graph(g + len(blocks), sorted(edges))
        if graph_girth(graph) < g:
            continue
        variants.append(SeedVariant(graph, tuple(quotient)))
    return variants


def _edge_order(graph):
    """Edges grouped by their smaller endpoint so vertices complete early."""
    order = []
    seen = set()
    for v in range(graph.n):
        for w in graph.neighbors(v):
            e = (min(v, w), max(v, w))
            if e not in seen:
                seen.add(e)
                order.append(e)
    return order


def enumerate_configurations(graph, g):
    """
    Every configuration of graph that breaks no rule of configuration_violations at girth g, up to
    automorphisms of graph composed with label bijections.
    :return: list of CycleConfiguration with labels numbered by first appearance
    """
    edges = _edge_order(graph)
    assignment = {}
    at_vertex = {v: [] for v in range(graph.n)}
    found = {}

    def extend(index, label_count):
        if index == len(edges):
            cfg = CycleConfiguration.from_mapping(graph, assignment).renumbered()
            if not configuration_violations(cfg, girth=g):
                found.setdefault(cfg.certificate(), cfg)
            return
        u, v = edges[index]
        labels = range(label_count + 2)
        for a, b in combinations(labels, 2):
            if b > label_count + (a == label_count):
                continue
            pair = (a, b)
            at_vertex[u].append(pair)
            at_vertex[v].append(pair)
            if local_violation(at_vertex[u]) is None and local_violation(at_vertex[v]) is None:
                assignment[(u, v)] = pair
                extend(index + 1, max(label_count, b + 1))
                del assignment[(u, v)]
            at_vertex[u].pop()
            at_vertex[v].pop()

    extend(0, 0)
    return [found[key] for key in sorted(found)]


@dataclass(frozen=True)
class SeedConfiguration:
    """
    A configuration of S_g or of one of its pendant identifications. name is e.g. '4b', or "4b'" for the
    degenerate configuration whose parent is 4b.
    """
    g: int
    name: str
    cfg: CycleConfiguration
    variant: SeedVariant

    @property
    def degenerate(self):
        return self.variant.degenerate

    @property
    def has_complete_cycle(self):
        return self.cfg.has_closed_label()


# Letters fixed by the known small cases, keyed by fragment lengths in decreasing order. The other configurations of
# a girth take the remaining letters in _order_key order.
KNOWN_LETTERS = {
    4: {(5, 5, 3, 3): 'b'},
    5: {(5, 5, 4, 3, 3): 'a', (5, 4, 4, 4, 3): 'b', (4, 4, 4, 4, 4): 'c'},
    6: {(5, 5, 4, 4, 3, 3): 'b'},
}


def fragment_profile(cfg):
    return tuple(sorted((f.length for frags in cfg.all_fragments().values() for f in frags), reverse=True))


def _order_key(cfg):
    lengths = fragment_profile(cfg)
    return (cfg.has_closed_label(), len(set(lengths)), lengths, cfg.certificate())


def _letters(g, plain):
    known = dict(KNOWN_LETTERS.get(g, {}))
    letters = [known.pop(fragment_profile(cfg), None) for cfg in plain]
    taken = set(letters)
    free = iter(c for c in (chr(ord('a') + i) for i in range(len(plain) + len(known))) if c not in taken)
    return [letter or next(free) for letter in letters]


def enumerate_seed_configs(g):
    """
    The configurations of S_g up to symmetry, named '{g}a', '{g}b', ... after the known small cases where those fix
    the letter, followed by the configurations of pendant identifications of S_g, each named after the S_g
    configuration it degenerates.
    :param g: girth 3..6
    :return: list of SeedConfiguration
    """
    variants = seed_variants(g)
    plain = sorted(enumerate_configurations(variants[0].graph, g), key=_order_key)
    seeds = sorted((SeedConfiguration(g, f"{g}{letter}", cfg, variants[0])
                    for letter, cfg in zip(_letters(g, plain), plain)), key=lambda s: s.name)
    degenerate = []
    seen = set()
    for variant in variants[1:]:
        for cfg in enumerate_configurations(variant.graph, g):
            if cfg.certificate() in seen:
                continue
            seen.add(cfg.certificate())
            lifted = cfg.pullback(variants[0].graph, variant.quotient)
            parents = [s for s in seeds if configs_equivalent(s.cfg, lifted, merge_labels=True) is not None]
            name = f"{parents[0].name}'" if parents else f"{g}?{len(degenerate)}"
            degenerate.append(SeedConfiguration(g, name, cfg, variant))
    if degenerate:
        logging.info(f"girth {g}: degenerate seed configurations {[s.name for s in degenerate]}")
    return seeds + degenerate
