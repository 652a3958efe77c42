from dataclasses import dataclass, field

from ..cdc.cover import CDC, CYCLE_LENGTH
from ..configuration.configuration import CycleConfiguration
from ..configuration.equivalence import configs_equivalent, iter_copies
from ..configuration.seeds import build_S
from ..graph.embedding import embedded_edge_set
from ..graph.graph import build_graph, edge_key, enumerate_cycles, girth, normalize_cycle
from ..graph.hamiltonian import find_path_cover, is_hamiltonian_cycle, least_hamiltonian_cycle
from ..util import GraphConstructionException, HamiltonianSpliceException, SubstitutionException

FULL = 3


@dataclass(frozen=True)
class Site:
    """
    A copy of a pattern inside a host. embedding maps every pattern vertex to a host vertex; correspondence
    matches the replacement's boundary and through-labels to the copy's.
    """
    name: str
    embedding: tuple
    correspondence: object
    degenerate: bool = False


@dataclass(frozen=True)
class Replacement:
    """
    Outcome of replacing a copy: the new configuration, where kept host vertices and replacement vertices went,
    and which host edges disappeared.
    """
    cfg: CycleConfiguration
    host_map: dict
    pattern_map: dict
    removed_edges: frozenset
    pattern_edges: tuple = field(default=())

    @property
    def graph(self):
        return self.cfg.graph


def cdc_configuration(cdc):
    """The configuration of a full 6-CDC: every edge carries the indices of its two cycles."""
    return CycleConfiguration.from_mapping(cdc.graph, cdc.edge_cover())


def configuration_cdc(cfg):
    """
    Reads a 6-CDC off a configuration of a cubic graph.
    :raises SubstitutionException: when a label is not a single closed 6-cycle
    """
    cycles = []
    for label in cfg.labels():
        frags = cfg.fragments(label)
        if len(frags) != 1 or not frags[0].closed or frags[0].length != CYCLE_LENGTH:
            raise SubstitutionException(f"label {label} does not form a single {CYCLE_LENGTH}-cycle: "
                                        f"{[f.vertices for f in frags]}")
        cycles.append(frags[0].vertices)
    return CDC.from_cycles(cfg.graph, cycles)


def replace_copy(host_cfg, pattern, embedding, replacement_cfg, correspondence):
    """
    Removes the copy of pattern at embedding from the host and glues the replacement graph in its place.

    Host vertices that are full in the pattern disappear with every copy edge; boundary images stay and absorb the
    replacement vertices matched to them. Host edges outside the copy keep their labels, replacement through-labels
    take the host labels the correspondence names, and other replacement labels get fresh numbers.
    :param host_cfg: CycleConfiguration of the host
    :param pattern: Graph whose copy is removed
    :param embedding: tuple mapping pattern vertices to host vertices, injective on full vertices
    :param replacement_cfg: CycleConfiguration of the graph glued in
    :param correspondence: BoundaryCorrespondence from replacement_cfg to the copy's pulled back configuration
    :return: Replacement
    """
    host = host_cfg.graph
    removed_edges = embedded_edge_set(pattern, embedding)
    removed = {embedding[x] for x in range(pattern.n) if pattern.degree(x) == FULL}
    for v in removed:
        outside = [w for w in host.neighbors(v) if edge_key(v, w) not in removed_edges]
        if outside:
            raise SubstitutionException(f"host vertex {v} is interior to the copy but has outside neighbors {outside}")
    kept = [v for v in range(host.n) if v not in removed]
    host_map = {v: i for i, v in enumerate(kept)}

    glue = {y: host_map[embedding[group[0]]] for y, group in correspondence.groups}
    pattern_map = {}
    next_vertex = len(kept)
    for y in range(replacement_cfg.graph.n):
        if y in glue:
            pattern_map[y] = glue[y]
        else:
            pattern_map[y] = next_vertex
            next_vertex += 1

    fresh = max(host_cfg.labels(), default=-1) + 1
    label_of = dict(correspondence.label_map)
    for label in replacement_cfg.labels():
        if label not in label_of:
            label_of[label] = fresh
            fresh += 1

    mapping = {}
    for (u, v), pair in host_cfg.mapping().items():
        if (u, v) not in removed_edges:
            mapping[edge_key(host_map[u], host_map[v])] = pair
    pattern_edges = []
    for (u, v), pair in replacement_cfg.mapping().items():
        key = edge_key(pattern_map[u], pattern_map[v])
        if key in mapping or key[0] == key[1]:
            raise SubstitutionException(f"gluing creates a repeated edge or loop at {key}")
        mapping[key] = tuple(sorted(label_of[a] for a in pair))
        pattern_edges.append(key)
    try:
        graph = build_graph(next_vertex, list(mapping))
    except GraphConstructionException as e:
        raise SubstitutionException(f"gluing breaks the graph: {e}")
    cfg = CycleConfiguration.from_mapping(graph, mapping).renumbered()
    return Replacement(cfg, host_map, pattern_map, removed_edges, tuple(sorted(pattern_edges)))


def substitution_sites(host_cfg, seed, i_cfg, exclude_complete_cycles=False):
    """
    Copies of a seed (S_g, or its pendant identification for a degenerate seed) in the host whose configuration is
    equivalent to i_cfg.
    :param host_cfg: CycleConfiguration of a cubic host with a 6-CDC
    :param seed: SeedConfiguration
    :param i_cfg: CycleConfiguration of the self-similar expansion that replaces the copy
    :param exclude_complete_cycles: skip copies holding a complete cycle of the cover
    :return: list of Site with embeddings of S_g (through the identification for degenerate seeds)
    """
    s_graph = build_S(seed.g)
    quotient = seed.variant.quotient
    sites = []
    for embedding in iter_copies(seed.variant.graph, host_cfg.graph):
        if exclude_complete_cycles and host_cfg.pullback(seed.variant.graph, embedding).has_closed_label():
            continue
        lifted = tuple(embedding[quotient[v]] for v in range(s_graph.n))
        pulled = host_cfg.pullback(s_graph, lifted)
        correspondence = configs_equivalent(i_cfg, pulled, merge_labels=seed.degenerate)
        if correspondence is not None:
            sites.append(Site(seed.name, lifted, correspondence, seed.degenerate))
    return sites


def substitute_at(host_cfg, site, i_cfg):
    """
    Replaces the S_g copy of a site by I_g.
    :return: (Replacement, CDC of the new cubic graph)
    """
    g = len(site.embedding) // 2
    replacement = replace_copy(host_cfg, build_S(g), site.embedding, i_cfg, site.correspondence)
    if not replacement.graph.is_cubic():
        raise SubstitutionException(f"substitution at {site.name} leaves degrees {sorted(set(replacement.graph.degrees()))}")
    return replacement, configuration_cdc(replacement.cfg)


def reverse_sites(host_cfg, seed, i_cfg):
    """
    Copies of I_g in the host carrying a configuration equivalent to I_g's, each matched to S_g.
    :return: list of Site with embeddings of I_g
    """
    sites = []
    for embedding in iter_copies(i_cfg.graph, host_cfg.graph):
        pulled = host_cfg.pullback(i_cfg.graph, embedding)
        if configs_equivalent(i_cfg, pulled) is None:
            continue
        correspondence = configs_equivalent(seed.cfg, pulled)
        if correspondence is not None:
            sites.append(Site(seed.name, tuple(embedding), correspondence))
    return sites


def reverse_at(host_cfg, site, seed, i_cfg):
    """Replaces the I_g copy of a site by S_g. The result may break girth or the cover; see reduction_blocker."""
    return replace_copy(host_cfg, i_cfg.graph, site.embedding, seed.cfg, site.correspondence)


def reduction_blocker(cfg, g):
    """
    Why a reversed substitution does not give a smaller graph of the same kind: 'girth' when the girth drops,
    'hexagon' when a 6-cycle is not a cycle of the cover, 'cover' when the labels are no 6-CDC, else None.
    """
    if girth(cfg.graph) < g:
        return 'girth'
    try:
        cdc = configuration_cdc(cfg)
    except SubstitutionException:
        return 'cover'
    if g == CYCLE_LENGTH and set(enumerate_cycles(cfg.graph, CYCLE_LENGTH)) - cdc.cycle_set():
        return 'hexagon'
    return None


def cycle_stretches(cycle, edges, inside=False):
    """
    Maximal stretches of a cycle over edges outside (or, with inside, within) an edge set, each a vertex list, in
    cycle order.
    """
    k = len(cycle)
    kept = [(edge_key(cycle[i], cycle[(i + 1) % k]) in edges) == inside for i in range(k)]
    start = next((i for i in range(k) if kept[i] and not kept[i - 1]), None)
    if start is None:
        return []
    runs = []
    current = None
    for step in range(k):
        i = (start + step) % k
        if kept[i]:
            if current is None:
                current = [cycle[i]]
            current.append(cycle[(i + 1) % k])
        elif current is not None:
            runs.append(current)
            current = None
    if current is not None:
        runs.append(current)
    return runs


def path_cover_key(cache_key, paths, order):
    """
    The splice cache key under which a path cover of a glued graph on order vertices is filed: its endpoint pairs
    in order and the vertices no path visits.
    """
    on_paths = {v for path in paths for v in path}
    return cache_key, tuple((path[0], path[-1]) for path in paths), frozenset(range(order)) - on_paths


def splice_hamiltonian(host_cycle, replacement, cache=None, cache_key=None):
    """
    Carries a Hamiltonian cycle of the host over a substitution: the stretches outside the copy stay, and the gaps
    between them are filled by vertex-disjoint paths through the glued graph covering all its unvisited vertices.

    When the host cycle never leaves the copy, the copy was the whole host and the new graph's least Hamiltonian
    cycle is taken instead, with an empty path cover.
    :param host_cycle: Hamiltonian cycle of the host as a vertex sequence
    :param replacement: Replacement of that host
    :param cache: optional dict remembering path covers per crossing pattern
    :param cache_key: identifies the glued graph in the cache
    :return: (normalized Hamiltonian cycle of the new graph, path cover in glued-graph local vertices)
    :raises HamiltonianSpliceException: when no path cover fills the gaps
    """
    runs = [[replacement.host_map[v] for v in run] for run in cycle_stretches(host_cycle, replacement.removed_edges)]
    if not runs:
        cycle = least_hamiltonian_cycle(replacement.graph)
        if cycle is None:
            raise HamiltonianSpliceException(f"the host cycle stays inside the copy and the new graph on "
                                             f"{replacement.graph.n} vertices has no Hamiltonian cycle")
        return cycle, []
    preimage = {}
    for y, v in sorted(replacement.pattern_map.items()):
        preimage.setdefault(v, y)
    local_order = sorted(preimage, key=lambda v: preimage[v])
    local = {v: i for i, v in enumerate(local_order)}
    glued = build_graph(len(local_order), [(local[u], local[v]) for u, v in replacement.pattern_edges])

    pairs = [(local[runs[i][-1]], local[runs[(i + 1) % len(runs)][0]]) for i in range(len(runs))]
    skip = frozenset(local[v] for run in runs for v in run[1:-1] if v in local)
    key = (cache_key, tuple(pairs), skip)
    if cache is not None and cache_key is not None and key in cache:
        paths = cache[key]
    else:
        paths = find_path_cover(glued, pairs, skip)
        if cache is not None and cache_key is not None:
            cache[key] = paths
    if paths is None:
        raise HamiltonianSpliceException(f"no path cover of the glued graph joins {pairs} avoiding {sorted(skip)}")

    cycle = []
    for run, path in zip(runs, paths):
        cycle.extend(run)
        cycle.extend(local_order[v] for v in path[1:-1])
    if not is_hamiltonian_cycle(replacement.graph, cycle):
        raise HamiltonianSpliceException(f"spliced walk {cycle} is not a Hamiltonian cycle")
    return normalize_cycle(cycle), paths
