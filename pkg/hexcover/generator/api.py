import logging
from dataclasses import dataclass

from ..cdc.api import check_structure_theorems
from ..cdc.cover import verify_6cdc
from ..configuration.equivalence import configs_equivalent, iter_copies
from ..configuration.seeds import build_S
from ..graph.canonical import canonical_form
from ..graph.graph import girth
from ..graph.hamiltonian import is_hamiltonian_cycle
from ..resource import ResourceManager
from ..seedlab.api import reverse_substitute
from ..util import ReductionFailedException, SubstitutionException, apply_parallel
from .substitution import cdc_configuration, splice_hamiltonian, substitute_at, substitution_sites


@dataclass(frozen=True)
class GeneratedGraph:
    """
    A graph produced by substitution, with its 6-CDC and a Hamiltonian cycle. provenance starts with the base
    instance (entry name, base index) and lists the entry of every substitution after it.
    """
    graph: object
    cdc: object
    hamiltonian: tuple
    provenance: tuple
    certificate: bytes

    @property
    def n(self):
        return self.graph.n

    @property
    def key(self):
        return self.certificate, self.cdc.certificate()


@dataclass(frozen=True)
class Reduction:
    """Where reduce_to_base ended: the catalog entry and base instance reached, and the (entry, I_g copy) steps."""
    entry: str
    base: object
    trace: tuple


def _excludes_complete_cycles(entry):
    return entry.g == 6 and not entry.seed.has_complete_cycle


def _growth(entry, catalog):
    expansion = catalog.expansion_of(entry)
    return None if expansion is None else expansion.graph.n - build_S(entry.g).n


def base_graphs(catalog, g):
    """The base instances of girth g as GeneratedGraph start points, superseded ones included."""
    starts = []
    for entry in catalog.for_girth(g):
        for index, base in enumerate(entry.bases):
            starts.append(GeneratedGraph(base.graph, base.cdc, base.hamiltonian, ((entry.name, index),),
                                         canonical_form(base.graph).certificate))
    return starts


def substitution_options(host, catalog):
    """Every (entry, site) at which some I_g of the host's girth can replace an S_g copy."""
    host_cfg = cdc_configuration(host.cdc)
    options = []
    for entry in catalog.for_girth(girth(host.graph)):
        expansion = catalog.expansion_of(entry)
        if expansion is None:
            continue
        for site in substitution_sites(host_cfg, entry.seed, expansion, _excludes_complete_cycles(entry)):
            options.append((entry, site))
    return options


def substitute(host, site, entry, catalog, cache=None):
    """
    Replaces the S_g copy at site by I_g, carries the 6-CDC and the Hamiltonian cycle over, and checks both.
    :param host: GeneratedGraph
    :param site: Site from substitution_options
    :param entry: SeedCatalogEntry owning the site
    :param catalog: SeedCatalog, supplies I_g for degenerate entries
    :param cache: optional dict of path covers shared between calls
    :return: GeneratedGraph
    :raises SubstitutionException: when the new cover fails verification
    :raises HamiltonianSpliceException: when the cycle cannot be carried over
    """
    expansion = catalog.expansion_of(entry)
    replacement, cdc = substitute_at(cdc_configuration(host.cdc), site, expansion)
    report = verify_6cdc(replacement.graph, cdc)
    if not report.passed:
        raise SubstitutionException(f"substituting I_{entry.name} breaks {report.first_failure()}")
    cycle, _ = splice_hamiltonian(host.hamiltonian, replacement, cache, None if site.degenerate else entry.name)
    return GeneratedGraph(replacement.graph, cdc, cycle, host.provenance + (entry.name,),
                          canonical_form(replacement.graph).certificate)


def _expand(job):
    host, catalog, n_max = job
    g = girth(host.graph)
    children = []
    for entry, site in substitution_options(host, catalog):
        growth = _growth(entry, catalog)
        if growth is None or host.n + growth > n_max:
            continue
        child = substitute(host, site, entry, catalog, catalog.path_cover_cache())
        if girth(child.graph) != g:
            logging.debug(f"substitution of I_{entry.name} lowers the girth to {girth(child.graph)}; dropped")
            continue
        children.append(child)
    return children


def _order(node):
    return node.n, node.certificate, node.cdc.certificate()


def generate(g, n_max, catalog=None, jobs=1):
    """
    Breadth-first closure of the girth-g base instances under substitution, up to n_max vertices.

    Frontier nodes are (graph, 6-CDC) pairs merged by certificate; each level is expanded in a fixed order, so the
    output does not depend on jobs.
    :param g: girth 3..6
    :param n_max: largest vertex count generated
    :param catalog: SeedCatalog, the shared one of ResourceManager by default
    :param jobs: worker processes
    :return: list of GeneratedGraph, one per isomorphism class, ordered by vertex count then certificate
    """
    if n_max < 4:
        raise ValueError(f"n_max must be at least 4, got {n_max}")
    if catalog is None:
        catalog = ResourceManager().catalog
    frontier = sorted((s for s in base_graphs(catalog, g) if s.n <= n_max), key=_order)
    seen = set()
    outputs = {}
    covers = {}
    level = 0
    while frontier:
        fresh = []
        for node in frontier:
            if node.key in seen:
                continue
            seen.add(node.key)
            fresh.append(node)
            outputs.setdefault(node.certificate, node)
            covers.setdefault(node.certificate, {})[node.cdc.certificate()] = node.cdc
        logging.info(f"girth {g} level {level}: {len(fresh)} new (graph, cover) pairs, {len(outputs)} graphs")
        expanded = apply_parallel(_expand, [(node, catalog, n_max) for node in fresh], jobs)
        frontier = sorted((child for children in expanded for child in children if child.key not in seen),
                          key=_order)
        level += 1
    audit_multiplicity(g, outputs, covers, catalog)
    return sorted(outputs.values(), key=lambda node: (node.n, node.certificate))


def count_multiple_configurations(graph, cdcs, catalog):
    """
    Number of S_g copies in graph that, over the given 6-CDCs, carry more than one distinct configuration
    equivalent to a seed configuration.
    """
    g = girth(graph)
    s_graph = build_S(g)
    seeds = [e.seed.cfg for e in catalog.for_girth(g) if not e.degenerate]
    cfgs = [cdc_configuration(cdc) for cdc in cdcs]
    count = 0
    for embedding in iter_copies(s_graph, graph):
        distinct = set()
        for cfg in cfgs:
            pulled = cfg.pullback(s_graph, embedding)
            if any(configs_equivalent(seed, pulled) is not None for seed in seeds):
                distinct.add(pulled.renumbered().pairs)
        if len(distinct) > 1:
            count += 1
    return count


def audit_multiplicity(g, outputs, covers, catalog):
    """Logs every output graph reached with several 6-CDCs whose S_g copies carry more than one configuration."""
    findings = {}
    for certificate, by_cdc in covers.items():
        if len(by_cdc) < 2:
            continue
        count = count_multiple_configurations(outputs[certificate].graph, list(by_cdc.values()), catalog)
        if count:
            findings[certificate] = count
    for certificate, count in findings.items():
        log = logging.info if g == 6 else logging.warning
        log(f"girth {g}: a graph on {outputs[certificate].n} vertices has {count} S_g copies with more than one "
            f"configuration")
    return findings


def reduce_to_base(graph, cdc, catalog):
    """
    Replaces I_g copies by S_g while that keeps girth and cover intact, until no copy reduces; the graph reached
    must be a base instance of the catalog.
    :param graph: cubic Graph
    :param cdc: valid CDC of graph
    :param catalog: SeedCatalog
    :return: Reduction
    :raises ReductionFailedException: when the irreducible graph reached is not a base instance
    """
    g = girth(graph)
    cfg = cdc_configuration(cdc)
    trace = []
    while True:
        step = None
        for entry in catalog.for_girth(g):
            if entry.degenerate or entry.expansion is None:
                continue
            step = next(((site, replacement) for site, replacement, blocker
                         in reverse_substitute(cfg, entry.seed, entry.expansion) if blocker is None), None)
            if step is not None:
                trace.append((entry.name, step[0].embedding))
                cfg = step[1].cfg
                break
        if step is None:
            break
    certificate = canonical_form(cfg.graph).certificate
    for entry, base in catalog.bases(g):
        if canonical_form(base.graph).certificate == certificate:
            return Reduction(entry.name, base, tuple(trace))
    raise ReductionFailedException(f"reduction of a {graph.n}-vertex girth-{g} graph stops at {cfg.graph.n} "
                                   f"vertices, which is no base instance")


def verify_generated(node):
    """
    Soundness of one generated graph: its cover passes every lemma, the structure theorems hold for it and the
    stored Hamiltonian cycle is one.
    """
    if not verify_6cdc(node.graph, node.cdc).passed:
        return False
    if not check_structure_theorems(node.graph, node.cdc).passed:
        return False
    return is_hamiltonian_cycle(node.graph, node.hamiltonian)
