import logging
from itertools import combinations

import networkx as nx

from ..cdc.api import check_structure_theorems
from ..cdc.cover import verify_6cdc
from ..circulant.families import mobius_ladder, torus_2layer
from ..config import search_bound_factor
from ..configuration.configuration import deficiency, repeated_pairs
from ..configuration.equivalence import configs_equivalent, is_self_similar, iter_copies
from ..configuration.seeds import build_S, enumerate_seed_configs
from ..generator.substitution import (cdc_configuration, configuration_cdc, cycle_stretches, reduction_blocker,
                                      reverse_at, reverse_sites, splice_hamiltonian, substitute_at,
                                      substitution_sites)
from ..graph.canonical import canonical_form, is_isomorphic
from ..graph.embedding import embedded_edge_set
from ..graph.graph import Graph, enumerate_cycles, girth
from ..graph.hamiltonian import least_hamiltonian_cycle
from ..util import (AnchorMismatchException, HamiltonianSpliceException, SearchBoundExceededException,
                    SubstitutionException, apply_parallel)
from .catalog import BaseInstance, SeedCatalog, SeedCatalogEntry, TYPE_I, TYPE_II, TYPE_III
from .expansion import ExpansionRules, ExpansionSearch, ExpansionState, path_extensions

EXPECTED_CONFIG_COUNTS = {3: (1, 0), 4: (3, 1), 5: (3, 0), 6: (5, 0)}


def _vertex_bound(seed, vertex_bound):
    return vertex_bound if vertex_bound is not None else search_bound_factor * build_S(seed.g).n


def _excludes_complete_cycles(seed):
    return seed.g == 6 and not seed.has_complete_cycle


def _hexagon_rule(seed):
    return seed.g == 6 and seed.has_complete_cycle


def _pair_rule(seed):
    """
    Distinct label pairs hold in every cubic graph of girth at least 5 with a 6-CDC, so they prune the expansion
    unless the seed itself repeats a pair and therefore never sits in such a graph.
    """
    return seed.g >= 5 and not repeated_pairs(seed.cfg)


def derive_I(seed, vertex_bound=None, budget=None):
    """
    Searches the smallest proper supergraph of the seed that keeps girth g, has g boundary vertices of degree 1
    and is self-similar to the seed configuration.
    :param seed: non-degenerate SeedConfiguration
    :param vertex_bound: largest vertex count explored, search_bound_factor * |V(S_g)| by default
    :param budget: largest number of search states, config.max_search_states by default
    :return: CycleConfiguration of I_g, or None when the search space is exhausted
    :raises SearchBoundExceededException: when the search ran out of budget, or hit the vertex bound without an answer
    """
    if seed.degenerate:
        return None
    g = seed.g
    rules = ExpansionRules(g, _vertex_bound(seed, vertex_bound), allow_freeze=True, max_frozen=g,
                           hexagons_in_cover=_hexagon_rule(seed), distinct_pairs=_pair_rule(seed),
                           triangle_vertices=_hexagon_rule(seed))
    search = ExpansionSearch(rules, budget=budget)
    for leaf in search.leaves([ExpansionState.from_configuration(seed.cfg)]):
        if len(leaf.frozen) != g or leaf.n <= seed.cfg.graph.n:
            continue
        candidate = leaf.configuration.renumbered()
        if is_self_similar(candidate, seed.cfg, _excludes_complete_cycles(seed)):
            logging.info(f"I_{seed.name}: {candidate.graph.n} vertices, {candidate.graph.m} edges "
                         f"after {search.popped} states")
            return candidate
    if search.cut:
        raise SearchBoundExceededException(
            f"no I_{seed.name} within {rules.vertex_bound} vertices; {search.cut} states reached the bound")
    logging.info(f"I_{seed.name}: none, search exhausted after {search.popped} states")
    return None


def reverse_substitute(host_cfg, seed, i_cfg):
    """
    Replaces, one at a time, every I_g copy of the host carrying an equivalent configuration by S_g.
    :return: list of (Site, Replacement or None, blocker) where blocker is None for a valid smaller graph, or
        'girth', 'hexagon', 'cover' naming what the replacement breaks
    """
    outcomes = []
    for site in reverse_sites(host_cfg, seed, i_cfg):
        try:
            replacement = reverse_at(host_cfg, site, seed, i_cfg)
        except SubstitutionException:
            outcomes.append((site, None, 'cover'))
            continue
        outcomes.append((site, replacement, reduction_blocker(replacement.cfg, seed.g)))
    return outcomes


def classify_base(cfg, seed, i_cfg):
    """
    Type of a cubic configuration as a base instance of the seed, or None when some I_g copy reduces it.
    """
    if i_cfg is None:
        return TYPE_I
    outcomes = reverse_substitute(cfg, seed, i_cfg)
    if not outcomes:
        return TYPE_I
    blockers = [blocker for _, _, blocker in outcomes]
    if any(blocker is None for blocker in blockers):
        return None
    covered = set(enumerate_cycles(cfg.graph, 6)) <= configuration_cdc(cfg).cycle_set()
    if 'hexagon' in blockers and covered:
        return TYPE_III
    return TYPE_II


def _contains_expansion(state, i_cfg):
    if state.n < i_cfg.graph.n:
        return False
    return any(configs_equivalent(i_cfg, state.configuration.pullback(i_cfg.graph, embedding)) is not None
               for embedding in iter_copies(i_cfg.graph, state.graph))


def _outer_path_starts(seed, i_cfg, rules):
    """
    I_g plus one outside path between two boundary vertices whose seed counterparts lie so close that the path
    would close a cycle shorter than g (or a 6-cycle, for the complete-cycle seed) once S_g is put back.
    """
    g = seed.g
    correspondence = configs_equivalent(seed.cfg, i_cfg)
    if correspondence is None:
        return []
    boundary = correspondence.vertex_map()
    start = ExpansionState.from_configuration(i_cfg)
    starts = []
    for (pa, ua), (pb, ub) in combinations(sorted(boundary.items()), 2):
        seed_distance = seed.cfg.graph.distances_from(pa)[pb]
        lengths = [6 - seed_distance] if _hexagon_rule(seed) else range(1, g - seed_distance)
        inner_distance = i_cfg.graph.distances_from(ua).get(ub, float('inf'))
        for length in lengths:
            if length < 1 or length + inner_distance < g:
                continue
            starts.extend(path_extensions(start, ua, ub, length, rules))
    return starts


def _base_instance(leaf, kind):
    cdc = configuration_cdc(leaf.configuration)
    return BaseInstance(leaf.graph, cdc, kind)


def derive_B(seed, i_cfg, vertex_bound=None, budget=None):
    """
    Completes the seed configuration to cubic graphs with a 6-CDC and keeps those no I_g copy reduces.

    Type (i) instances come from expanding S_g while pruning every state that already holds an I_g copy with an
    equivalent configuration. Types (ii) and (iii) come from expanding I_g after an outside path that only fails
    on S_g: for girth at least 5, a path closing a short cycle through S_g; for the complete-cycle seed, a path
    closing a 6-cycle through S_g, with every complete 6-cycle kept inside the cover.
    :param seed: SeedConfiguration
    :param i_cfg: CycleConfiguration of I_g, or None
    :return: list of BaseInstance without Hamiltonian data, one per isomorphism class of graph
    """
    g = seed.g
    bound = _vertex_bound(seed, vertex_bound)
    found = {}

    def keep(leaf, kind):
        certificate = canonical_form(leaf.graph).certificate
        if certificate not in found:
            found[certificate] = _base_instance(leaf, kind)
            logging.info(f"B_{seed.name}: type ({kind}) instance on {leaf.n} vertices")

    if seed.degenerate:
        rules = ExpansionRules(g, bound, allow_new_vertices=False)
        for leaf in ExpansionSearch(rules, budget=budget).leaves([ExpansionState.from_configuration(seed.cfg)]):
            keep(leaf, TYPE_I)
        return list(found.values())

    if not _hexagon_rule(seed):
        rules = ExpansionRules(g, bound, distinct_pairs=g >= 5)
        prune = None if i_cfg is None else (lambda state: _contains_expansion(state, i_cfg))
        search = ExpansionSearch(rules, prune=prune, budget=budget)
        for leaf in search.leaves([ExpansionState.from_configuration(seed.cfg)]):
            if classify_base(leaf.configuration, seed, i_cfg) == TYPE_I:
                keep(leaf, TYPE_I)

    if i_cfg is not None and (g >= 5 or _hexagon_rule(seed)):
        rules = ExpansionRules(g, max(bound, i_cfg.graph.n + 2 * g), hexagons_in_cover=_hexagon_rule(seed),
                               distinct_pairs=g >= 5, triangle_vertices=_hexagon_rule(seed))
        starts = _outer_path_starts(seed, i_cfg, rules)
        wanted = TYPE_III if _hexagon_rule(seed) else TYPE_II
        for leaf in ExpansionSearch(rules, budget=budget).leaves(starts):
            if classify_base(leaf.configuration, seed, i_cfg) == wanted:
                keep(leaf, wanted)
    return sorted(found.values(), key=lambda b: (b.graph.n, canonical_form(b.graph).certificate))


def derive_ham_data(entry, i_cfg):
    """
    Stores in every base instance of the entry its least Hamiltonian cycle, the paths that cycle leaves inside the
    first S_g copy usable for substitution, and the path cover of I_g that takes their place.
    :raises HamiltonianSpliceException: when a base has no Hamiltonian cycle or no path cover fits
    """
    s_graph = build_S(entry.g)
    for base in entry.bases:
        cycle = least_hamiltonian_cycle(base.graph)
        if cycle is None:
            raise HamiltonianSpliceException(f"base instance of {entry.name} on {base.graph.n} vertices has no "
                                             f"Hamiltonian cycle")
        base.hamiltonian = cycle
        if i_cfg is None:
            continue
        host_cfg = cdc_configuration(base.cdc)
        sites = substitution_sites(host_cfg, entry.seed, i_cfg, _excludes_complete_cycles(entry.seed))
        if not sites:
            continue
        site = sites[0]
        base.trace = tuple(tuple(p) for p in
                           cycle_stretches(cycle, embedded_edge_set(s_graph, site.embedding), inside=True))
        replacement, _ = substitute_at(host_cfg, site, i_cfg)
        _, paths = splice_hamiltonian(cycle, replacement)
        base.paths = tuple(paths)
    return entry


def _mark_superseded(entries, lookup):
    """A base of a parent entry that its degenerate child produces by one substitution is superseded by the child."""
    for entry in entries:
        if not entry.degenerate or entry.parent is None:
            continue
        parent = lookup[entry.parent]
        for base in entry.bases:
            host_cfg = cdc_configuration(base.cdc)
            for site in substitution_sites(host_cfg, entry.seed, parent.expansion):
                replacement, _ = substitute_at(host_cfg, site, parent.expansion)
                for candidate in parent.bases:
                    if candidate.superseded_by is None and is_isomorphic(candidate.graph, replacement.graph):
                        candidate.superseded_by = entry.name
                break


def _derive_expansion(seed):
    return derive_I(seed)


def _derive_bases(job):
    seed, i_cfg = job
    return derive_B(seed, i_cfg)


def build_catalog(girths=(3, 4, 5, 6), check_anchors=True, jobs=1):
    """
    Derives, for every seed configuration of every girth, I_g, the base instances and their Hamiltonian data, then
    checks the result against the known small cases.
    :param girths: girths to derive
    :param check_anchors: raise on any disagreement with the known cases
    :param jobs: worker processes, entries are independent
    :return: SeedCatalog
    :raises AnchorMismatchException: when a known case is not reproduced
    """
    catalog = SeedCatalog()
    for g in girths:
        logging.info(f"deriving girth {g} seeds.")
        seeds = enumerate_seed_configs(g)
        entries = [SeedCatalogEntry(s, parent=s.name[:-1] if s.degenerate and s.name.endswith("'") else None)
                   for s in seeds]
        plain = [e for e in entries if not e.degenerate]
        for entry, expansion in zip(plain, apply_parallel(_derive_expansion, [e.seed for e in plain], jobs)):
            entry.expansion = expansion
        lookup = {e.name: e for e in entries}
        jobs_in = [(e.seed, e.expansion if e.parent is None else lookup[e.parent].expansion) for e in entries]
        for entry, bases in zip(entries, apply_parallel(_derive_bases, jobs_in, jobs, desc=f"girth {g} bases")):
            entry.bases = bases
        _mark_superseded(entries, lookup)
        for entry, (_, i_cfg) in zip(entries, jobs_in):
            derive_ham_data(entry, i_cfg)
        catalog.entries.extend(entries)
        if check_anchors:
            check_girth_anchors(catalog, g)
    return catalog


def _fail(g, message):
    raise AnchorMismatchException(f"girth {g}: {message}")


def check_girth_anchors(catalog, g):
    """
    Compares the derived entries of one girth with the known small cases: configuration counts, deficiencies and
    girths, the verified covers, and the named base graphs.
    :raises AnchorMismatchException: with the first disagreement
    """
    entries = catalog.for_girth(g)
    plain = [e for e in entries if not e.degenerate]
    degenerate = [e for e in entries if e.degenerate]
    if (len(plain), len(degenerate)) != EXPECTED_CONFIG_COUNTS[g]:
        _fail(g, f"{len(plain)} configurations and {len(degenerate)} degenerate ones, "
                 f"expected {EXPECTED_CONFIG_COUNTS[g]}")
    s_graph = build_S(g)
    if deficiency(s_graph) != 2 * g:
        _fail(g, f"S_g has deficiency {deficiency(s_graph)}")
    for entry in plain:
        if entry.expansion is None:
            continue
        if girth(entry.expansion.graph) != g or deficiency(entry.expansion.graph) != 2 * g:
            _fail(g, f"I_{entry.name} has girth {girth(entry.expansion.graph)} and deficiency "
                     f"{deficiency(entry.expansion.graph)}")
    for entry in entries:
        for base in entry.bases:
            if girth(base.graph) != g:
                _fail(g, f"a base of {entry.name} has girth {girth(base.graph)}")
            report = verify_6cdc(base.graph, base.cdc, fail_fast=False)
            if not report.passed:
                _fail(g, f"a base of {entry.name} fails {report.first_failure()}")
            if not check_structure_theorems(base.graph, base.cdc).passed:
                _fail(g, f"a base of {entry.name} breaks a structure theorem")
            if base.hamiltonian is None:
                _fail(g, f"a base of {entry.name} has no Hamiltonian cycle")
    {3: _check_girth_3, 4: _check_girth_4, 5: _check_girth_5, 6: _check_girth_6}[g](catalog, entries)


def _check_girth_3(catalog, entries):
    bases = [b for e in entries for b in e.bases]
    if len(bases) != 1 or not is_isomorphic(bases[0].graph, torus_2layer(6)) or bases[0].kind != TYPE_I:
        _fail(3, f"expected the prism as the only type (i) base, found {[(b.graph.n, b.kind) for b in bases]}")


def _check_girth_4(catalog, entries):
    cube, m8, m6 = torus_2layer(8), mobius_ladder(8), mobius_ladder(6)
    both = 0
    for entry in entries:
        if any(b.kind != TYPE_I for b in entry.bases):
            _fail(4, f"{entry.name} has a base that is not type (i)")
        if entry.degenerate:
            if len(entry.bases) != 1 or not is_isomorphic(entry.bases[0].graph, m6):
                _fail(4, f"degenerate {entry.name} does not complete to M_6 alone")
            parent = catalog.entry(entry.parent)
            host_cfg = cdc_configuration(entry.bases[0].cdc)
            sites = substitution_sites(host_cfg, entry.seed, parent.expansion)
            if not sites or not is_isomorphic(substitute_at(host_cfg, sites[0], parent.expansion)[0].graph, m8):
                _fail(4, f"substituting I_{parent.name} into M_6 does not give M_8")
            continue
        kinds = [('T82' if is_isomorphic(b.graph, cube) else 'M8' if is_isomorphic(b.graph, m8) else None)
                 for b in entry.bases]
        if None in kinds or not kinds:
            _fail(4, f"{entry.name} has bases outside T_8,2 and M_8: {[b.graph.n for b in entry.bases]}")
        if sorted(kinds) == ['M8', 'T82']:
            both += 1
            if not any(b.superseded_by for b in entry.bases):
                _fail(4, f"the M_8 base of {entry.name} is not superseded by M_6")
        elif kinds != ['T82']:
            _fail(4, f"{entry.name} has bases {kinds}")
    if both != 1:
        _fail(4, f"{both} configurations have both T_8,2 and M_8 bases, expected 1")


def _check_girth_5(catalog, entries):
    twisted, blocked, survivor = (catalog.entry(name) for name in ('5a', '5b', '5c'))
    if twisted.expansion is None or twisted.bases:
        _fail(5, "5a should have I_g and no base instance")
    if blocked.expansion is not None or blocked.bases:
        _fail(5, "5b should have neither I_g nor a base instance")
    if survivor.expansion is None or not survivor.bases or any(b.kind != TYPE_II for b in survivor.bases):
        _fail(5, "5c should have I_g and type (ii) bases only")


def _check_girth_6(catalog, entries):
    heawood = Graph.from_networkx(nx.heawood_graph())
    type_i = [(e, b) for e in entries for b in e.bases if b.kind == TYPE_I]
    if len(type_i) != 1 or not is_isomorphic(type_i[0][1].graph, heawood):
        _fail(6, f"expected the Heawood graph as the only type (i) base, found {[b.graph.n for _, b in type_i]}")
    if type_i[0][0].name != '6b':
        _fail(6, f"the Heawood graph completes {type_i[0][0].name}, expected 6b")
    closed = [e for e in entries if e.seed.has_complete_cycle]
    if len(closed) != 1:
        _fail(6, f"{len(closed)} configurations hold a complete cycle, expected 1")
    bases = closed[0].bases
    if len(bases) != 2 or any(b.kind != TYPE_III for b in bases):
        _fail(6, f"{closed[0].name} has bases {[b.kind for b in bases]}, expected two of type (iii)")
