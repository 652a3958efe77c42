import logging
from dataclasses import dataclass, field

import pandas as pd

from ..cdc.api import lemma_suite
from ..cdc.oracle import ALL, find_6cdc
from ..configuration.seeds import MAX_GIRTH, MIN_GIRTH
from ..generator.api import generate, reduce_to_base
from ..graph.graph import girth
from ..graph.hamiltonian import find_hamiltonian_cycle
from ..resource import ResourceManager
from ..util import ReductionFailedException, apply_parallel

COLUMNS = ['n', 'girth', 'graphs', 'positive', 'covers', 'generated', 'missed', 'over_generated', 'lemma_failures',
           'non_hamiltonian', 'reduction_failures']


@dataclass(frozen=True)
class OracleResult:
    n: int
    certificate: bytes
    girth: int
    positive: bool
    lemmas_ok: bool = True
    hamiltonian: bool = True
    reduced_to: tuple = None
    covers: int = 1


@dataclass
class CrosscheckReport:
    """
    frame: one row per (n, girth) comparing the graphs with a 6-CDC against the generator output.
    missed / over_generated: certificates of the disagreeing graphs.
    """
    frame: pd.DataFrame
    missed: list = field(default_factory=list)
    over_generated: list = field(default_factory=list)

    @property
    def passed(self):
        failures = self.frame[['missed', 'over_generated', 'lemma_failures', 'non_hamiltonian',
                               'reduction_failures']]
        return bool((failures == 0).all().all())


def _check_graph(job):
    graph, certificate, catalog = job
    g = girth(graph)
    covers = find_6cdc(graph, ALL)
    if not covers:
        return OracleResult(graph.n, certificate, g, False, covers=0)
    lemmas_ok = True
    reached = []
    for cdc in covers:
        report, structure = lemma_suite(graph, cdc)
        lemmas_ok = lemmas_ok and report.passed and structure is not None and structure.passed
        try:
            reached.append(reduce_to_base(graph, cdc, catalog).entry)
        except ReductionFailedException as e:
            logging.warning(str(e))
    reduced_to = tuple(reached) if len(reached) == len(covers) else None
    return OracleResult(graph.n, certificate, g, True, lemmas_ok, find_hamiltonian_cycle(graph) is not None,
                        reduced_to, len(covers))


def crosscheck(n_max, catalog=None, jobs=1):
    """
    Runs the 6-CDC oracle over every connected cubic graph up to n_max vertices and compares, per girth, the
    graphs with a cover against generate(g, n_max). Every 6-CDC of a positive graph is checked for the cover
    lemmas and a successful reduce_to_base, and every positive graph for a Hamiltonian cycle.
    :param n_max: largest even order, at most config.max_cubic_order
    :param catalog: SeedCatalog, the shared one by default
    :param jobs: worker processes for the oracle pass and the generator
    :return: CrosscheckReport
    """
    manager = ResourceManager()
    if catalog is None:
        catalog = manager.catalog
    results = []
    for n in range(4, n_max + 1, 2):
        corpus = manager.corpus(n)
        jobs_in = [(graph, certificate, catalog) for graph, certificate in zip(corpus.graphs, corpus.certificates)]
        results.extend(apply_parallel(_check_graph, jobs_in, jobs, desc=f"oracle n={n}"))

    girths = range(MIN_GIRTH, MAX_GIRTH + 1)
    generated = {g: {node.certificate: node.n for node in generate(g, n_max, catalog, jobs)} for g in girths}

    report = CrosscheckReport(pd.DataFrame(columns=COLUMNS))
    rows = []
    for n in range(4, n_max + 1, 2):
        for g in girths:
            group = [r for r in results if r.n == n and r.girth == g]
            positive = {r.certificate for r in group if r.positive}
            produced = {c for c, size in generated[g].items() if size == n}
            if not group and not produced:
                continue
            missed = sorted(positive - produced)
            extra = sorted(produced - positive)
            report.missed.extend(missed)
            report.over_generated.extend(extra)
            rows.append({'n': n, 'girth': g, 'graphs': len(group), 'positive': len(positive),
                         'covers': sum(r.covers for r in group if r.positive),
                         'generated': len(produced), 'missed': len(missed), 'over_generated': len(extra),
                         'lemma_failures': sum(1 for r in group if r.positive and not r.lemmas_ok),
                         'non_hamiltonian': sum(1 for r in group if r.positive and not r.hamiltonian),
                         'reduction_failures': sum(1 for r in group if r.positive and r.reduced_to is None)})
            if missed or extra:
                logging.warning(f"n={n} girth {g}: {len(missed)} graphs with a 6-CDC not generated, "
                                f"{len(extra)} generated without a 6-CDC")
    report.frame = pd.DataFrame(rows, columns=COLUMNS)
    return report
