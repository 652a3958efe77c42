from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np
import pandas as pd

from ..graph.canonical import labeled_certificate
from ..graph.graph import cycle_edges, validate_cycle
from ..util import requires_cubic, read_int_rows, CycleFormatException

CYCLE_LENGTH = 6

COVERAGE = 'edge_coverage'
CYCLE_COUNT = 'cycle_count'
NO_SHARED_PATH = 'no_shared_path'
THREE_PER_VERTEX = 'three_cycles_per_vertex'
MU_BOUNDS = 'mu_bounds'
SIGMA_BOUNDS = 'sigma_bounds'
LEMMAS = [COVERAGE, CYCLE_COUNT, NO_SHARED_PATH, THREE_PER_VERTEX, MU_BOUNDS, SIGMA_BOUNDS]


def _cycle_order_key(cycle):
    return tuple(sorted(cycle_edges(cycle)))


@dataclass(frozen=True)
class CDC:
    """
    A collection of 6-cycles over a host graph. Equality is equality of the unordered set of normalized cycles,
    stored in canonical order (by sorted edge list) so label i is reproducible.
    """
    graph: object
    cycles: tuple

    @classmethod
    def from_cycles(cls, graph, cycles):
        normalized = [validate_cycle(graph, c, CYCLE_LENGTH) for c in cycles]
        return cls(graph, tuple(sorted(normalized, key=_cycle_order_key)))

    @property
    def t(self):
        return len(self.cycles)

    def edge_cover(self):
        """Map from edge to the sorted tuple of indices of the cycles through it."""
        cover = defaultdict(list)
        for index, cycle in enumerate(self.cycles):
            for e in cycle_edges(cycle):
                cover[e].append(index)
        return {e: tuple(v) for e, v in cover.items()}

    def cycle_set(self):
        return frozenset(self.cycles)

    def certificate(self):
        """Invariant of the pair (graph, CDC) under vertex relabeling and cycle renumbering."""
        cover = self.edge_cover()
        return labeled_certificate(self.graph.n, [(e, cover.get(e, ())) for e in self.graph.edges()])

    def to_text(self):
        lines = [f"{self.graph.n} {self.graph.m} {self.t}"]
        lines += [' '.join(str(v) for v in c) for c in self.cycles]
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_text(cls, graph, text):
        rows = text.splitlines()
        if not rows:
            raise CycleFormatException("empty CDC text")
        header = read_int_rows(rows[0], 3, 'CDC header')
        if not header:
            raise CycleFormatException("CDC header missing")
        n, m, t = header[0]
        if n != graph.n or m != graph.m:
            raise CycleFormatException(f"CDC header {n} {m} does not match a graph with n={graph.n}, m={graph.m}")
        cycles = read_int_rows('\n'.join(rows[1:]), CYCLE_LENGTH, 'CDC cycle')
        if len(cycles) != t:
            raise CycleFormatException(f"CDC header announces {t} cycles, found {len(cycles)}")
        return cls.from_cycles(graph, cycles)


def intersection_stats(cdc):
    """
    mu[i, j] counts the edges covered by both cycles i and j; sigma[i] counts the cycles sharing an edge with i.
    :param cdc: CDC
    :return: (mu, sigma) as numpy integer arrays
    """
    mu = np.zeros((cdc.t, cdc.t), dtype=int)
    for indices in cdc.edge_cover().values():
        for i, j in combinations(indices, 2):
            if i != j:
                mu[i, j] += 1
                mu[j, i] += 1
    sigma = (mu > 0).sum(axis=1)
    return mu, sigma


@dataclass
class CdcReport:
    """
    Per-lemma outcome of a 6-CDC check. results maps lemma name to True, False, or None when not run; witnesses
    holds the offending edge, vertex or cycle pair of a failed lemma.
    """
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    mu: object = None
    sigma: object = None

    @property
    def passed(self):
        return all(self.results.get(lemma) is True for lemma in LEMMAS)

    def first_failure(self):
        return next((lemma for lemma in LEMMAS if self.results.get(lemma) is False), None)

    def to_frame(self):
        return pd.DataFrame([{'lemma': lemma,
                              'status': {True: 'pass', False: 'FAIL', None: 'not run'}[self.results.get(lemma)],
                              'witness': '' if lemma not in self.witnesses else str(self.witnesses[lemma])}
                             for lemma in LEMMAS])


def _check_lemmas(graph, cdc, mu, sigma):
    """Yields (lemma, passed, witness) in the fixed lemma order."""
    cover = cdc.edge_cover()
    bad = next((e for e in graph.edges() if len(cover.get(e, ())) != 2), None)
    yield COVERAGE, bad is None, None if bad is None else (bad, len(cover.get(bad, ())))

    yield CYCLE_COUNT, 2 * cdc.t == graph.n, None if 2 * cdc.t == graph.n else (cdc.t, graph.n // 2)

    witness = None
    for v in range(graph.n):
        incident = [cover.get((min(v, w), max(v, w)), ()) for w in graph.neighbors(v)]
        for a, b in combinations(incident, 2):
            shared = sorted(set(a) & set(b))
            if len(shared) >= 2:
                witness = (v, tuple(shared[:2]))
                break
        if witness:
            break
    yield NO_SHARED_PATH, witness is None, witness

    witness = None
    for v in range(graph.n):
        through = {i for w in graph.neighbors(v) for i in cover.get((min(v, w), max(v, w)), ())}
        if len(through) != 3:
            witness = (v, len(through))
            break
    yield THREE_PER_VERTEX, witness is None, witness

    off = mu[~np.eye(cdc.t, dtype=bool)] if cdc.t > 1 else np.array([], dtype=int)
    ok = bool(((off >= 0) & (off <= 3)).all())
    yield MU_BOUNDS, ok, None if ok else int(off.max())

    ok = bool(((sigma >= 2) & (sigma <= 6)).all())
    yield SIGMA_BOUNDS, ok, None if ok else int(np.argmax((sigma < 2) | (sigma > 6)))


@requires_cubic
def verify_6cdc(graph, cycles, fail_fast=True):
    """
    Checks a candidate 6-CDC lemma by lemma: double edge coverage, n/2 cycles, no two cycles sharing a path of
    two edges, three cycles through every vertex, and the mu and sigma bounds.
    :param graph: cubic connected Graph
    :param cycles: iterable of 6-vertex sequences or a CDC
    :param fail_fast: stop at the first failed lemma, leaving later ones as not run
    :return: CdcReport
    """
    cdc = cycles if isinstance(cycles, CDC) else CDC.from_cycles(graph, cycles)
    mu, sigma = intersection_stats(cdc)
    report = CdcReport(mu=mu, sigma=sigma)
    for lemma, passed, witness in _check_lemmas(graph, cdc, mu, sigma):
        report.results[lemma] = passed
        if not passed:
            report.witnesses[lemma] = witness
            if fail_fast:
                break
    return report
