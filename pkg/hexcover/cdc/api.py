from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from ..circulant.families import mobius_ladder, torus_2layer
from ..graph.canonical import canonical_form
from ..graph.graph import girth
from .cover import intersection_stats, verify_6cdc

FULL_SHARING = 'full_sharing_only_on_M6_T62'
GIRTH_SIGMA = 'girth_at_least_5_iff_all_sigma_6'
SMALL_SIGMA = 'sigma_below_6_forces_girth_below_5'
THEOREMS = [FULL_SHARING, GIRTH_SIGMA, SMALL_SIGMA]


@dataclass
class StructureReport:
    results: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(self.results.get(name) is True for name in THEOREMS)

    def to_frame(self):
        return pd.DataFrame([{'theorem': name,
                              'status': 'pass' if self.results.get(name) else 'FAIL',
                              'witness': str(self.witnesses.get(name, ''))} for name in THEOREMS])


def _small_cdc_hosts():
    return {canonical_form(mobius_ladder(6)).certificate: 'M_6',
            canonical_form(torus_2layer(6)).certificate: 'T_6,2'}


def check_structure_theorems(graph, cdc):
    """
    Checks three structural facts of a valid 6-CDC:
    two cycles sharing three edges only occur on M_6 or T_{6,2}; girth at least 5 exactly when every cycle
    meets six others; a cycle meeting fewer than six others forces girth below 5.
    :param graph: cubic Graph
    :param cdc: valid CDC of graph
    :return: StructureReport, violations carry witnesses
    """
    mu, sigma = intersection_stats(cdc)
    report = StructureReport()
    g = girth(graph)

    full = np.argwhere(mu == 3)
    if len(full):
        name = _small_cdc_hosts().get(canonical_form(graph).certificate)
        report.results[FULL_SHARING] = name is not None
        if name is None:
            report.witnesses[FULL_SHARING] = tuple(int(x) for x in full[0])
    else:
        report.results[FULL_SHARING] = True

    all_six = bool((sigma == 6).all())
    report.results[GIRTH_SIGMA] = (g >= 5) == all_six
    if not report.results[GIRTH_SIGMA]:
        report.witnesses[GIRTH_SIGMA] = (g, tuple(int(s) for s in sigma))

    small = np.flatnonzero(sigma < 6)
    report.results[SMALL_SIGMA] = not len(small) or g < 5
    if not report.results[SMALL_SIGMA]:
        report.witnesses[SMALL_SIGMA] = (int(small[0]), int(sigma[small[0]]), g)
    return report


def lemma_suite(graph, cdc):
    """
    Runs verify_6cdc without failing fast plus check_structure_theorems.
    :return: (CdcReport, StructureReport or None when the cover is invalid)
    """
    report = verify_6cdc(graph, cdc, fail_fast=False)
    return report, check_structure_theorems(graph, cdc) if report.passed else None
