import argparse
import logging
import os
import sys
import time
from dataclasses import dataclass, field

import pandas as pd

from . import config
from .circulant.api import verify_theorem2
from .circulant.families import CirculantSpec, circulant, mobius_ladder, torus_2layer
from .circulant.mcsd import find_mcsd
from .cdc.api import lemma_suite
from .cdc.cover import CDC
from .cdc.oracle import ALL, FIRST, find_6cdc
from .enumeration.api import crosscheck
from .generator.api import generate, reduce_to_base
from .graph.canonical import canonical_form, find_isomorphism
from .graph.graph import girth
from .graph.graph6 import graph6_text, read_graph6_lines
from .resource import CATALOG_FILE, ResourceManager
from .util import (AnchorMismatchException, CatalogFormatException, CycleFormatException,
                   GraphConstructionException, Graph6FormatException, HamiltonianSpliceException,
                   NotCubicException, ReductionFailedException, SearchBoundExceededException, SubstitutionException)

EXIT_PASS = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

INTERNAL_ERRORS = (AnchorMismatchException, SearchBoundExceededException, SubstitutionException,
                   HamiltonianSpliceException, ReductionFailedException, CatalogFormatException)
INPUT_ERRORS = (Graph6FormatException, CycleFormatException, GraphConstructionException, NotCubicException,
                OSError, ValueError)

FAMILIES = ['mobius', 'torus', 'circulant', 'theorem']


@dataclass
class RunReport:
    """
    Outcome of one command: parameters and counts for the header, a pass/fail table, and elapsed time. Written to
    stderr so stdout carries data only.
    """
    command: str
    parameters: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    table: pd.DataFrame = None
    findings: int = 0
    elapsed: float = 0.0

    @property
    def exit_code(self):
        return EXIT_FINDING if self.findings else EXIT_PASS

    def to_text(self):
        lines = [f"command: {self.command}"]
        lines += [f"  {key}: {value}" for key, value in self.parameters.items()]
        lines += [f"count {key}: {value}" for key, value in self.counts.items()]
        if self.table is not None and not self.table.empty:
            lines.append(self.table.to_string(index=False))
        lines.append(f"result: {'pass' if self.exit_code == EXIT_PASS else 'FINDINGS'} ({self.findings})")
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        return '\n'.join(lines) + '\n'


def _read_graphs(path):
    with open(path) as handle:
        graphs = read_graph6_lines(handle.read())
    if not graphs:
        raise Graph6FormatException(f"{path} holds no graph")
    return graphs


def _read_cdc(graph, path):
    with open(path) as handle:
        return CDC.from_text(graph, handle.read())


def cmd_derive_seeds(args, out):
    manager = ResourceManager()
    catalog = manager.rebuild_catalog()
    if args.out:
        with open(args.out, 'w', newline='\n') as handle:
            handle.write(catalog.to_text())
    rows = []
    for entry in catalog.entries:
        size = entry.expansion_size()
        rows.append({'entry': entry.name, 'girth': entry.g, 'degenerate': entry.degenerate,
                     'I_g': '-' if size is None else f"{size[0]}v/{size[1]}e",
                     'bases': ' '.join(f"{b.graph.n}{b.kind}{'*' if b.superseded_by else ''}" for b in entry.bases)})
    path = args.out or os.path.join(manager.cache_dir, CATALOG_FILE)
    return RunReport('derive-seeds', {'out': path}, {'entries': len(catalog.entries)}, pd.DataFrame(rows))


def _write_record(out, node, args):
    if args.format == 'graph6':
        out.write(graph6_text(node.graph) + '\n')
    else:
        out.write(f"{node.graph.n} {node.graph.m}\n")
        out.write(''.join(f"{u} {v}\n" for u, v in node.graph.edges()))
    if args.with_cdc:
        out.write(node.cdc.to_text())
    if args.with_ham:
        out.write('H ' + ' '.join(str(v) for v in node.hamiltonian) + '\n')


def cmd_generate(args, out):
    nodes = generate(args.girth, args.max_n, jobs=args.jobs)
    for node in nodes:
        _write_record(out, node, args)
    by_n = pd.Series([node.n for node in nodes], dtype=int).value_counts().sort_index()
    table = pd.DataFrame({'n': by_n.index, 'graphs': by_n.values})
    return RunReport('generate', {'girth': args.girth, 'max_n': args.max_n}, {'graphs': len(nodes)}, table)


def cmd_oracle(args, out):
    graphs = _read_graphs(args.input)
    rows = []
    for index, graph in enumerate(graphs):
        covers = find_6cdc(graph, args.mode)
        rows.append({'graph': index, 'n': graph.n, 'girth': girth(graph), 'covers': len(covers)})
        for cdc in covers:
            out.write(cdc.to_text())
        if not covers:
            logging.warning(f"graph {index}: no 6-CDC")
    table = pd.DataFrame(rows)
    return RunReport('oracle', {'input': args.input, 'mode': args.mode}, {'graphs': len(graphs)}, table,
                     findings=int((table['covers'] == 0).sum()))


def cmd_verify(args, out):
    graph = _read_graphs(args.graph)[0]
    cdc = _read_cdc(graph, args.cdc)
    report, structure = lemma_suite(graph, cdc)
    table = report.to_frame()
    if structure is not None:
        table = pd.concat([table, structure.to_frame().rename(columns={'theorem': 'lemma'})], ignore_index=True)
    return RunReport('verify', {'graph': args.graph, 'cdc': args.cdc}, {'cycles': cdc.t}, table,
                     findings=int((table['status'] != 'pass').sum()))


def cmd_crosscheck(args, out):
    if args.max_n > config.max_cubic_order:
        raise ValueError(f"--max-n is limited to {config.max_cubic_order}")
    report = crosscheck(args.max_n, jobs=args.jobs)
    for certificate in report.missed + report.over_generated:
        out.write(certificate.hex() + '\n')
    failures = report.frame[['missed', 'over_generated', 'lemma_failures', 'non_hamiltonian',
                             'reduction_failures']].to_numpy().sum()
    return RunReport('crosscheck', {'max_n': args.max_n}, {'rows': len(report.frame)}, report.frame,
                     findings=int(failures))


def cmd_circulant(args, out):
    parameters = {'family': args.family, 'n': args.n}
    if args.family == 'theorem':
        report = verify_theorem2(args.n, generator_max_n=args.generator_max_n, jobs=args.jobs)
        for n, has_mcsd, is_circulant in report.discrepancies:
            logging.warning(f"T_{n},2: MCSD {has_mcsd}, circulant {is_circulant}")
        return RunReport('circulant', parameters, {'discrepancies': len(report.discrepancies)}, report.frame,
                         findings=int((~report.frame['passed']).sum()) + len(report.discrepancies))
    findings = 0
    if args.family == 'mobius':
        graph = mobius_ladder(args.n)
    elif args.family == 'torus':
        graph = torus_2layer(args.n)
    else:
        if args.step is None:
            raise ValueError("circulant needs --step")
        result = circulant(CirculantSpec(args.n, args.step))
        graph = result.graph
        parameters['step'] = args.step
        findings += 0 if result.connected else 1
    out.write(graph6_text(graph) + '\n')
    if args.mcsd:
        labeling = find_mcsd(graph) if graph.is_connected() else None
        if labeling is None:
            logging.warning("no minimal chordal sense of direction")
            findings += 1
        else:
            order = sorted(range(graph.n), key=lambda v: labeling.ranks[v])
            out.write(' '.join(str(v) for v in order) + '\n')
            out.write(''.join(f"{u} {v} {labeling.label(u, v)}\n" for u, v in graph.edges()))
    return RunReport('circulant', parameters, {'n': graph.n, 'girth': girth(graph)}, findings=findings)


def cmd_reduce(args, out):
    graph = _read_graphs(args.graph)[0]
    cdc = _read_cdc(graph, args.cdc)
    reduction = reduce_to_base(graph, cdc, ResourceManager().catalog)
    out.write(graph6_text(reduction.base.graph) + '\n')
    table = pd.DataFrame([{'step': i, 'entry': name, 'copy': ' '.join(str(v) for v in embedding)}
                          for i, (name, embedding) in enumerate(reduction.trace)])
    return RunReport('reduce', {'graph': args.graph, 'cdc': args.cdc},
                     {'steps': len(reduction.trace), 'base_entry': reduction.entry, 'base_n': reduction.base.graph.n},
                     table)


def cmd_iso(args, out):
    first = _read_graphs(args.first)[0]
    second = _read_graphs(args.second)[0]
    mapping = find_isomorphism(first, second)
    same = canonical_form(first).certificate == canonical_form(second).certificate
    out.write(f"isomorphic {'yes' if mapping is not None else 'no'}\n")
    if mapping is not None:
        out.write(''.join(f"{u} {mapping[u]}\n" for u in range(first.n)))
    return RunReport('iso', {'first': args.first, 'second': args.second}, {'certificates_equal': same},
                     findings=0 if mapping is not None else 1)


COMMANDS = {'derive-seeds': cmd_derive_seeds, 'generate': cmd_generate, 'oracle': cmd_oracle,
            'verify': cmd_verify, 'crosscheck': cmd_crosscheck, 'circulant': cmd_circulant,
            'reduce': cmd_reduce, 'iso': cmd_iso}


def build_parser():
    parser = argparse.ArgumentParser(prog='hexcover', description="6-cycle double covers of cubic graphs")
    parser.add_argument('-v', '--verbose', action='store_true', help="log progress at INFO level")
    parser.add_argument('--cache-dir', default=None, help="where the catalog and corpus caches live")
    parser.add_argument('--jobs', type=int, default=config.jobs, help="worker processes")
    commands = parser.add_subparsers(dest='command', required=True)

    derive = commands.add_parser('derive-seeds', help="derive and check the seed catalog")
    derive.add_argument('--out', default=None, help="also write the catalog to this file")

    generate = commands.add_parser('generate', help="stream the generated graphs of one girth")
    generate.add_argument('--girth', type=int, required=True, choices=[3, 4, 5, 6])
    generate.add_argument('--max-n', type=int, default=config.default_max_n)
    generate.add_argument('--with-cdc', action='store_true')
    generate.add_argument('--with-ham', action='store_true')
    generate.add_argument('--format', choices=['graph6', 'edges'], default='graph6')

    oracle = commands.add_parser('oracle', help="search 6-CDCs of the graphs in a graph6 file")
    oracle.add_argument('input')
    oracle.add_argument('--mode', choices=[FIRST, ALL], default=FIRST)

    verify = commands.add_parser('verify', help="check a CDC file against the cover lemmas")
    verify.add_argument('graph')
    verify.add_argument('cdc')

    cross = commands.add_parser('crosscheck', help="compare oracle and generator over all cubic graphs")
    cross.add_argument('--max-n', type=int, default=config.default_max_n)

    circ = commands.add_parser('circulant', help="Moebius ladders, 2-layer tori, circulants, theorem check")
    circ.add_argument('family', choices=FAMILIES)
    circ.add_argument('n', type=int)
    circ.add_argument('--step', type=int, default=None, help="connection s of C_n(s, n/2)")
    circ.add_argument('--mcsd', action='store_true', help="also search a minimal chordal sense of direction")
    circ.add_argument('--generator-max-n', type=int, default=None,
                      help="largest order looked up in the generator output by the theorem check")

    reduce = commands.add_parser('reduce', help="reduce a graph and CDC to a base instance")
    reduce.add_argument('graph')
    reduce.add_argument('cdc')

    iso = commands.add_parser('iso', help="isomorphism test of two graph6 files")
    iso.add_argument('first')
    iso.add_argument('second')
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, level=logging.INFO if args.verbose else logging.WARNING,
                        format='%(levelname)s %(message)s')
    manager = ResourceManager()
    if args.cache_dir:
        manager.set_cache_dir(args.cache_dir)
    manager.jobs = args.jobs
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args, out)
    except INTERNAL_ERRORS as e:
        logging.error(f"{type(e).__name__}: {e}")
        return EXIT_INTERNAL
    except INPUT_ERRORS as e:
        logging.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    report.elapsed = time.perf_counter() - start
    sys.stderr.write(report.to_text())
    return report.exit_code
