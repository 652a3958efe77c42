import io
import os
import tempfile
import unittest

import networkx as nx

from ...cdc.oracle import find_6cdc
from ...circulant.families import mobius_ladder, torus_2layer
from ...cli import EXIT_FINDING, EXIT_PASS, EXIT_USAGE, RunReport, main
from ...graph.graph import Graph
from ...graph.graph6 import decode_graph6, graph6_text


class TestCli(unittest.TestCase):
    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.prism = torus_2layer(6)
        self.petersen = Graph.from_networkx(nx.petersen_graph())
        self.prism_file = self._write('prism.g6', graph6_text(self.prism) + '\n')
        self.relabeled_file = self._write('relabeled.g6', graph6_text(self.prism.relabel([5, 3, 1, 0, 2, 4])) + '\n')
        self.petersen_file = self._write('petersen.g6', graph6_text(self.petersen) + '\n')
        self.cdc_file = self._write('prism.cdc', find_6cdc(self.prism)[0].to_text())

    def tearDown(self):
        self.directory.cleanup()

    def _write(self, name, text):
        path = os.path.join(self.directory.name, name)
        with open(path, 'w') as handle:
            handle.write(text)
        return path

    def _run(self, *argv):
        out = io.StringIO()
        return main(list(argv), out), out.getvalue()

    def test_iso(self):
        code, text = self._run('iso', self.prism_file, self.relabeled_file)
        assert code == EXIT_PASS
        lines = text.splitlines()
        assert lines[0] == 'isomorphic yes'
        assert len(lines) == 7
        code, text = self._run('iso', self.prism_file, self.petersen_file)
        assert code == EXIT_FINDING
        assert text == 'isomorphic no\n'

    def test_oracle(self):
        code, text = self._run('oracle', self.prism_file)
        assert code == EXIT_PASS
        assert text.splitlines()[0] == '6 9 3'
        code, text = self._run('oracle', self.petersen_file)
        assert code == EXIT_FINDING
        assert text == ''

    def test_verify(self):
        code, _ = self._run('verify', self.prism_file, self.cdc_file)
        assert code == EXIT_PASS

    def test_circulant(self):
        code, text = self._run('circulant', 'mobius', '6')
        assert code == EXIT_PASS
        assert decode_graph6(text.splitlines()[0]) == mobius_ladder(6)
        code, text = self._run('circulant', 'torus', '6', '--mcsd')
        assert code == EXIT_PASS
        lines = text.splitlines()
        assert sorted(int(v) for v in lines[1].split()) == list(range(6))
        assert len(lines) == 2 + 9
        code, _ = self._run('circulant', 'circulant', '8', '--step', '2')
        assert code == EXIT_FINDING
        code, _ = self._run('circulant', 'torus', '8', '--mcsd')
        assert code == EXIT_FINDING

    def test_input_errors(self):
        garbage = self._write('garbage.g6', 'not graph6 at all\n')
        assert self._run('oracle', garbage)[0] == EXIT_USAGE
        assert self._run('oracle', os.path.join(self.directory.name, 'missing.g6'))[0] == EXIT_USAGE
        assert self._run('circulant', 'mobius', '7')[0] == EXIT_USAGE
        assert self._run('circulant', 'circulant', '8')[0] == EXIT_USAGE
        assert self._run('verify', self.petersen_file, self.cdc_file)[0] == EXIT_USAGE
        assert self._run('crosscheck', '--max-n', '18')[0] == EXIT_USAGE

    def test_usage(self):
        self.assertRaises(SystemExit, main, [])
        self.assertRaises(SystemExit, main, ['generate', '--girth', '7'])

    def test_report_text(self):
        report = RunReport('oracle', {'input': 'x.g6'}, {'graphs': 2}, findings=1)
        text = report.to_text()
        assert report.exit_code == EXIT_FINDING
        assert 'command: oracle' in text
        assert 'count graphs: 2' in text
        assert 'result: FINDINGS (1)' in text


if __name__ == '__main__':
    unittest.main()
