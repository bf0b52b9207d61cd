"""
Tests for ``manage.py lie``: JSON on stdout, exit status through CommandError.returncode.
"""

import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import CommandError, call_command
from django.test import SimpleTestCase


class LieCommandTestCase(SimpleTestCase):
    """Runs ``lie`` subcommands and keeps the files they read in a temporary directory"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, *lines):
        path = Path(self.tmp.name) / name
        path.write_text('\n'.join(lines) + '\n')
        return str(path)

    def run_lie(self, *args):
        out = StringIO()
        call_command('lie', *args, stdout=out)
        return json.loads(out.getvalue())

    def run_failing(self, *args):
        """Run a subcommand expected to fail; returns (returncode, parsed stdout or None)"""
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command('lie', *args, stdout=out)
        text = out.getvalue()
        return caught.exception.returncode, json.loads(text) if text else None


class SingleComputationTests(LieCommandTestCase):

    def test_bracket(self):
        self.assertEqual(self.run_lie('bracket', '--algebra', 'w22', 'L[2]', 'L[3]'), {'result': '-1*L[5]'})

    def test_cross_algebra_bracket_is_a_usage_error(self):
        returncode, output = self.run_failing('bracket', '--algebra', 'w22', 'L[1]', 'e[1]')
        self.assertEqual(returncode, 2)
        self.assertIsNone(output)

    def test_apply(self):
        output = self.run_lie('apply', '--derivation', '{"kind": "thin", "beta": ["0", "1"]}', 'e[4]')
        self.assertEqual(output['result'], 'e[5]')

    def test_apply_rejects_bad_json(self):
        returncode, _ = self.run_failing('apply', '--derivation', '{kind: thin}', 'e[4]')
        self.assertEqual(returncode, 2)

    def test_solve_der(self):
        output = self.run_lie('solve-der', '--algebra', 'w22', '--window', '4')
        self.assertEqual(output['outer_dim'], 1)

    def test_witness_infeasible_exits_one(self):
        returncode, output = self.run_failing(
            'witness', '--algebra', 'thin', '--x', 'e[3]', '--vx', 'e[3]', '--y', '2*e[3]', '--vy', '4*e[3]',
            '--window', '6')
        self.assertEqual(returncode, 1)
        self.assertEqual(output['result'], 'infeasible')

    def test_unknown_subcommand_option(self):
        returncode, _ = self.run_failing('witness', '--algebra', 'thin', '--x', 'e[1]')
        self.assertEqual(returncode, 2)


class TwoLocalCommandTests(LieCommandTestCase):

    def test_verify_with_inline_map(self):
        probes = self.write('probes.txt', '# golden inputs', 'e[1] + e[2]', '2*e[3]', 'e[4]')
        output = self.run_lie('verify-2local', '--map', '{"omega": {"theta": ["1", "1"], "lambda": "2", "q": 3}}',
                              '--probes', probes, '--window', '10')
        self.assertEqual(output['status'], 'pass')
        self.assertEqual(output['details']['pairs'], 6)

    def test_verify_with_table_file(self):
        table = self.write('table.txt', 'e[3] => e[3]', '2*e[3] => e[3]')
        probes = self.write('probes.txt', 'e[3]', '2*e[3]')
        returncode, output = self.run_failing('verify-2local', '--map', table, '--probes', probes, '--window', '6')
        self.assertEqual(returncode, 1)
        self.assertEqual(output['counterexamples'][0]['input'], ['e[3]', '2*e[3]'])

    def test_verify_with_map_file(self):
        literal = self.write('map.json', json.dumps({'omega': {'theta': ['1']}}))
        probes = self.write('probes.txt', 'e[1]', 'e[2] + e[5]')
        self.assertEqual(self.run_lie('verify-2local', '--map', literal, '--probes', probes)['status'], 'pass')

    def test_missing_probe_file(self):
        returncode, _ = self.run_failing('verify-2local', '--map', '{}', '--probes', str(Path(self.tmp.name) / 'nope'))
        self.assertEqual(returncode, 2)

    def test_undecodable_map_file(self):
        path = Path(self.tmp.name) / 'map.bin'
        path.write_bytes(b'\xff\xfe\xfa\n')
        probes = self.write('probes.txt', 'e[3]')
        returncode, output = self.run_failing('verify-2local', '--map', str(path), '--probes', probes)
        self.assertEqual(returncode, 2)
        self.assertIsNone(output)

    def test_decompose_stub(self):
        table = self.write('stub.txt', 'L[0] => 0', 'L[1] => 0', 'I[0] => 0', 'I[1] => I[2]')
        verify = self.write('verify.txt', 'I[1]')
        returncode, output = self.run_failing('decompose-w22', '--map', table, '--verify', verify, '--window', '4')
        self.assertEqual(returncode, 1)
        self.assertEqual(output['failure']['reason'], 'disagreement')

    def test_classify_inline_map(self):
        output = self.run_lie('classify-thin', '--map', '{"omega": {"theta": ["1"]}}', '--window', '8')
        self.assertEqual(output['map']['omega'], {'theta': ['1'], 'lambda': '0', 'q': 3})
        self.assertEqual(output['map']['delta'], {'kind': 'thin', 'alpha': [], 'beta': []})

    def test_classify_rejects_small_window(self):
        returncode, _ = self.run_failing('classify-thin', '--map', '{}', '--window', '4')
        self.assertEqual(returncode, 2)


class ReproduceCommandTests(LieCommandTestCase):

    def test_reproduce_case(self):
        output = self.run_lie('reproduce', '--case', 'negative-controls', '--seed', '7')
        self.assertEqual(output['case'], 'negative-controls')
        self.assertEqual(output['status'], 'pass')
        self.assertTrue(all(output['detected'].values()))

    def test_nonadditive_example(self):
        output = self.run_lie('reproduce', '--case', 'example-4.4')
        self.assertEqual(output['paper_ref'], 'Example 4.4')
        self.assertEqual(output['counterexamples'][0]['lhs'], '4*e[3]')

    def test_w22_roundtrip_lists_mu(self):
        output = self.run_lie('reproduce', '--case', 'theorem-3.1-roundtrip')
        self.assertEqual(output['status'], 'pass')
        self.assertEqual(output['paper_ref'], 'Theorem 3.1')
        self.assertTrue(all(run['mu'] is not None for run in output['runs']))

    def test_unknown_case(self):
        returncode, _ = self.run_failing('reproduce', '--case', 'nothing')
        self.assertEqual(returncode, 2)
