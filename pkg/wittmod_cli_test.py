import io
import json
import os
import shutil
import tempfile
import textwrap
import unittest

import wittmod
wittmod.init(parameters=('a1', 'a2', 'a3'), random_seed=0)

from wittmod import field
from wittmod.cli import main
from wittmod.config import Config, as_config, load, load_path
from wittmod.monitors import ProgressMonitor, DummyProgressMonitor
from wittmod.parser import parse_witt, parse_scalar
from wittmod.utils import serial
from wittmod.utils.exc import ConfigError
from wittmod.verification import Report, verify_all, PASS, FAIL, UNSTABLE
from wittmod.witt import vector_field

HERE = os.path.dirname(os.path.abspath(__file__))


def run(*argv):
    out = io.StringIO()
    status = main(list(argv), out=out)
    return status, out.getvalue()


class TestConfig(unittest.TestCase):
    def test_defaults(self):
        config = Config()
        a1, a2 = field.parameter('a1'), field.parameter('a2')
        self.assertEqual(config.n, 2)
        self.assertEqual(config.alpha, (a1, a2))
        self.assertEqual(config.gamma, (a1, a1))
        self.assertEqual(config.lam, (parse_scalar('a1 + 1/2'), a1))
        self.assertEqual(len(config.representations), 4)
        self.assertEqual(Config(n=1).representations,
                         [(field.zero,), (field.one,)])

    def test_validation(self):
        self.assertRaises(ConfigError, Config, n=0)
        self.assertRaises(ConfigError, Config, degree=0)
        self.assertRaises(ConfigError, Config, alpha='a1')
        self.assertRaises(ConfigError, Config, mu='a1 +, 2')
        self.assertRaises(ConfigError, Config, n=4, alpha='symbolic')

    def test_as_config(self):
        config = as_config({'n': 1, 'radius': 3})
        self.assertEqual((config.n, config.radius), (1, 3))
        self.assertIs(as_config(config), config)
        self.assertRaises(ConfigError, as_config, {'nn': 1})
        self.assertRaises(ConfigError, as_config, [1, 2])

    def test_yaml(self):
        os.environ['WITTMOD_TEST_RADIUS'] = '3'
        graph = load(textwrap.dedent("""
            init:
              parameters: [a1, a2, a3]
            config: !obj:wittmod.config.Config
              n: 2
              radius: ${WITTMOD_TEST_RADIUS}
              alpha: "1/2, a2"
            monitor: !obj:wittmod.monitors.DummyProgressMonitor {}
            """))
        config = graph['config']
        self.assertIsInstance(config, Config)
        self.assertEqual(config.radius, 3)
        self.assertEqual(config.alpha[0], parse_scalar('1/2'))
        self.assertIsInstance(graph['monitor'], DummyProgressMonitor)

    def test_overrides(self):
        graph = load("config: {n: 2, radius: 1}",
                     overrides={'config.radius': 2})
        self.assertEqual(as_config(graph['config']).radius, 2)

    def test_default_file(self):
        graph = load_path(os.path.join(HERE, 'configs', 'default.yml'))
        self.assertEqual(graph['config'].degree, 3)
        self.assertEqual(graph['config'].to_dict()['lam'],
                         ['a1 + 1/2', 'a1'])


class TestReport(unittest.TestCase):
    def test_statuses(self):
        report = Report('test', {'x': 1})
        report.add_check('a', PASS)
        self.assertEqual(report.exit_status(), 0)
        report.add_check('b', UNSTABLE, {'1': 2, '2': 3})
        self.assertEqual(report.exit_status(), 0)
        self.assertFalse(report.ok)
        report.add_check('c', FAIL)
        self.assertEqual(report.exit_status(), 1)
        self.assertEqual(report.failed[0]['witness'], 'no witness recorded')
        self.assertRaises(ValueError, report.add_check, 'd', 'maybe')

    def test_json(self):
        report = Report('test', {'x': 1})
        report.results['value'] = [1, 2]
        report.add_check('a', FAIL, 'because')
        again = Report.from_json(report.to_json())
        self.assertEqual(again, report)
        self.assertEqual(json.loads(serial.to_string(report)),
                         report.to_dict())
        self.assertIn('[FAIL] a  witness: because', report.pretty())


class TestMonitors(unittest.TestCase):
    def setUp(self):
        self.path = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.path)

    def test_report_is_saved(self):
        monitor = ProgressMonitor(save_path=self.path, make_subdir=False,
                                  output_to_log=True)
        report = Report('verify-all')
        monitor.start()
        monitor.report(report.add_check('a', PASS))
        monitor.finish(report)
        saved = serial.load(os.path.join(self.path, 'report.json'))
        self.assertEqual(Report.from_dict(saved), report)
        self.assertTrue(os.path.exists(os.path.join(self.path,
                                                    'output.log')))


class TestVerifyAll(unittest.TestCase):
    def test_selected_checks(self):
        monitor = DummyProgressMonitor()
        report = verify_all(Config(samples=2, seed=0), monitor=monitor,
                            only=['lie_axioms', 'separation',
                                  'tensor_negative_control'])
        self.assertEqual([c['name'] for c in monitor.checks],
                         ['lie_axioms', 'separation',
                          'tensor_negative_control'])
        self.assertTrue(report.ok, report.checks)
        self.assertEqual(report.results['separation'], {'coordinate': 1})

    def test_cuspidality_with_negative_control(self):
        report = verify_all(Config(radius=1, representations=['1, 0']),
                            only=['cuspidality'])
        self.assertTrue(report.ok, report.checks)

    def test_default_config_centralizer_checks(self):
        graph = load_path(os.path.join(HERE, 'configs', 'default.yml'))
        report = verify_all(graph['config'],
                            only=['centralizer', 'pbw_independence',
                                  'roundtrip'])
        self.assertEqual(len(report.checks), 3)
        self.assertTrue(report.ok, report.checks)
        self.assertEqual(report.results['centralizer']['max_degree'], 4)

    def test_same_seed_gives_the_same_json(self):
        only = ['lie_axioms', 'phi_homomorphism', 'complex', 'separation']
        first, second = [
            verify_all(Config(degree=2, radius=1, samples=3, seed=7),
                       only=only)
            for _ in range(2)]
        self.assertEqual(len(first.checks), 4)
        self.assertEqual(first.to_json(), second.to_json())

    @unittest.skipUnless(os.environ.get('WITTMOD_EXTENDED') == '1',
                         'set WITTMOD_EXTENDED=1 for the n = 3 checks')
    def test_extended_three_variable_checks(self):
        report = verify_all(Config(samples=2, seed=0, extended=True),
                            only=['lie_axioms_n3', 'complex_n3'])
        self.assertEqual([c['name'] for c in report.checks],
                         ['lie_axioms_n3', 'complex_n3'])
        self.assertTrue(report.ok, report.checks)


class TestCommandLine(unittest.TestCase):
    def test_bracket(self):
        status, output = run('--n', '1', 'bracket', 'd1', 't1^2*d1')
        self.assertEqual(status, 0)
        data = json.loads(output)
        self.assertEqual(parse_witt(data['results']['bracket'], 1),
                         vector_field((1,), 0) * 2)
        self.assertEqual(data['checks'][0]['status'], PASS)

    def test_parse_errors_exit_2(self):
        status, output = run('bracket', 'd1', 't1^-1*d1')
        self.assertEqual(status, 2)
        self.assertEqual(output, '')

    def test_decompose(self):
        status, output = run('decompose', 't1*d2')
        self.assertEqual(status, 0)
        data = json.loads(output)
        self.assertEqual(data['checks'][0]['name'], 'recombine')
        self.assertEqual(data['checks'][0]['status'], PASS)

    def test_make_x(self):
        status, output = run('make-x', '2,1', '1')
        self.assertEqual(status, 0)
        self.assertIsNotNone(json.loads(output)['results']['recipe'])
        status, _ = run('make-x', '2,x', '1')
        self.assertEqual(status, 2)

    def test_q1(self):
        status, output = run('--n', '1', 'q1', '--degree', '4')
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output)['results']['per_degree'],
                         [1, 0, 1, 1, 2])

    def test_cuspidal_negative_control(self):
        status, output = run('cuspidal-check', '--lambda', '0, 0',
                             '--alpha', '0, 0', '--radius', '1')
        self.assertEqual(status, 1)
        data = json.loads(output)
        self.assertEqual(data['checks'][0]['status'], FAIL)
        self.assertFalse(data['results']['window']['cuspidal'])

    def test_cuspidal_symbolic(self):
        status, output = run('cuspidal-check', '--lambda', '1, 0',
                             '--radius', '1', '--mu', 'a1, a2')
        self.assertEqual(status, 0)
        data = json.loads(output)
        self.assertTrue(data['results']['tensor_criterion']['cuspidal'])
        self.assertTrue(data['results']['tensor_window']['cuspidal'])
        self.assertEqual(data['checks'][-1]['name'],
                         'tensor_window_consistent')
        self.assertIn('a1 = 0', data['results']['window']['excluded'])

    def test_separation_pretty(self):
        status, output = run('--pretty', 'separation')
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith('separation\n'))
        self.assertIn('disjoint: True', output)

    def test_global_options_after_the_subcommand(self):
        status, output = run('separation', '--pretty')
        self.assertEqual(status, 0)
        self.assertTrue(output.startswith('separation\n'))
        status, output = run('bracket', 'd1', 't1^2*d1', '--n', '1')
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output)['checks'][0]['status'], PASS)
        status, output = run('--pretty', 'verify-all', '--only',
                             'separation', '--seed', '3')
        self.assertEqual(status, 0)
        self.assertIn('[PASS] separation', output)
        self.assertIn('seed: 3', output)

    def test_subcommand_degree_is_kept(self):
        status, output = run('--n', '1', 'q1', '--degree', '3', '--pretty')
        self.assertEqual(status, 0)
        self.assertIn('per_degree: [1, 0, 1, 1]', output)

    def test_dmod_apply(self):
        status, output = run('--n', '1', 'dmod-apply', 'd1*d1^-1',
                             '--vector', 't1^2', '--twist', 'a1')
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(output)['results']['result'], 't1^2')

    def test_config_file_and_emit(self):
        path = tempfile.mkdtemp()
        try:
            emit = os.path.join(path, 'report.json')
            status, output = run('--config',
                                 os.path.join(HERE, 'configs', 'default.yml'),
                                 '--emit', emit, 'separation')
            self.assertEqual(status, 0)
            self.assertEqual(serial.load(emit), json.loads(output))
            status, output = run('--emit', emit, 'separation')
            self.assertEqual(serial.load(emit), json.loads(output))
            self.assertFalse(os.path.exists(emit + '.bak'))
        finally:
            shutil.rmtree(path)


if __name__ == '__main__':
    unittest.main()
