"""
Unit tests for the invariant suites
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from oddgrass.verify import SCHEMA_VERSION, SUITES, SuiteRun, first_failure, run_suite


class TestSuiteRun(unittest.TestCase):
    """Test cases for collecting checks into a report"""

    def test_passing_and_failing_checks(self):
        run = SuiteRun('demo', {'max_ell': 1})
        self.assertTrue(run.run('holds', lambda: None))
        self.assertFalse(run.run('fails', lambda: 'witness text'))
        report = run.report()
        self.assertFalse(report['passed'])
        self.assertEqual(report['schema_version'], SCHEMA_VERSION)
        self.assertEqual(report['checks'][1], {'name': 'fails', 'passed': False, 'witness': 'witness text'})
        self.assertEqual(first_failure(report), ('fails', 'witness text'))

    def test_exceptions_become_witnesses(self):
        def broken():
            raise ValueError("bad input")

        run = SuiteRun('demo', {})
        self.assertFalse(run.run('broken', broken))
        self.assertEqual(run.checks[0]['witness'], 'ValueError: bad input')

    def test_timings(self):
        run = SuiteRun('demo', {}, timings=True)
        run.run('holds', lambda: None)
        self.assertIn('elapsed', run.checks[0])
        self.assertIsNone(first_failure(run.report()))


class TestSuites(unittest.TestCase):
    """Test cases for the named suites with small bounds"""

    def assertSuitePasses(self, report):
        failures = [c for c in report['checks'] if not c['passed']]
        self.assertTrue(report['passed'], failures)
        self.assertTrue(report['checks'])

    def test_qpi(self):
        report = run_suite('qpi', max_ell=2, max_degree=2)
        self.assertSuitePasses(report)
        self.assertEqual(report['suite'], 'qpi')
        self.assertEqual(report['parameters'], {'max_ell': 2, 'max_degree': 2, 'seed': 0})
        self.assertEqual(report['schema_version'], 1)

    def test_osym(self):
        self.assertSuitePasses(run_suite('osym', max_ell=1, max_degree=2))

    def test_onh(self):
        self.assertSuitePasses(run_suite('onh', max_ell=1, max_degree=2))

    def test_oh(self):
        self.assertSuitePasses(run_suite('oh', max_ell=2, max_degree=2))

    def test_bimod(self):
        self.assertSuitePasses(run_suite('bimod', max_ell=2, max_degree=2))

    def test_rouquier(self):
        report = run_suite('rouquier', max_ell=2, max_degree=2)
        self.assertSuitePasses(report)
        self.assertIn('homology[ell=2,k=0]', [c['name'] for c in report['checks']])

    def test_uqpi(self):
        self.assertSuitePasses(run_suite('uqpi', max_ell=1, max_degree=2))

    def test_reports_are_deterministic(self):
        """Same bounds and seed give the same report"""
        first = run_suite('osym', max_ell=1, max_degree=2, seed=4)
        second = run_suite('osym', max_ell=1, max_degree=2, seed=4)
        self.assertEqual(first, second)

    def test_no_timings_by_default(self):
        report = run_suite('uqpi', max_ell=1, max_degree=1)
        self.assertTrue(all('elapsed' not in c for c in report['checks']))
        timed = run_suite('uqpi', max_ell=1, max_degree=1, timings=True)
        self.assertTrue(all('elapsed' in c for c in timed['checks']))

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            run_suite('nope')
        for kwargs in ({'max_ell': 0}, {'max_degree': -1}, {'seed': 'x'}):
            with self.subTest(**kwargs):
                with self.assertRaises(ValueError):
                    run_suite('qpi', **kwargs)

    def test_suite_names(self):
        self.assertEqual(SUITES, ('qpi', 'osym', 'onh', 'oh', 'bimod', 'rouquier', 'uqpi'))


if __name__ == '__main__':
    unittest.main()
