"""
Unit tests for selecting test modules in run_tests.py
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the oddgrass package
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from run_tests import available_suites, build_suite


class TestRunner(unittest.TestCase):
    """Test cases for the module selection"""

    def test_available_suites(self):
        names = available_suites()
        self.assertIn('rouquier', names)
        self.assertIn('runner', names)
        self.assertEqual(names, sorted(names))

    def test_selected_modules(self):
        everything = build_suite().countTestCases()
        only_osym = build_suite(['osym']).countTestCases()
        self.assertGreater(only_osym, 0)
        self.assertLess(only_osym, everything)

    def test_unknown_module(self):
        with self.assertRaises(ValueError):
            build_suite(['nothing'])


if __name__ == '__main__':
    unittest.main()
