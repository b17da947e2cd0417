#!/usr/bin/env python3
"""
Test runner for the odd Grassmannian toolkit

Usage:
    python run_tests.py                  # every test module
    python run_tests.py rouquier osym    # only tests/test_rouquier.py and tests/test_osym.py
"""

import os
import sys
import unittest

# Add the current directory to the Python path
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

TESTS_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'tests')


def available_suites():
    """Names of the test modules, without the test_ prefix"""
    return sorted(name[len('test_'):-len('.py')] for name in os.listdir(TESTS_DIR)
                  if name.startswith('test_') and name.endswith('.py'))


def build_suite(names=None):
    """
    Collect the tests of the named modules, or of all modules

    Raises:
        ValueError: If a name has no tests/test_<name>.py
    """
    loader = unittest.TestLoader()
    if not names:
        return loader.discover(TESTS_DIR, pattern='test_*.py')
    known = available_suites()
    unknown = [name for name in names if name not in known]
    if unknown:
        raise ValueError(f"Unknown test module(s) {', '.join(unknown)}; choose from {', '.join(known)}")
    suite = unittest.TestSuite()
    for name in names:
        suite.addTests(loader.discover(TESTS_DIR, pattern=f'test_{name}.py'))
    return suite


def run_tests(names=None):
    """Run the selected unit tests"""

    try:
        suite = build_suite(names)
    except ValueError as e:
        print(f"❌ {e}")
        return 2

    # Run tests with verbose output
    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    # Return exit code based on test results
    return 0 if result.wasSuccessful() else 1


if __name__ == '__main__':
    selected = sys.argv[1:]
    print(f"Running oddgrass Test Suite ({', '.join(selected) if selected else 'all modules'})...")
    print("=" * 50)

    exit_code = run_tests(selected)

    print("=" * 50)
    if exit_code == 0:
        print("All tests passed! ✅")
    else:
        print("Some tests failed! ❌")

    sys.exit(exit_code)
