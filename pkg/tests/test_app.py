"""
Unit tests for the Flask API
"""

import unittest
import sys
import os

# Add the parent directory to the path so we can import the app module
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from app import create_app
from oddgrass import __version__


class TestAPI(unittest.TestCase):
    """Test cases for the JSON endpoints"""

    def setUp(self):
        """Set up test fixtures"""
        self.app = create_app('testing')
        self.client = self.app.test_client()

    def test_health(self):
        response = self.client.get('/api/health')
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.get_json(), {'success': True, 'version': __version__})

    def test_compute_kostka(self):
        """Kostka matrix of degree 2"""
        response = self.client.post('/api/compute/kostka', json={'degree': 2})
        self.assertEqual(response.status_code, 200)
        data = response.get_json()
        self.assertTrue(data['success'])
        self.assertEqual(data['result']['matrix'], [[1, 1], [0, 1]])

    def test_compute_lr(self):
        response = self.client.post('/api/compute/lr', json={'lambda': [1], 'mu': [1]})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.get_json()['result']['terms'], [[[1, 1], 1], [[2], 1]])

    def test_compute_errors(self):
        """Unknown computations, missing bodies and oversized inputs are rejected"""
        cases = [
            ('/api/compute/plethysm', {'degree': 1}),
            ('/api/compute/kostka', None),
            ('/api/compute/kostka', {'degree': 5}),
            ('/api/compute/oh-rank', {'ell': 5, 'n': 1}),
            ('/api/compute/lr', {'lambda': [1]}),
            ('/api/compute/kostka', {'degree': 'two'}),
        ]
        for url, body in cases:
            with self.subTest(url=url, body=body):
                response = self.client.post(url, json=body)
                self.assertEqual(response.status_code, 400)
                self.assertFalse(response.get_json()['success'])

    def test_rouquier(self):
        response = self.client.post('/api/rouquier', json={'ell': 2, 'k': 0})
        self.assertEqual(response.status_code, 200)
        report = response.get_json()['report']
        self.assertTrue(report['passed'])
        self.assertEqual(report['homology'], {'0': '0', '1': 'q^2*pi'})

    def test_rouquier_errors(self):
        for body in ({'ell': 4, 'k': 0}, {'ell': 2, 'k': 1}, {'ell': 2}):
            with self.subTest(body=body):
                response = self.client.post('/api/rouquier', json=body)
                self.assertEqual(response.status_code, 400)
        response = self.client.post('/api/rouquier', json={'ell': 2})
        self.assertEqual(response.get_json()['error'], 'Missing required field: k')

    def test_verify(self):
        response = self.client.post('/api/verify', json={'suite': 'uqpi', 'max_ell': 1, 'max_degree': 1})
        self.assertEqual(response.status_code, 200)
        report = response.get_json()['report']
        self.assertTrue(report['passed'])
        self.assertEqual(report['parameters'], {'max_ell': 1, 'max_degree': 1, 'seed': 0})

    def test_verify_errors(self):
        for body in ({'suite': 'nope'}, {'suite': 'qpi', 'max_ell': 4}, {'suite': 'qpi', 'max_ell': 0}):
            with self.subTest(body=body):
                response = self.client.post('/api/verify', json=body)
                self.assertEqual(response.status_code, 400)
                self.assertFalse(response.get_json()['success'])


if __name__ == '__main__':
    unittest.main()
