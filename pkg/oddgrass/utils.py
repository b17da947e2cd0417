"""
Utility functions for reports: JSON persistence, text and CSV rendering
"""

import csv
import io
import json
import logging
import os

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ('suite', 'parameters', 'checks', 'schema_version')


def validate_report(report):
    """
    Validate a report dictionary

    Args:
        report: Dictionary produced by a suite or the Rouquier command

    Returns:
        True if valid, raises ValueError if invalid
    """
    if not isinstance(report, dict):
        raise ValueError(f"A report must be a JSON object, got {type(report).__name__}")
    for field in REQUIRED_FIELDS:
        if field not in report:
            raise ValueError(f"Missing required field: {field}")
    if not isinstance(report['checks'], list):
        raise ValueError("The checks field must be a list")
    for check in report['checks']:
        if not isinstance(check, dict) or 'name' not in check or 'passed' not in check:
            raise ValueError(f"Malformed check record: {check!r}")
    return True


def report_filename(report):
    """<suite>-<key>-<value>...json, parameters in sorted order"""
    pieces = [str(report['suite'])]
    for key, value in sorted(report['parameters'].items()):
        pieces.append(f"{key}-{value}")
    return '-'.join(pieces).replace('_', '') + '.json'


def save_report(report, directory):
    """
    Save a report to a JSON file

    Args:
        report: Report dictionary
        directory: Target directory, created when missing

    Returns:
        Path of the written file
    """
    validate_report(report)
    os.makedirs(directory, exist_ok=True)
    filepath = os.path.join(directory, report_filename(report))
    with open(filepath, 'w') as f:
        json.dump(report, f, indent=2, sort_keys=True)
    logger.info("Saved report to %s", filepath)
    return filepath


def load_report(filepath):
    """
    Load a report from a JSON file

    Args:
        filepath: Path to JSON file

    Returns:
        Report dictionary
    """
    with open(filepath, 'r') as f:
        report = json.load(f)
    validate_report(report)
    return report


def format_checks(report):
    """
    Format the checks of a report for display

    Returns:
        List of lines, one per check
    """
    lines = []
    for check in report['checks']:
        status = 'PASS' if check['passed'] else 'FAIL'
        line = f"[{status}] {check['name']}"
        if check.get('witness'):
            line += f": {check['witness']}"
        lines.append(line)
    return lines


def format_report_text(report):
    params = ', '.join(f"{k}={v}" for k, v in sorted(report['parameters'].items()))
    total = len(report['checks'])
    failed = sum(1 for check in report['checks'] if not check['passed'])
    header = f"Suite {report['suite']} ({params}): {total - failed}/{total} checks passed"
    return '\n'.join([header] + format_checks(report))


def rows_to_csv(header, rows):
    """Render a header and rows as CSV text"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def rows_to_text(header, rows):
    """Render a header and rows as tab-separated lines, cells kept whole"""
    return ''.join('\t'.join(str(cell) for cell in row) + '\n' for row in [header] + list(rows))


def format_matrix(labels, matrix):
    """Header and rows for a square matrix indexed by partition labels"""
    names = [partition_label(lam) for lam in labels]
    header = [''] + names
    rows = [[names[i]] + list(row) for i, row in enumerate(matrix)]
    return header, rows


def partition_label(lam):
    return '(' + ','.join(str(p) for p in lam) + ')'
