"""
Command line interface: computations, the Rouquier complex and the invariant suites

    python -m oddgrass.cli compute kostka --degree 3
    python -m oddgrass.cli rouquier --ell 2 --k 0 --format text
    python -m oddgrass.cli verify --suite qpi
"""

import json
import logging
import os
import sys

import click

from . import osym, rouquier
from .combinatorics import partition
from .grass_cohomology import oh_rank, trace_gram
from .onh import schubert
from .uqpi import euler_target
from .utils import (format_matrix, format_report_text, partition_label, rows_to_csv, rows_to_text,
                    save_report)
from .verify import (DEFAULT_MAX_DEGREE, DEFAULT_MAX_ELL, SCHEMA_VERSION, SUITES, first_failure,
                     run_suite)

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'text')
LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'


def load_settings():
    """
    Settings from the configuration classes, selected by ODDGRASS_ENV

    Falls back to the library defaults when the configuration module is not
    importable (the package used without the repository root on the path).
    """
    try:
        from config import config as configs
    except ImportError:
        return {'MAX_ELL': DEFAULT_MAX_ELL, 'MAX_DEGREE': DEFAULT_MAX_DEGREE, 'DEFAULT_SEED': 0,
                'ODDGRASS_CACHE_DIR': os.environ.get('ODDGRASS_CACHE_DIR'),
                'LOG_LEVEL': os.environ.get('LOG_LEVEL', 'INFO')}
    settings = configs.get(os.environ.get('ODDGRASS_ENV', 'default'), configs['default'])
    return {key: getattr(settings, key) for key in
            ('MAX_ELL', 'MAX_DEGREE', 'DEFAULT_SEED', 'ODDGRASS_CACHE_DIR', 'LOG_LEVEL')}


def parse_partition(text):
    """Parse '2,1' (or '' for the empty partition) into a partition tuple"""
    text = (text or '').strip()
    if not text:
        return ()
    try:
        parts = [int(p) for p in text.split(',')]
    except ValueError as e:
        raise ValueError(f"Cannot parse partition {text!r}") from e
    return partition(parts)


def parse_permutation(text):
    try:
        return tuple(int(p) for p in text.split(','))
    except ValueError as e:
        raise ValueError(f"Cannot parse permutation {text!r}") from e


def _terms(coeffs):
    return [[list(lam), c] for lam, c in sorted(coeffs.items(), key=lambda kv: (sum(kv[0]), kv[0]))]


def compute(subcommand, params):
    """
    Run one of the table computations

    Args:
        subcommand: 'kostka', 'lr', 'schur-expand', 'schubert', 'oh-rank'
            or 'trace-gram'
        params: Dictionary of parameters (degree, lambda, mu, basis, perm,
            ell, n), strings or already parsed values

    Returns:
        (result, header, rows): a JSON-ready result and its tabular form

    Raises:
        ValueError: for an unknown subcommand or invalid parameters
    """
    def need(key):
        if params.get(key) is None:
            raise ValueError(f"Missing required parameter: {key}")
        return params[key]

    def as_partition(key):
        value = need(key)
        return partition(value) if isinstance(value, (list, tuple)) else parse_partition(str(value))

    if subcommand == 'kostka':
        degree = int(need('degree'))
        parts, matrix = osym.kostka_matrix(degree)
        header, rows = format_matrix(parts, matrix)
        return {'degree': degree, 'partitions': [list(p) for p in parts], 'matrix': matrix}, header, rows

    if subcommand == 'lr':
        lam, mu = as_partition('lambda'), as_partition('mu')
        coeffs = osym.lr(lam, mu)
        rows = [[partition_label(nu), c] for nu, c in _terms(coeffs)]
        return {'lambda': list(lam), 'mu': list(mu), 'terms': _terms(coeffs)}, ['nu', 'coefficient'], rows

    if subcommand == 'schur-expand':
        lam = as_partition('lambda')
        basis = params.get('basis') or 'h'
        if basis == 'h':
            element = osym.h_basis(lam)
        elif basis == 'e':
            element = osym.e_basis_element(lam)
        else:
            raise ValueError(f"Basis must be 'h' or 'e', got {basis!r}")
        coeffs = osym.to_schur(element)
        rows = [[partition_label(nu), c] for nu, c in _terms(coeffs)]
        return {'lambda': list(lam), 'basis': basis, 'terms': _terms(coeffs)}, ['nu', 'coefficient'], rows

    if subcommand == 'schubert':
        perm = need('perm')
        w = tuple(perm) if isinstance(perm, (list, tuple)) else parse_permutation(str(perm))
        poly = schubert(w)
        rows = [[' '.join(str(e) for e in kappa), c] for kappa, c in sorted(poly.coeffs.items())]
        return {'perm': list(w), 'polynomial': poly.to_json(), 'text': str(poly)}, ['exponents', 'coefficient'], rows

    if subcommand == 'oh-rank':
        ell, n = int(need('ell')), int(need('n'))
        rank = oh_rank(n, ell)
        return {'ell': ell, 'n': n, 'rank': str(rank), 'terms': rank.to_json()}, ['ell', 'n', 'rank'], [[ell, n, str(rank)]]

    if subcommand == 'trace-gram':
        ell, n = int(need('ell')), int(need('n'))
        basis, matrix = trace_gram(n, ell)
        header, rows = format_matrix(basis, matrix)
        return {'ell': ell, 'n': n, 'partitions': [list(p) for p in basis], 'matrix': matrix}, header, rows

    raise ValueError(f"Unknown computation {subcommand!r}")


def rouquier_report(ell, k):
    """Build the specialized complex at (ell, k) and wrap its checks into a report"""
    result = rouquier.verify_src(ell, k)
    return {
        'suite': 'rouquier',
        'parameters': {'ell': ell, 'k': k},
        'n': result['n'],
        'dimensions': result['dimensions'],
        'ranks': result['ranks'],
        'homology': result['homology'],
        'euler': result['euler'],
        'euler_target': str(euler_target(ell, k)),
        'checks': result['checks'],
        'passed': result['passed'],
        'schema_version': SCHEMA_VERSION,
    }


def _rouquier_rows(report):
    rows = []
    for d in sorted(report['dimensions'], key=int):
        rows.append([int(d), report['dimensions'][d], report['ranks'][d], report['homology'].get(d, '0')])
    return ['degree', 'superdimension', 'rank', 'homology'], rows


def _emit(result, header, rows, fmt, text=None):
    if fmt == 'json':
        click.echo(json.dumps(result, indent=2, sort_keys=True))
    elif fmt == 'csv':
        click.echo(rows_to_csv(header, rows), nl=False)
    else:
        click.echo(text if text is not None else rows_to_text(header, rows), nl=text is not None)


def _persist(report, settings):
    directory = settings.get('ODDGRASS_CACHE_DIR')
    if directory:
        path = save_report(report, directory)
        logger.info("Report written to %s", path)


@click.group()
@click.option('--verbose', is_flag=True, help='Log at DEBUG level')
@click.pass_context
def main(ctx, verbose):
    """Odd symmetric functions, odd Grassmannian bimodules and the singular Rouquier complex"""
    settings = load_settings()
    level = 'DEBUG' if verbose else settings.get('LOG_LEVEL', 'INFO')
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.INFO), format=LOG_FORMAT,
                        force=True)
    ctx.obj = settings


@main.command('compute')
@click.argument('subcommand', type=click.Choice(['kostka', 'lr', 'schur-expand', 'schubert', 'oh-rank', 'trace-gram']))
@click.option('--degree', type=int, help='Degree for kostka')
@click.option('--lambda', 'lam', help='Partition such as 2,1')
@click.option('--mu', help='Partition such as 1')
@click.option('--basis', type=click.Choice(['h', 'e']), default='h', help='Basis element expanded by schur-expand')
@click.option('--perm', help='Permutation in one-line notation, e.g. 2,1,3')
@click.option('--ell', type=int)
@click.option('--n', type=int)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json')
def compute_command(subcommand, degree, lam, mu, basis, perm, ell, n, fmt):
    """Emit a table: Kostka matrix, LR coefficients, Schur expansion, Schubert polynomial, OH rank or trace Gram matrix"""
    params = {'degree': degree, 'lambda': lam, 'mu': mu, 'basis': basis, 'perm': perm, 'ell': ell, 'n': n}
    try:
        result, header, rows = compute(subcommand, params)
    except ValueError as e:
        raise click.UsageError(str(e))
    _emit(result, header, rows, fmt)


@main.command('rouquier')
@click.option('--ell', type=int, required=True)
@click.option('--k', type=int, required=True)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='json')
@click.option('--matrix', 'matrix_degree', type=int, default=None,
              help='Dump the differential out of this homological degree as CSV instead')
@click.pass_obj
def rouquier_command(settings, ell, k, fmt, matrix_degree):
    """Build the specialized singular Rouquier complex and check its homology"""
    try:
        if matrix_degree is not None:
            complex_ = rouquier.build_complex(ell, k)
            header, rows = rouquier.differential_rows(complex_, matrix_degree)
            click.echo(rows_to_csv(header, rows), nl=False)
            return
        report = rouquier_report(ell, k)
    except ValueError as e:
        raise click.UsageError(str(e))
    _persist(report, settings)
    header, rows = _rouquier_rows(report)
    text = None
    if fmt == 'text':
        lines = [f"ell={ell} k={k} n={report['n']}"]
        lines += rows_to_text(header, rows).splitlines()
        lines.append(f"Euler characteristic: {report['euler']} (expected {report['euler_target']})")
        text = '\n'.join(lines + [''] + format_report_text(report).splitlines())
    _emit(report, header, rows, fmt, text)
    if not report['passed']:
        name, witness = first_failure(report)
        click.echo(f"FAILED {name}: {witness}", err=True)
        sys.exit(1)


@main.command('verify')
@click.option('--suite', type=click.Choice(SUITES + ('all',)), default='all')
@click.option('--max-ell', type=int, default=None)
@click.option('--max-degree', type=int, default=None)
@click.option('--seed', type=int, default=None)
@click.option('--format', 'fmt', type=click.Choice(FORMATS), default='text')
@click.option('--timings', is_flag=True, help='Record the elapsed time of every check')
@click.pass_obj
def verify_command(settings, suite, max_ell, max_degree, seed, fmt, timings):
    """Run an invariant suite; exit code 0 iff every check passes"""
    max_ell = settings['MAX_ELL'] if max_ell is None else max_ell
    max_degree = settings['MAX_DEGREE'] if max_degree is None else max_degree
    seed = settings['DEFAULT_SEED'] if seed is None else seed
    try:
        report = run_suite(suite, max_ell, max_degree, seed, timings)
    except ValueError as e:
        raise click.BadParameter(str(e))
    _persist(report, settings)
    rows = [[c['name'], 'pass' if c['passed'] else 'FAIL', c['witness'] or ''] for c in report['checks']]
    _emit(report, ['check', 'status', 'witness'], rows, fmt, format_report_text(report))
    if not report['passed']:
        name, witness = first_failure(report)
        click.echo(f"FAILED {name}: {witness}", err=True)
        sys.exit(1)


if __name__ == '__main__':
    main()
