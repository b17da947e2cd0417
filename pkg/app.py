"""
Odd Grassmannian toolkit web API
Main entry point using Flask framework
"""

from flask import Flask, request, jsonify
import os
import logging
from config import config
from oddgrass import __version__
from oddgrass.cli import compute, rouquier_report
from oddgrass.utils import save_report
from oddgrass.verify import SUITES, run_suite

COMPUTATIONS = ('kostka', 'lr', 'schur-expand', 'schubert', 'oh-rank', 'trace-gram')


def _require_int(data, field, default=None):
    value = data.get(field, default)
    if value is None:
        raise ValueError(f"Missing required field: {field}")
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"Field {field} must be an integer, got {value!r}")
    return value


def create_app(config_name='default'):
    """Application factory function"""
    app = Flask(__name__)

    # Load configuration
    app.config.from_object(config[config_name])

    # Setup logging
    if app.config.get('LOG_TO_FILE'):
        log_dir = os.path.dirname(app.config['LOG_FILE'])
        if not os.path.exists(log_dir):
            os.makedirs(log_dir)

        file_handler = logging.FileHandler(app.config['LOG_FILE'])
        file_handler.setLevel(getattr(logging, app.config['LOG_LEVEL']))
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        ))
        app.logger.addHandler(file_handler)
        logging.getLogger('oddgrass').addHandler(file_handler)
    app.logger.setLevel(getattr(logging, app.config['LOG_LEVEL'], logging.INFO))

    def persist(report):
        directory = app.config.get('ODDGRASS_CACHE_DIR')
        if directory:
            save_report(report, directory)

    @app.route('/api/health')
    def api_health():
        """Liveness check"""
        return jsonify({'success': True, 'version': __version__})

    @app.route('/api/compute/<subcommand>', methods=['POST'])
    def api_compute(subcommand):
        """API endpoint for the table computations"""
        try:
            if subcommand not in COMPUTATIONS:
                return jsonify({'success': False, 'error': f'Unknown computation: {subcommand}'}), 400
            data = request.get_json(silent=True)
            if not data:
                return jsonify({'success': False, 'error': 'No JSON data provided'}), 400

            max_ell = app.config.get('MAX_ELL', 4)
            if 'ell' in data and _require_int(data, 'ell') > max_ell + 1:
                return jsonify({'success': False, 'error': f'ell too large (max {max_ell + 1})'}), 400
            max_degree = app.config.get('MAX_DEGREE', 8)
            if 'degree' in data and _require_int(data, 'degree') > max_degree:
                return jsonify({'success': False, 'error': f'degree too large (max {max_degree})'}), 400

            result, _, _ = compute(subcommand, data)
            return jsonify({'success': True, 'result': result})

        except Exception as e:
            app.logger.error(f"Computation error: {str(e)}")
            return jsonify({
                'success': False,
                'error': str(e)
            }), 400

    @app.route('/api/rouquier', methods=['POST'])
    def api_rouquier():
        """API endpoint for the specialized singular Rouquier complex"""
        try:
            data = request.get_json(silent=True)
            if not data:
                return jsonify({'success': False, 'error': 'No JSON data provided'}), 400

            ell = _require_int(data, 'ell')
            k = _require_int(data, 'k')
            max_ell = app.config.get('MAX_ELL', 4)
            if ell > max_ell:
                return jsonify({'success': False, 'error': f'ell too large (max {max_ell})'}), 400

            report = rouquier_report(ell, k)
            persist(report)
            return jsonify({'success': True, 'report': report})

        except Exception as e:
            app.logger.error(f"Rouquier error: {str(e)}")
            return jsonify({
                'success': False,
                'error': str(e)
            }), 400

    @app.route('/api/verify', methods=['POST'])
    def api_verify():
        """API endpoint for the invariant suites"""
        try:
            data = request.get_json(silent=True)
            if not data:
                return jsonify({'success': False, 'error': 'No JSON data provided'}), 400

            suite = data.get('suite')
            if suite not in SUITES + ('all',):
                return jsonify({'success': False, 'error': f'Unknown suite: {suite}'}), 400
            max_ell = _require_int(data, 'max_ell', app.config.get('MAX_ELL', 4))
            max_degree = _require_int(data, 'max_degree', app.config.get('MAX_DEGREE', 8))
            seed = _require_int(data, 'seed', app.config.get('DEFAULT_SEED', 0))
            if max_ell > app.config.get('MAX_ELL', 4):
                return jsonify({'success': False, 'error': f"max_ell too large (max {app.config.get('MAX_ELL', 4)})"}), 400

            report = run_suite(suite, max_ell, max_degree, seed)
            persist(report)
            return jsonify({'success': True, 'report': report})

        except Exception as e:
            app.logger.error(f"Verification error: {str(e)}")
            return jsonify({
                'success': False,
                'error': str(e)
            }), 400

    return app

# Create app instance
app = create_app(os.environ.get('FLASK_ENV', 'development'))

if __name__ == '__main__':
    app.run(
        debug=app.config['DEBUG'],
        host=app.config['HOST'],
        port=app.config['PORT']
    )
