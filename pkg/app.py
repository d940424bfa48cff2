"""
Graph Burning Toolkit - Flask Web Application
JSON API for estimating burning numbers, validating sequences and generating graphs
"""

import logging
import os
import time

from flask import Flask, jsonify, request

from bench import SOLVERS, solve
from burning import BurningSequence, burned_by_sequence, is_valid_burning_sequence
from config import configure_logging, get_settings
from data_provider import FIXTURES, fixture, fixture_names, generate_graph
from errors import BurningError, InfeasibleBudgetError
from graph_core import Graph

logger = logging.getLogger(__name__)

app = Flask(__name__)


def _check_label(label, where: str):
    # JSON labels must be hashable scalars; true/false would alias 1/0
    if isinstance(label, bool) or not isinstance(label, (int, str)):
        raise BurningError(f"Bad vertex label {label!r} in {where}; expected an integer or a string")
    return label


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def graph_from_payload(data: dict) -> Graph:
    """Graph from {"fixture": name} or {"edges": [[u, v], ...], "vertices": [...]}"""
    if data.get('fixture'):
        return fixture(str(data['fixture']))
    edges = data.get('edges')
    if not isinstance(edges, list):
        raise BurningError("Request needs 'edges' (list of pairs) or 'fixture'")
    pairs = []
    for edge in edges:
        if not isinstance(edge, (list, tuple)) or len(edge) != 2:
            raise BurningError(f"Bad edge {edge!r}; expected [u, v]")
        pairs.append((_check_label(edge[0], 'edges'), _check_label(edge[1], 'edges')))
    vertices = data.get('vertices', [])
    if not isinstance(vertices, list):
        raise BurningError("'vertices' must be a list of labels")
    return Graph.from_edges(pairs, vertices=[_check_label(v, 'vertices') for v in vertices])


def error_response(message: str, status: int = 400):
    return jsonify({'success': False, 'error': message}), status


@app.errorhandler(BurningError)
def handle_burning_error(e):
    return error_response(str(e), 422 if isinstance(e, InfeasibleBudgetError) else 400)


@app.route('/')
def index():
    """Service summary"""
    return jsonify({
        'success': True,
        'service': 'graph-burning',
        'endpoints': ['/api/algorithms', '/api/fixtures', '/api/solve', '/api/validate', '/api/generate'],
    })


@app.route('/api/algorithms')
def api_algorithms():
    """Names accepted by /api/solve"""
    return jsonify({'success': True, 'algorithms': list(SOLVERS)})


@app.route('/api/fixtures')
def api_fixtures():
    """Bundled fixture graphs with their sizes"""
    items = []
    for name in fixture_names():
        g = fixture(name)
        items.append({
            'name': name,
            'description': FIXTURES[name]['description'],
            'burning_number': FIXTURES[name]['burning_number'],
            'n': g.vertex_count,
            'm': g.edge_count,
        })
    return jsonify({'success': True, 'fixtures': items})


@app.route('/api/solve', methods=['POST'])
def api_solve():
    """Estimate the burning number of a posted graph"""
    data = request.get_json(silent=True) or {}
    g = graph_from_payload(data)
    if g.is_empty():
        return error_response('Graph has no vertices')
    algo = data.get('algo', 'bbgh')
    budget = data.get('budget')
    if budget is not None and not _is_int(budget):
        return error_response("'budget' must be an integer")

    start = time.perf_counter()
    solution = solve(g, algo, budget=budget, linear=bool(data.get('linear', False)))
    elapsed = (time.perf_counter() - start) * 1000.0

    return jsonify({
        'success': True,
        'algo': algo,
        'n': g.vertex_count,
        'm': g.edge_count,
        'estimate': solution.estimate,
        'sequence': list(solution.sequence.sources),
        'budget': solution.sequence.budget,
        'calls': solution.calls,
        'ms': round(elapsed, 2),
    })


@app.route('/api/validate', methods=['POST'])
def api_validate():
    """Check a burning sequence against a posted graph"""
    data = request.get_json(silent=True) or {}
    g = graph_from_payload(data)
    labels = data.get('sequence')
    if not isinstance(labels, list):
        return error_response("Request needs 'sequence' (list of vertex labels)")
    budget = data.get('budget')
    if budget is not None and not _is_int(budget):
        return error_response("'budget' must be an integer")
    labels = [_check_label(label, 'sequence') for label in labels]
    seq = BurningSequence(sources=tuple(labels), budget=budget or len(labels))
    strict = bool(data.get('strict', False))
    valid = is_valid_burning_sequence(g, seq, strict=strict)
    uncovered = set(g.labels) - burned_by_sequence(g, seq)
    return jsonify({
        'success': True,
        'valid': valid,
        'strict': strict,
        'budget': seq.budget,
        'uncovered': sorted(uncovered, key=str),
    })


@app.route('/api/generate', methods=['POST'])
def api_generate():
    """Generate a random graph and return its edge list"""
    data = request.get_json(silent=True) or {}
    try:
        n = int(data.get('n', 0))
        m = None if data.get('m') is None else int(data['m'])
        seed = int(data.get('seed', 0))
    except (TypeError, ValueError):
        return error_response("'n', 'm' and 'seed' must be integers")
    g = generate_graph(str(data.get('model', '')), n, m, seed=seed)
    return jsonify({
        'success': True,
        'n': g.vertex_count,
        'm': g.edge_count,
        'edges': [list(edge) for edge in g.to_edges()],
    })


if __name__ == '__main__':
    configure_logging()
    port = int(os.environ.get('PORT', get_settings().port))
    app.run(host='0.0.0.0', port=port, debug=False)
