"""
Shared pytest fixtures: the bundled graphs and a settings reset
"""

import networkx as nx
import pytest

from config import get_settings
from data_provider import MODELS, fixture, generate_graph
from graph_core import Graph


@pytest.fixture(scope="session")
def sample12():
    return fixture("sample12")


@pytest.fixture(scope="session")
def path_hub():
    return fixture("path_hub")


@pytest.fixture(scope="session")
def split14():
    return fixture("split14")


@pytest.fixture(scope="session")
def deep39():
    return fixture("deep39")


@pytest.fixture(scope="session")
def trace47():
    return fixture("trace47")


@pytest.fixture
def labeled_path():
    """Path on labels 1..n"""
    def build(n):
        return Graph.from_edges([(i, i + 1) for i in range(1, n)], vertices=range(1, n + 1))
    return build


@pytest.fixture
def nx_graph():
    """Wrap a networkx graph (labels 0..n-1)"""
    return Graph.from_networkx


@pytest.fixture
def fresh_settings(monkeypatch):
    """Re-read settings after monkeypatching the environment; restored on teardown"""
    yield lambda: get_settings(reload=True)
    monkeypatch.undo()
    get_settings(reload=True)


@pytest.fixture
def single_vertex():
    return Graph.from_networkx(nx.empty_graph(1))


@pytest.fixture
def random_graph():
    """Seeded ER, BA or tree graph with 2..max_n vertices; the model cycles with the seed"""
    def build(seed, max_n):
        model = MODELS[seed % len(MODELS)]
        n = 2 + (seed * 7919) % (max_n - 1)
        if model == "erdos_renyi":
            m = min(n * (n - 1) // 2, n + seed % n)
        elif model == "barabasi_albert":
            m = min(1 + seed % 3, n - 1)
        else:
            m = None
        return generate_graph(model, n, m, seed=seed)
    return build
