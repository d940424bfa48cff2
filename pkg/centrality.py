"""
Graph Burning Toolkit - Centrality
Eigenvector centrality by power iteration, normalised per connected component.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from config import get_settings
from errors import GraphInputError
from graph_core import Graph, components

logger = logging.getLogger(__name__)

# Grid spacing for score ties; tied vertices resolve by lowest id.
TIE_TOL = 1e-9


@dataclass(frozen=True)
class CentralityMap:
    scores: Tuple[float, ...]

    def __getitem__(self, v: int) -> float:
        return self.scores[v]

    def __len__(self) -> int:
        return len(self.scores)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.scores, dtype=float)

    def total(self, vertices: Iterable[int]) -> float:
        return float(sum(self.scores[v] for v in vertices))


def _edge_arrays(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    src = [u for u, nbrs in enumerate(g.adjacency) for _ in nbrs]
    dst = [w for nbrs in g.adjacency for w in nbrs]
    return np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)


def eigenvector_centrality(g: Graph, tol: Optional[float] = None,
                           max_iter: Optional[int] = None) -> CentralityMap:
    """
    Principal-eigenvector centrality of every vertex

    Iterates x <- (A + I)x, which has the same Perron vector as A but does
    not oscillate on bipartite components. Each component starts from the
    uniform vector 1/sqrt(n_c) and is rescaled to unit L2 norm on its own,
    so small components are not driven to zero by large ones.

    Args:
        g (Graph): The graph, possibly disconnected
        tol (float): Per-component L2 change that counts as converged
        max_iter (int): Iteration cap

    Returns:
        CentralityMap: One non-negative score per vertex
    """
    settings = get_settings()
    tol = settings.centrality_tol if tol is None else tol
    max_iter = settings.centrality_max_iter if max_iter is None else max_iter

    n = g.vertex_count
    if n == 0:
        return CentralityMap(scores=())

    comps = components(g)
    comp_of = np.empty(n, dtype=np.int64)
    for c, members in enumerate(comps):
        comp_of[list(members)] = c
    sizes = np.bincount(comp_of, minlength=len(comps)).astype(float)
    src, dst = _edge_arrays(g)

    x = 1.0 / np.sqrt(sizes[comp_of])
    delta = np.zeros(len(comps))
    for iteration in range(1, max_iter + 1):
        y = x + np.bincount(src, weights=x[dst], minlength=n)
        norms = np.sqrt(np.bincount(comp_of, weights=y * y, minlength=len(comps)))
        y /= norms[comp_of]
        delta = np.sqrt(np.bincount(comp_of, weights=(y - x) ** 2, minlength=len(comps)))
        x = y
        if delta.max() < tol:
            logger.debug("Centrality converged after %d iterations (n=%d)", iteration, n)
            break
    else:
        stuck = [comps[c] for c in np.flatnonzero(delta >= tol)]
        logger.info("Power iteration left %d component(s) unconverged after %d iterations (n=%d)",
                    len(stuck), max_iter, n)
        for members in stuck:
            _dense_solve(g, sorted(members), x, settings.centrality_dense_limit)

    return CentralityMap(scores=tuple(float(s) for s in x))


def _dense_solve(g: Graph, members: List[int], x: np.ndarray, limit: int) -> None:
    """Overwrite x on one component with the top eigenvector of its dense A + I block"""
    if len(members) > limit:
        logger.warning("Component of %d vertices exceeds the dense limit %d; keeping the power iterate",
                       len(members), limit)
        return
    local = {v: i for i, v in enumerate(members)}
    block = np.eye(len(members))
    for v in members:
        for w in g.adjacency[v]:
            block[local[v], local[w]] = 1.0
    _, vectors = np.linalg.eigh(block)
    top = np.abs(vectors[:, -1])
    x[members] = top / np.linalg.norm(top)


def compare_scores(a: float, b: float) -> int:
    """Three-way compare with the tie tolerance"""
    if abs(a - b) <= TIE_TOL:
        return 0
    return -1 if a < b else 1


def score_key(score: float) -> int:
    """Score snapped to the TIE_TOL grid, so near-equal scores compare equal transitively"""
    return round(score / TIE_TOL)


def _pick(vertices: Iterable[int], cent: CentralityMap, sign: int) -> int:
    vertices = list(vertices)
    if not vertices:
        raise GraphInputError("Cannot select a vertex from an empty graph")
    return min(vertices, key=lambda v: (-sign * score_key(cent[v]), v))


def argmax_vertex(vertices: Iterable[int], cent: CentralityMap) -> int:
    """Highest-scoring vertex, lowest id on ties"""
    return _pick(vertices, cent, 1)


def argmin_vertex(vertices: Iterable[int], cent: CentralityMap) -> int:
    """Lowest-scoring vertex, lowest id on ties"""
    return _pick(vertices, cent, -1)


def by_decreasing_centrality(vertices: Iterable[int], cent: CentralityMap) -> List[int]:
    """Vertices sorted by score, highest first, ids ascending within ties"""
    return sorted(vertices, key=lambda v: (-score_key(cent[v]), v))


def min_central_node(g: Graph, cent: Optional[CentralityMap] = None) -> int:
    """
    Vertex of minimum centrality (lowest id on ties)

    Raises:
        GraphInputError: The graph is empty
    """
    if g.is_empty():
        raise GraphInputError("min_central_node on an empty graph")
    if cent is None:
        cent = eigenvector_centrality(g)
    return argmin_vertex(range(g.vertex_count), cent)


def max_central_node(g: Graph, cent: Optional[CentralityMap] = None) -> int:
    """
    Vertex of maximum centrality over the whole graph (lowest id on ties)

    Raises:
        GraphInputError: The graph is empty
    """
    if g.is_empty():
        raise GraphInputError("max_central_node on an empty graph")
    if cent is None:
        cent = eigenvector_centrality(g)
    return argmax_vertex(range(g.vertex_count), cent)
