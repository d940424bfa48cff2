"""
Graph Burning Toolkit - Greedy Selectors
Backbone Based Greedy Heuristic (BBGH) and Improved Cutting Corners Heuristic (ICCH).

Both pick the next source for a given radius r on the current residual
graph. Centrality is recomputed on whatever graph they are handed.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from centrality import (
    CentralityMap,
    argmax_vertex,
    argmin_vertex,
    by_decreasing_centrality,
    compare_scores,
    eigenvector_centrality,
)
from errors import GraphInputError, NoPathError
from graph_core import Graph, ball_size, closed_ball, components, shortest_path, subgraph

logger = logging.getLogger(__name__)

WHITE, GREY, BLACK = "white", "grey", "black"


@dataclass(frozen=True)
class BackbonePath:
    """Deepest-first BFS path ending at the component's least central vertex"""
    vertices: Tuple[int, ...]
    total_centrality: float

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class BfsNodeState:
    d: int = 0
    cs: float = 0.0
    parent: Optional[int] = None
    colour: str = WHITE


PathMatrix = List[List[int]]


def _restrict(cent: CentralityMap, kept: List[int]) -> CentralityMap:
    return CentralityMap(scores=tuple(cent[v] for v in kept))


def backbone_path(comp: Graph, cent: Optional[CentralityMap] = None) -> BackbonePath:
    """
    Backbone path of one connected component

    BFS runs from the minimum-centrality vertex. When a grey vertex is
    reached again from the same level, its parent is switched if that
    raises its centrality sum. The terminal vertex is the deepest one,
    then the one with the largest sum, then the lowest id.

    Args:
        comp (Graph): A connected, non-empty graph
        cent (CentralityMap): Centrality of comp, computed when omitted

    Returns:
        BackbonePath: Vertices from terminal back to root
    """
    if comp.is_empty():
        raise GraphInputError("backbone_path needs a non-empty component")
    if len(components(comp)) != 1:
        raise GraphInputError("backbone_path needs a connected component")
    if cent is None:
        cent = eigenvector_centrality(comp)

    root = argmin_vertex(range(comp.vertex_count), cent)
    state: Dict[int, BfsNodeState] = {v: BfsNodeState() for v in range(comp.vertex_count)}
    state[root] = BfsNodeState(d=0, cs=cent[root], parent=None, colour=GREY)
    queue = deque([root])
    while queue:
        u = queue.popleft()
        su = state[u]
        for w in comp.adjacency[u]:
            sw = state[w]
            if sw.colour == WHITE:
                sw.colour = GREY
                sw.d = su.d + 1
                sw.cs = su.cs + cent[w]
                sw.parent = u
                queue.append(w)
            elif sw.colour == GREY and sw.d == su.d + 1:
                if compare_scores(su.cs + cent[w], sw.cs) > 0:
                    sw.cs = su.cs + cent[w]
                    sw.parent = u
        su.colour = BLACK

    terminal = root
    for v in range(comp.vertex_count):
        sv, st = state[v], state[terminal]
        if sv.d > st.d or (sv.d == st.d and compare_scores(sv.cs, st.cs) > 0):
            terminal = v

    path = [terminal]
    while state[path[-1]].parent is not None:
        path.append(state[path[-1]].parent)
    return BackbonePath(vertices=tuple(path), total_centrality=cent.total(path))


def component_backbones(g: Graph, cent: Optional[CentralityMap] = None) -> List[BackbonePath]:
    """Backbone path of every component, expressed in g's vertex ids"""
    if cent is None:
        cent = eigenvector_centrality(g)
    result = []
    for comp in components(g):
        kept = sorted(comp)
        local = backbone_path(subgraph(g, kept), _restrict(cent, kept))
        result.append(BackbonePath(
            vertices=tuple(kept[v] for v in local.vertices),
            total_centrality=local.total_centrality,
        ))
    return result


def best_backbone(paths: List[BackbonePath]) -> BackbonePath:
    """Longest path, then largest total centrality; the first one wins ties"""
    best = paths[0]
    for path in paths[1:]:
        if len(path) > len(best):
            best = path
        elif len(path) == len(best) and compare_scores(path.total_centrality, best.total_centrality) > 0:
            best = path
    return best


def _largest_ball(g: Graph, candidates: List[int], r: int) -> int:
    best, best_size = candidates[0], -1
    for v in candidates:
        size = ball_size(g, v, r)
        if size > best_size:
            best, best_size = v, size
    return best


def bbgh_best_central_node(g: Graph, r: int, all_components: bool = False) -> int:
    """
    BBGH selector

    Takes the single best backbone path over all components and returns
    the path vertex with the largest r-ball, scanning in decreasing
    centrality so the most central vertex wins ties.

    Args:
        g (Graph): Current residual graph
        r (int): Burning radius for this step
        all_components (bool): Scan the backbone of every component
            instead of only the best one

    Returns:
        int: Vertex id in g
    """
    if g.is_empty():
        raise GraphInputError("bbgh_best_central_node on an empty graph")
    cent = eigenvector_centrality(g)
    paths = component_backbones(g, cent)
    if all_components:
        pool = [v for path in paths for v in path.vertices]
    else:
        pool = list(best_backbone(paths).vertices)
    pick = _largest_ball(g, by_decreasing_centrality(pool, cent), r)
    logger.debug("BBGH r=%d picked %r", r, g.label(pick))
    return pick


def bbgh_all_best_central_node(g: Graph, r: int) -> int:
    return bbgh_best_central_node(g, r, all_components=True)


def _pivot_path(g: Graph, v: int, src: int, cent: CentralityMap) -> List[int]:
    try:
        return shortest_path(g, v, src)
    except NoPathError:
        # src sits in a component of g that v cannot reach
        own = next(c for c in components(g) if src in c)
        return shortest_path(g, argmax_vertex(own, cent), src)


def path_matrix(g: Graph, v: int, removed: frozenset, cent: CentralityMap) -> PathMatrix:
    """One shortest path per component of g minus removed, to its least central vertex"""
    rest = (u for u in range(g.vertex_count) if u not in removed)
    return [
        _pivot_path(g, v, argmin_vertex(comp, cent), cent)
        for comp in components(g, vertices=rest)
    ]


def top_r_by_degree(g: Graph, column: List[int], r: int) -> List[int]:
    """Up to r distinct column vertices of highest degree in g, lowest id on ties"""
    return sorted(set(column), key=lambda u: (-g.degree(u), u))[:r]


def icch_best_central_node(g: Graph, r: int) -> int:
    """
    ICCH selector

    Starts from the most central vertex v and its r-ball S. If S leaves
    anything behind, the path matrix towards every leftover component is
    built and the top r vertices by degree of each column become
    candidates. A candidate is scored by how many vertices its r-ball
    reaches outside S, against |S| for v itself; later candidates win ties.

    Args:
        g (Graph): Current residual graph
        r (int): Burning radius for this step

    Returns:
        int: Vertex id in g
    """
    if g.is_empty():
        raise GraphInputError("icch_best_central_node on an empty graph")
    cent = eigenvector_centrality(g)
    v = argmax_vertex(range(g.vertex_count), cent)
    ball = closed_ball(g, v, r)
    if len(ball) == g.vertex_count:
        return v

    matrix = path_matrix(g, v, ball, cent)
    candidates = [v]
    width = max(len(row) for row in matrix)
    for c in range(width):
        column = [row[c] for row in matrix if len(row) > c]
        candidates.extend(top_r_by_degree(g, column, r))

    best, best_gain = v, len(ball)
    for u in candidates[1:]:
        gain = ball_size(g, u, r, excluding=ball)
        if gain >= best_gain:
            best, best_gain = u, gain
    logger.debug("ICCH r=%d picked %r from %d candidates", r, g.label(best), len(candidates))
    return best
