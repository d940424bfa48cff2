"""
Graph Burning Toolkit - Approximation Baselines
3-approximation for general graphs, 2-approximation for trees and the spanning-tree route.
"""

import logging
from collections import deque
from typing import Callable, Dict, List, Optional, Set, Tuple

from burning import BurningSequence, burning_upper_bound, is_valid_burning_sequence
from errors import GraphInputError
from graph_core import Graph, closed_ball, component_center, components, is_connected, is_forest

logger = logging.getLogger(__name__)

Attempt = Callable[[int], Optional[List[int]]]


def _bfs_tree(g: Graph, root: int, neighbors: List[Set[int]],
              depth: Dict[int, int], parent: Dict[int, Optional[int]]) -> None:
    depth[root], parent[root] = 0, None
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w in depth:
                continue
            depth[w], parent[w] = depth[u] + 1, u
            neighbors[u].add(w)
            neighbors[w].add(u)
            queue.append(w)


def spanning_forest(g: Graph) -> Graph:
    """BFS spanning tree of every component, rooted at its center; ids and labels unchanged"""
    neighbors: List[Set[int]] = [set() for _ in range(g.vertex_count)]
    depth: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    for comp in components(g):
        _bfs_tree(g, component_center(g, comp), neighbors, depth, parent)
    return Graph.from_neighbor_sets(g.labels, neighbors)


def spanning_tree(g: Graph) -> Graph:
    """
    BFS spanning tree rooted at a minimum-eccentricity vertex

    Raises:
        GraphInputError: g is empty or disconnected
    """
    if not is_connected(g):
        raise GraphInputError("spanning_tree needs a connected, non-empty graph")
    return spanning_forest(g)


def _binary_search(upper: int, attempt: Attempt) -> Tuple[int, List[int]]:
    """Smallest k in [1, upper] (by binary search) whose attempt yields centers"""
    lo, hi = 1, upper
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        centers = attempt(mid)
        if centers is not None:
            best, hi = (mid, centers), mid - 1
        else:
            lo = mid + 1
    if best is None:
        raise GraphInputError(f"No guess up to {upper} succeeded")
    return best


def _finish(g: Graph, centers: List[int], limit: int) -> Tuple[int, BurningSequence]:
    """Shortest budget up to limit that the centers burn g in, padded to that budget"""
    labels = tuple(g.label(v) for v in centers)
    for budget in range(max(1, len(centers)), limit + 1):
        if is_valid_burning_sequence(g, BurningSequence(sources=labels, budget=budget)):
            break
    else:
        raise GraphInputError(f"Centers do not burn the graph within {limit} steps")

    covered: Set[int] = set()
    for i, v in enumerate(centers):
        covered |= closed_ball(g, v, budget - i - 1)
    chosen = set(centers)
    spare = [v for v in range(g.vertex_count) if v not in covered and v not in chosen]
    spare += [v for v in range(g.vertex_count) if v in covered and v not in chosen]
    padded = list(centers) + spare[:budget - len(centers)]
    return budget, BurningSequence(sources=tuple(g.label(v) for v in padded), budget=budget)


def aprx3_burning(g: Graph) -> Tuple[int, BurningSequence]:
    """
    3-approximation for general graphs

    For a guess k, the lowest-id uncovered vertex becomes a center and its
    2(k - 1)-ball is marked covered. More than k centers means bn > k. With
    at most k centers any order burns g in 3k - 2 steps; the shortest budget
    that actually works is reported.

    Returns:
        tuple: (estimate, BurningSequence)
    """
    if g.is_empty():
        raise GraphInputError("aprx3_burning on an empty graph")

    def attempt(k: int) -> Optional[List[int]]:
        covered: Set[int] = set()
        centers = []
        for v in range(g.vertex_count):
            if v in covered:
                continue
            centers.append(v)
            if len(centers) > k:
                return None
            covered |= closed_ball(g, v, 2 * (k - 1))
        return centers

    k, centers = _binary_search(burning_upper_bound(g), attempt)
    estimate, seq = _finish(g, centers, 3 * k - 2)
    logger.info("3-APRX guess %d, estimate %d", k, estimate)
    return estimate, seq


def aprx2_tree_burning(t: Graph) -> Tuple[int, BurningSequence]:
    """
    2-approximation for trees and forests

    Each tree is rooted at its center. For a guess k, the deepest uncovered
    vertex (lowest id on ties) places a center at its ancestor min(k - 1,
    depth) levels up, which then covers its (k - 1)-ball. At most k centers
    burn t within 2k - 1 steps.

    Raises:
        GraphInputError: t is empty or contains a cycle
    """
    if t.is_empty():
        raise GraphInputError("aprx2_tree_burning on an empty graph")
    if not is_forest(t):
        raise GraphInputError("aprx2_tree_burning needs an acyclic graph")

    depth: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}
    scratch: List[Set[int]] = [set() for _ in range(t.vertex_count)]
    for comp in components(t):
        _bfs_tree(t, component_center(t, comp), scratch, depth, parent)
    order = sorted(range(t.vertex_count), key=lambda v: (-depth[v], v))

    def attempt(k: int) -> Optional[List[int]]:
        covered: Set[int] = set()
        centers = []
        for u in order:
            if u in covered:
                continue
            c = u
            for _ in range(min(k - 1, depth[u])):
                c = parent[c]
            centers.append(c)
            if len(centers) > k:
                return None
            covered |= closed_ball(t, c, k - 1)
        return centers

    k, centers = _binary_search(burning_upper_bound(t), attempt)
    estimate, seq = _finish(t, centers, 2 * k - 1)
    logger.info("2-APRX guess %d, estimate %d", k, estimate)
    return estimate, seq


def aprx2_burning(g: Graph) -> Tuple[int, BurningSequence]:
    """2-approximation on a BFS spanning forest; an upper bound for g itself"""
    return aprx2_tree_burning(g if is_forest(g) else spanning_forest(g))
