"""
Graph Burning Toolkit - Burning
Greedy burning driver, sequence validation, burning-number search and the exact oracle.

A burning sequence of budget b is valid when every vertex lies within
distance b - i - 1 of the i-th source (0-based). The greedy driver asks a
selector for a vertex at each radius, removes its ball from the residual
graph and stops as soon as nothing is left.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set, Tuple, Union

from config import get_settings
from errors import GraphInputError, OracleSizeError
from graph_core import (
    Graph,
    Label,
    bfs_distances,
    closed_ball,
    component_center,
    component_radius,
    components,
    induced_delete,
)
from heuristics import bbgh_all_best_central_node, bbgh_best_central_node, icch_best_central_node

logger = logging.getLogger(__name__)

Selector = Callable[[Graph, int], int]

SELECTORS: Dict[str, Selector] = {
    "bbgh": bbgh_best_central_node,
    "bbgh-all": bbgh_all_best_central_node,
    "icch": icch_best_central_node,
}


@dataclass(frozen=True)
class BurningSequence:
    sources: Tuple[Label, ...]
    budget: int = 0

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        if self.budget == 0:
            object.__setattr__(self, "budget", len(self.sources))
        if self.budget < len(self.sources):
            raise GraphInputError(
                f"Sequence of length {len(self.sources)} does not fit budget {self.budget}"
            )

    def __len__(self) -> int:
        return len(self.sources)

    def __iter__(self) -> Iterator[Label]:
        return iter(self.sources)


@dataclass(frozen=True)
class TraceStep:
    step: int
    radius: int
    vertex: Label
    burned: Tuple[Label, ...] = field(default=())
    remaining: int = 0
    component_count: int = 0


def _check_budget(b: int) -> None:
    if not isinstance(b, int) or b < 1:
        raise GraphInputError(f"Budget must be a positive integer, got {b!r}")


def burn_trace(g: Graph, b: int, sel: Selector) -> List[TraceStep]:
    """
    Run the greedy driver and record every iteration

    Args:
        g (Graph): Graph to burn
        b (int): Budget
        sel (Selector): (residual graph, radius) -> vertex id

    Returns:
        list: One TraceStep per pick; the residual is empty after the last
        one exactly when the run succeeded
    """
    _check_budget(b)
    residual = g
    steps = []
    for j in range(b):
        if residual.is_empty():
            break
        r = b - j - 1
        v = sel(residual, r)
        ball = closed_ball(residual, v, r)
        burned = tuple(residual.label(u) for u in sorted(ball))
        residual_label = residual.label(v)
        residual = induced_delete(residual, ball)
        steps.append(TraceStep(
            step=j + 1,
            radius=r,
            vertex=residual_label,
            burned=burned,
            remaining=residual.vertex_count,
            component_count=len(components(residual)),
        ))
        logger.debug("step %d r=%d source=%r burned=%d left=%d",
                     j + 1, r, steps[-1].vertex, len(burned), residual.vertex_count)
    return steps


def burn_graph(g: Graph, b: int, sel: Selector) -> Optional[BurningSequence]:
    """
    Greedy burning with a fixed budget

    Returns:
        BurningSequence or None: None when vertices survive b picks
    """
    steps = burn_trace(g, b, sel)
    if steps and steps[-1].remaining:
        return None
    return BurningSequence(sources=tuple(s.vertex for s in steps), budget=b)


def _as_sequence(seq: Union[BurningSequence, Sequence[Label]]) -> BurningSequence:
    return seq if isinstance(seq, BurningSequence) else BurningSequence(sources=tuple(seq))


def burned_by_sequence(g: Graph, seq: Union[BurningSequence, Sequence[Label]]) -> Set[Label]:
    """Labels of every vertex covered by the sequence under its budget"""
    seq = _as_sequence(seq)
    covered: Set[int] = set()
    for i, label in enumerate(seq.sources):
        radius = seq.budget - i - 1
        dist = bfs_distances(g, g.index_of(label), limit=radius)
        covered.update(v for v, d in enumerate(dist) if 0 <= d <= radius)
    return {g.label(v) for v in covered}


def is_valid_burning_sequence(g: Graph, seq: Union[BurningSequence, Sequence[Label]],
                              strict: bool = False) -> bool:
    """
    Check a burning sequence against a graph

    Args:
        g (Graph): The graph
        seq: BurningSequence, or a plain list of labels (budget = length)
        strict (bool): Also require every source to be unburned when it is
            lit, i.e. dist(seq[i], seq[j]) >= j - i

    Returns:
        bool: Whether every vertex burns within the budget

    Raises:
        GraphInputError: A label is not a vertex of g
    """
    seq = _as_sequence(seq)
    ids = [g.index_of(label) for label in seq.sources]
    if len(burned_by_sequence(g, seq)) != g.vertex_count:
        return False
    if strict:
        for i, u in enumerate(ids):
            dist = bfs_distances(g, u)
            for j in range(i + 1, len(ids)):
                d = dist[ids[j]]
                if 0 <= d < j - i:
                    return False
    return True


def burning_upper_bound(g: Graph) -> int:
    """Sum over components of radius + 1; always achievable from component centers"""
    if g.is_empty():
        raise GraphInputError("burning_upper_bound on an empty graph")
    return sum(component_radius(g, comp) + 1 for comp in components(g))


def center_selector(g: Graph, r: int) -> int:
    """Center of the lowest-id component; realises burning_upper_bound"""
    if g.is_empty():
        raise GraphInputError("center_selector on an empty graph")
    return component_center(g, components(g)[0])


def estimate_burning_number(g: Graph, sel: Selector,
                            linear: bool = False) -> Tuple[int, BurningSequence]:
    """
    Smallest budget the selector manages to burn g with

    Binary search over [1, burning_upper_bound(g)]. Heuristic success is not
    monotone in b, so this is the binary-search answer rather than a global
    minimum; linear=True scans upward from 1 instead.

    Returns:
        tuple: (estimate, witnessing BurningSequence)
    """
    if g.is_empty():
        raise GraphInputError("Cannot estimate the burning number of an empty graph")
    upper = burning_upper_bound(g)

    if linear:
        b = 1
        while True:
            seq = burn_graph(g, b, sel)
            if seq is not None:
                logger.info("Linear scan estimate %d (upper bound %d)", b, upper)
                return b, seq
            b += 1

    lo, hi = 1, upper
    best: Optional[Tuple[int, BurningSequence]] = None
    while lo <= hi:
        mid = (lo + hi) // 2
        seq = burn_graph(g, mid, sel)
        if seq is not None:
            best = (mid, seq)
            hi = mid - 1
        else:
            lo = mid + 1

    b = upper + 1
    while best is None:
        # selector failed even at the upper bound
        seq = burn_graph(g, b, sel)
        if seq is not None:
            best = (b, seq)
        b += 1
    logger.info("Binary search estimate %d (upper bound %d)", best[0], upper)
    return best


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _ball_masks(dist: List[List[int]], radius: int) -> List[int]:
    masks = []
    for row in dist:
        mask = 0
        for w, d in enumerate(row):
            if 0 <= d <= radius:
                mask |= 1 << w
        masks.append(mask)
    return masks


def _cover(b: int, n: int, balls: Dict[int, List[int]]) -> Optional[Dict[int, int]]:
    """Assign centers to some of the positions 0..b-1 so their balls cover all n vertices"""
    full = (1 << n) - 1
    biggest = {r: max(_popcount(m) for m in masks) for r, masks in balls.items()}
    failed: Set[Tuple[int, int]] = set()

    def search(covered: int, free: int, used: Dict[int, int]) -> Optional[Dict[int, int]]:
        if covered == full:
            return dict(used)
        free_positions = [p for p in range(b) if free >> p & 1]
        if not free_positions or (covered, free) in failed:
            return None
        left = n - _popcount(covered)
        if sum(biggest[b - 1 - p] for p in free_positions) < left:
            failed.add((covered, free))
            return None

        top = balls[b - 1 - free_positions[0]]
        u = min((v for v in range(n) if not covered >> v & 1),
                key=lambda v: (_popcount(top[v]), v))
        for p in free_positions:
            r = b - 1 - p
            reach = balls[r][u]
            for x in range(n):
                if not reach >> x & 1:
                    continue
                used[p] = x
                found = search(covered | balls[r][x], free & ~(1 << p), used)
                if found is not None:
                    return found
                del used[p]
        failed.add((covered, free))
        return None

    return search(0, (1 << b) - 1, {})


def exact_burning_number(g: Graph, cap: Optional[int] = None) -> Tuple[int, BurningSequence]:
    """
    True burning number by iterative deepening over b

    Each search node takes the hardest uncovered vertex and branches over
    every free position and every center able to reach it. Failed
    (covered, free positions) states are memoised.

    Args:
        g (Graph): Non-empty graph
        cap (int): Vertex limit, BURN_ORACLE_CAP when omitted

    Raises:
        OracleSizeError: g has more vertices than the cap
    """
    cap = get_settings().oracle_cap if cap is None else cap
    n = g.vertex_count
    if n == 0:
        raise GraphInputError("exact_burning_number on an empty graph")
    if n > cap:
        raise OracleSizeError(f"Graph has {n} vertices; the exact oracle is capped at {cap}")

    dist = [bfs_distances(g, v) for v in range(n)]
    upper = burning_upper_bound(g)
    balls: Dict[int, List[int]] = {}
    for b in range(1, upper + 1):
        balls[b - 1] = _ball_masks(dist, b - 1)
        used = _cover(b, n, {r: balls[r] for r in range(b)})
        if used is None:
            logger.debug("Oracle: no burning sequence of length %d", b)
            continue
        # a repeated center is redundant at its smaller radius
        kept: Dict[int, int] = {}
        for p in sorted(used):
            if used[p] not in kept.values():
                kept[p] = used[p]
        taken = set(kept.values())
        spare = iter(v for v in range(n) if v not in taken)
        order = [kept[p] if p in kept else next(spare) for p in range(b)]
        logger.info("Oracle: burning number %d (n=%d)", b, n)
        return b, BurningSequence(sources=tuple(g.label(v) for v in order), budget=b)

    # unreachable: centers of the components always burn within the upper bound
    raise GraphInputError("Oracle failed to reach the upper bound")
