"""
Graph Burning Toolkit - Component Based Recursive Heuristic
Burns the component with the largest recursively estimated burning number first.
"""

import hashlib
import logging
from dataclasses import dataclass
from typing import Dict, Optional

from burning import BurningSequence, burning_upper_bound
from config import get_settings
from errors import BurningError, CallBudgetExceeded, GraphInputError
from graph_core import Graph, ball_size, closed_ball, components, induced_delete, subgraph
from heuristics import backbone_path

logger = logging.getLogger(__name__)

FAILED = -1


def component_key(comp: Graph) -> str:
    """Stable digest of a component's labels and edges"""
    labels = sorted(repr(label) for label in comp.labels)
    edges = sorted(tuple(sorted((repr(a), repr(b)))) for a, b in comp.to_edges())
    payload = repr((labels, edges)).encode("utf-8")
    return hashlib.sha256(payload).hexdigest()


class MemoTable:
    """Component key -> estimated burning number; each key is written once"""

    def __init__(self):
        self._values: Dict[str, int] = {}

    def __contains__(self, key: str) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def get(self, key: str) -> Optional[int]:
        return self._values.get(key)

    def put(self, key: str, value: int) -> None:
        if key in self._values and self._values[key] != value:
            raise BurningError(f"Memo entry {key[:12]} rewritten: {self._values[key]} -> {value}")
        self._values[key] = value


@dataclass
class CbrhResult:
    estimate: int
    sequence: Optional[BurningSequence]
    calls: int = 0

    @property
    def succeeded(self) -> bool:
        return self.estimate != FAILED


@dataclass
class _Run:
    max_depth: int
    max_calls: int
    calls: int = 0


def _component_estimate(comp_graph: Graph, i: int, memo: MemoTable, run: _Run, depth: int) -> int:
    key = component_key(comp_graph)
    if key in memo:
        value = memo.get(key)
    else:
        run.calls += 1
        if run.calls > run.max_calls:
            logger.warning("CBRH call budget of %d exhausted", run.max_calls)
            raise CallBudgetExceeded(f"CBRH exceeded {run.max_calls} recursive calls")
        value, _ = _estimate(comp_graph, i, memo, run, depth + 1)
        memo.put(key, value)
    # an unburnable component is still the hardest one
    return i + 1 if value == FAILED else value


def _estimate(g: Graph, b: int, memo: MemoTable, run: _Run, depth: int):
    if depth > run.max_depth:
        logger.warning("CBRH recursion depth %d exceeded", run.max_depth)
        raise CallBudgetExceeded(f"CBRH recursion deeper than {run.max_depth}")

    bn, best_seq = FAILED, None
    for i in range(b, 0, -1):
        residual = g
        picks = []
        for j in range(i):
            comps = components(residual)
            best_comp = comps[0]
            if len(comps) > 1:
                top = FAILED
                for comp in comps:
                    estimate = _component_estimate(subgraph(residual, comp), i, memo, run, depth)
                    if top < estimate:
                        top, best_comp = estimate, comp

            kept = sorted(best_comp)
            local = subgraph(residual, kept)
            radius = i - j - 1
            best_node, best_size = None, 0
            for v in backbone_path(local).vertices:
                size = ball_size(local, v, radius)
                if size > best_size:
                    best_node, best_size = v, size

            picks.append(local.label(best_node))
            ball = closed_ball(local, best_node, radius)
            residual = induced_delete(residual, (kept[v] for v in ball))
            if residual.is_empty():
                break

        if not residual.is_empty():
            break
        bn, best_seq = i, BurningSequence(sources=tuple(picks), budget=i)
        logger.debug("CBRH depth %d burned %d vertices in %d steps", depth, g.vertex_count, i)
    return bn, best_seq


def cbrh_estimate(g: Graph, b: Optional[int] = None, memo: Optional[MemoTable] = None) -> CbrhResult:
    """
    Estimate the burning number with the component based recursive heuristic

    Budgets i = b, b-1, ... are tried in turn; the last one that burns the
    whole graph is returned. While the residual graph is disconnected, every
    component's burning number is estimated recursively (memoised by
    component_key) and the component with the largest estimate is burned
    from the best vertex on its backbone path.

    Args:
        g (Graph): Graph to burn
        b (int): Largest budget to try, burning_upper_bound(g) when omitted
        memo (MemoTable): Shared table, a fresh one when omitted

    Returns:
        CbrhResult: estimate (-1 on failure), sequence and recursive call count

    Raises:
        CallBudgetExceeded: The depth or call guard was hit
    """
    settings = get_settings()
    if g.is_empty():
        raise GraphInputError("Cannot estimate the burning number of an empty graph")
    if b is None:
        b = burning_upper_bound(g)
    if not isinstance(b, int) or b < 1:
        raise GraphInputError(f"Budget must be a positive integer, got {b!r}")
    memo = MemoTable() if memo is None else memo
    run = _Run(max_depth=settings.cbrh_max_depth, max_calls=settings.cbrh_max_calls)
    bn, seq = _estimate(g, b, memo, run, depth=0)
    logger.info("CBRH estimate %d with %d recursive calls (n=%d)", bn, run.calls, g.vertex_count)
    return CbrhResult(estimate=bn, sequence=seq, calls=run.calls)
