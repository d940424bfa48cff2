"""
Graph Burning Toolkit - Benchmark Runner
Runs every solver over a matrix of datasets and reports estimates, timings and CBRH call counts.
"""

import csv
import io
import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from statistics import mean
from typing import Dict, List, Optional, Sequence, Tuple, Union

from approx import aprx2_burning, aprx3_burning
from burning import SELECTORS, BurningSequence, burn_graph, estimate_burning_number, exact_burning_number
from cbrh import cbrh_estimate
from data_provider import DATASETS, fixture as load_fixture, generate_graph, load_dataset, load_graph
from errors import GraphInputError, InfeasibleBudgetError
from graph_core import Graph

logger = logging.getLogger(__name__)

SOLVERS = ("bbgh", "bbgh-all", "icch", "cbrh", "aprx3", "aprx2", "exact")

SEARCHES = ("binary", "linear")

CSV_HEADER = ("dataset", "n", "m", "algo", "estimate", "ms", "calls", "seed")


@dataclass
class Solution:
    algo: str
    estimate: int
    sequence: BurningSequence
    calls: Optional[int] = None


def solve(g: Graph, algo: str, budget: Optional[int] = None, linear: bool = False) -> Solution:
    """
    Run one solver

    Args:
        g (Graph): Non-empty graph
        algo (str): One of SOLVERS
        budget (int): Burn within exactly this budget instead of searching
        linear (bool): Greedy selectors scan budgets upward instead of binary search

    Returns:
        Solution: Estimate, witnessing sequence and (CBRH only) recursive calls

    Raises:
        InfeasibleBudgetError: The solver could not burn g within budget
    """
    if algo not in SOLVERS:
        raise GraphInputError(f"Unknown algorithm {algo!r}; expected one of {', '.join(SOLVERS)}")

    if algo in SELECTORS:
        sel = SELECTORS[algo]
        if budget is not None:
            seq = burn_graph(g, budget, sel)
            if seq is None:
                raise InfeasibleBudgetError(f"{algo} could not burn the graph in {budget} steps")
            return Solution(algo, budget, seq)
        estimate, seq = estimate_burning_number(g, sel, linear=linear)
        return Solution(algo, estimate, seq)

    if algo == "cbrh":
        result = cbrh_estimate(g, budget)
        if not result.succeeded:
            limit = f"{budget} steps" if budget is not None else "the upper bound"
            raise InfeasibleBudgetError(f"cbrh could not burn the graph within {limit}")
        return Solution(algo, result.estimate, result.sequence, result.calls)

    runner = {"aprx3": aprx3_burning, "aprx2": aprx2_burning, "exact": exact_burning_number}[algo]
    estimate, seq = runner(g)
    if budget is not None and estimate > budget:
        raise InfeasibleBudgetError(f"{algo} needs {estimate} steps, budget is {budget}")
    return Solution(algo, estimate, seq)


@dataclass
class BenchResult:
    dataset: str
    n: int
    m: int
    algo: str
    estimate: Optional[float]
    ms: float
    calls: Optional[int] = None
    seed: Optional[int] = None
    kind: str = "run"
    error: Optional[str] = None
    published: Optional[int] = None
    published_calls: Optional[int] = None


@dataclass
class DatasetSpec:
    name: str
    fixture: Optional[str] = None
    dataset: Optional[str] = None
    path: Optional[str] = None
    format: Optional[str] = None
    generate: Optional[Dict] = None
    seeds: Tuple[int, ...] = ()

    def load(self) -> List[Tuple[Optional[int], Graph]]:
        """Graphs of this dataset, paired with their seed (None when not generated)"""
        if self.generate:
            params = dict(self.generate)
            model = params.pop("model")
            seeds = self.seeds or (0,)
            return [(seed, generate_graph(model, seed=seed, **params)) for seed in seeds]
        if self.fixture:
            return [(None, load_fixture(self.fixture))]
        if self.dataset:
            return [(None, load_dataset(self.dataset))]
        if self.path:
            return [(None, load_graph(self.path, self.format))]
        raise GraphInputError(f"Dataset {self.name!r} names no source")


@dataclass
class BenchMatrix:
    datasets: List[DatasetSpec] = field(default_factory=list)
    algorithms: List[str] = field(default_factory=list)
    repetitions: int = 1
    workers: int = 1
    searches: Tuple[str, ...] = SEARCHES


def load_bench_config(path: Union[str, Path]) -> BenchMatrix:
    """
    Read a JSON run matrix

    Example:
        {"datasets": [{"name": "sample12", "fixture": "sample12"},
                      {"name": "trees", "generate": {"model": "random_tree", "n": 50}, "seeds": 100}],
         "algorithms": ["bbgh", "icch", "cbrh"], "repetitions": 1, "workers": 2,
         "searches": ["binary", "linear"]}

    An integer "seeds" means seeds 0..seeds-1. "searches" only affects the
    greedy selectors and defaults to both.
    """
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)

    datasets = []
    for entry in raw.get("datasets", []):
        entry = dict(entry)
        seeds = entry.pop("seeds", ())
        if isinstance(seeds, int):
            seeds = range(seeds)
        datasets.append(DatasetSpec(seeds=tuple(seeds), **entry))
    algorithms = list(raw.get("algorithms", []))
    for algo in algorithms:
        if algo not in SOLVERS:
            raise GraphInputError(f"Unknown algorithm {algo!r} in {path}")
    searches = tuple(raw.get("searches", SEARCHES))
    if not searches or any(s not in SEARCHES for s in searches):
        raise GraphInputError(f"searches must be a non-empty subset of {', '.join(SEARCHES)} in {path}")
    return BenchMatrix(
        datasets=datasets,
        algorithms=algorithms,
        repetitions=int(raw.get("repetitions", 1)),
        workers=int(raw.get("workers", 1)),
        searches=searches,
    )


def _variants(algo: str, searches: Sequence[str]) -> List[Tuple[str, bool]]:
    """(row label, linear) pairs; only greedy selectors have a search to vary"""
    if algo not in SELECTORS:
        return [(algo, False)]
    return [(algo if s == "binary" else f"{algo}-{s}", s == "linear") for s in searches]


def _published(spec: DatasetSpec, key: str):
    if not spec.dataset:
        return None
    return DATASETS.get(spec.dataset, {}).get("published", {}).get(key)


def _run_cell(cell, repetitions: int) -> BenchResult:
    spec, seed, g, algo, label, linear = cell
    row = BenchResult(dataset=spec.name, n=g.vertex_count, m=g.edge_count, algo=label,
                      estimate=None, ms=0.0, seed=seed, published=_published(spec, algo),
                      published_calls=_published(spec, "cbrh_calls") if algo == "cbrh" else None)
    timings = []
    try:
        for _ in range(max(1, repetitions)):
            start = time.perf_counter()
            solution = solve(g, algo, linear=linear)
            timings.append((time.perf_counter() - start) * 1000.0)
        row.estimate = solution.estimate
        row.calls = solution.calls
        row.ms = mean(timings)
        logger.info("%s / %s: %s in %.1f ms", spec.name, label, row.estimate, row.ms)
    except Exception as e:
        row.error = str(e)
        row.ms = mean(timings) if timings else 0.0
        logger.warning("%s / %s failed: %s", spec.name, label, e)
    return row


def _mean_row(rows: List[BenchResult]) -> BenchResult:
    done = [r for r in rows if r.error is None]
    first = rows[0]
    calls = [r.calls for r in done if r.calls is not None]
    return BenchResult(
        dataset=first.dataset,
        n=round(mean(r.n for r in rows)),
        m=round(mean(r.m for r in rows)),
        algo=first.algo,
        estimate=round(mean(r.estimate for r in done), 1) if done else None,
        ms=mean(r.ms for r in done) if done else 0.0,
        calls=round(mean(calls)) if calls else None,
        kind="mean",
        published=first.published,
        published_calls=first.published_calls,
    )


def run_benchmark(matrix: BenchMatrix, workers: Optional[int] = None) -> List[BenchResult]:
    """
    Run every algorithm on every dataset

    Graphs are loaded before any timing starts. Greedy selectors get one
    row per search in matrix.searches, labelled "bbgh" for binary search
    and "bbgh-linear" for the upward scan, since the two can disagree.
    Rows come back in matrix order (dataset, algorithm, search, seed)
    whatever order the workers finish in, and each generated ensemble
    gets a trailing mean row per label.

    Args:
        matrix (BenchMatrix): Datasets, algorithms and run options
        workers (int): Thread count, overriding matrix.workers

    Returns:
        list: BenchResult rows
    """
    workers = matrix.workers if workers is None else workers
    groups = []
    for spec in matrix.datasets:
        graphs = spec.load()
        for algo in matrix.algorithms:
            for label, linear in _variants(algo, matrix.searches):
                groups.append((spec, [(spec, seed, g, algo, label, linear) for seed, g in graphs]))

    cells = [cell for _, group in groups for cell in group]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda c: _run_cell(c, matrix.repetitions), cells))
    else:
        rows = [_run_cell(c, matrix.repetitions) for c in cells]

    results = []
    it = iter(rows)
    for spec, group in groups:
        chunk = [next(it) for _ in group]
        results.extend(chunk)
        if spec.generate:
            results.append(_mean_row(chunk))
    return results


def _cells(row: BenchResult) -> List[str]:
    if row.error is not None:
        estimate = "error"
    elif row.estimate is None:
        estimate = ""
    else:
        estimate = str(row.estimate)
    seed = "mean" if row.kind == "mean" else ("" if row.seed is None else str(row.seed))
    return [row.dataset, str(row.n), str(row.m), row.algo, estimate,
            f"{row.ms:.1f}", "" if row.calls is None else str(row.calls), seed]


def to_csv(results: Sequence[BenchResult]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in results:
        writer.writerow(_cells(row))
    return buf.getvalue()


def to_markdown(results: Sequence[BenchResult], published: bool = False) -> str:
    """Aligned markdown table with the CSV's columns, plus published estimates and CBRH calls when asked"""
    header = list(CSV_HEADER) + (["published", "published calls"] if published else [])
    body = []
    for row in results:
        cells = _cells(row)
        if published:
            cells.append("" if row.published is None else str(row.published))
            cells.append("" if row.published_calls is None else str(row.published_calls))
        body.append(cells)
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]

    def line(cells):
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"

    out = [line(header), "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
    out += [line(cells) for cells in body]
    return "\n".join(out) + "\n"


def write_results(results: Sequence[BenchResult], out: Union[str, Path]) -> Path:
    """Write CSV, or markdown when the file ends in .md"""
    out = Path(out)
    text = to_markdown(results, published=True) if out.suffix.lower() == ".md" else to_csv(results)
    out.write_text(text, encoding="utf-8")
    return out
