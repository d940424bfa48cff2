#!/usr/bin/env python3
"""
Tests for the benchmark runner and its reports
"""

import csv
import io
import json

import pytest

from bench import (
    CSV_HEADER,
    BenchMatrix,
    DatasetSpec,
    load_bench_config,
    run_benchmark,
    solve,
    to_csv,
    to_markdown,
    write_results,
)
from burning import is_valid_burning_sequence
from errors import GraphInputError, InfeasibleBudgetError


def trees(count=5, n=12):
    return DatasetSpec(name="trees", generate={"model": "random_tree", "n": n}, seeds=tuple(range(count)))


def test_empty_matrix():
    assert run_benchmark(BenchMatrix()) == []


def test_single_cell():
    matrix = BenchMatrix(datasets=[DatasetSpec(name="sample12", fixture="sample12")], algorithms=["exact"])
    rows = run_benchmark(matrix)
    assert len(rows) == 1
    assert (rows[0].dataset, rows[0].n, rows[0].m, rows[0].estimate) == ("sample12", 12, 16, 3)
    assert rows[0].seed is None
    assert rows[0].error is None


def test_generated_ensemble_gets_a_mean_row():
    rows = run_benchmark(BenchMatrix(datasets=[trees()], algorithms=["bbgh"], searches=("binary",)))
    assert len(rows) == 6
    assert [r.seed for r in rows[:5]] == [0, 1, 2, 3, 4]
    mean_row = rows[-1]
    assert mean_row.kind == "mean"
    assert mean_row.estimate == pytest.approx(sum(r.estimate for r in rows[:5]) / 5, abs=0.05)


def test_cbrh_rows_carry_call_counts():
    matrix = BenchMatrix(datasets=[DatasetSpec(name="split14", fixture="split14")], algorithms=["cbrh", "icch"])
    cbrh_row, icch_row, icch_linear_row = run_benchmark(matrix)
    assert cbrh_row.calls > 0
    assert icch_row.calls is None
    assert icch_linear_row.algo == "icch-linear"


def test_failing_cell_is_recorded_not_raised():
    matrix = BenchMatrix(datasets=[DatasetSpec(name="deep39", fixture="deep39")], algorithms=["exact", "bbgh"])
    exact_row, bbgh_row, _ = run_benchmark(matrix)
    assert exact_row.estimate is None
    assert exact_row.error
    assert bbgh_row.error is None
    assert "error" in to_csv([exact_row])


def test_threads_keep_matrix_order():
    matrix = BenchMatrix(
        datasets=[DatasetSpec(name="sample12", fixture="sample12"), trees(3)],
        algorithms=["bbgh", "icch", "aprx3"],
    )
    serial = run_benchmark(matrix)
    threaded = run_benchmark(matrix, workers=3)
    key = [(r.dataset, r.algo, r.seed, r.kind, r.estimate) for r in serial]
    assert [(r.dataset, r.algo, r.seed, r.kind, r.estimate) for r in threaded] == key


def test_csv_and_markdown_agree():
    rows = run_benchmark(BenchMatrix(datasets=[trees(2)], algorithms=["bbgh", "aprx2"]))
    table = list(csv.reader(io.StringIO(to_csv(rows))))
    assert tuple(table[0]) == CSV_HEADER
    assert len(table) == len(rows) + 1
    assert table[3][-1] == "mean"

    md = to_markdown(rows).splitlines()
    assert len(md) == len(rows) + 2
    for csv_row, md_line in zip(table[1:], md[2:]):
        assert [c.strip() for c in md_line.strip("|").split("|")] == csv_row


def test_markdown_published_column():
    matrix = BenchMatrix(datasets=[DatasetSpec(name="sample12", fixture="sample12")], algorithms=["bbgh"])
    md = to_markdown(run_benchmark(matrix), published=True)
    assert "published" in md.splitlines()[0]


def test_markdown_shows_published_cbrh_calls(tmp_path, monkeypatch, fresh_settings):
    (tmp_path / "netscience.edgelist").write_text("1 2\n2 3\n4 5\n")
    monkeypatch.setenv("BURN_DATA_DIR", str(tmp_path))
    fresh_settings()
    matrix = BenchMatrix(datasets=[DatasetSpec(name="netscience", dataset="netscience")],
                         algorithms=["cbrh", "aprx3"])
    cbrh_row, aprx3_row = run_benchmark(matrix)
    assert (cbrh_row.published, cbrh_row.published_calls) == (7, 23)
    assert (aprx3_row.published, aprx3_row.published_calls) == (12, None)
    header, _, cbrh_line, _ = to_markdown([cbrh_row, aprx3_row], published=True).splitlines()
    assert "published calls" in header
    assert [c.strip() for c in cbrh_line.strip("|").split("|")][-2:] == ["7", "23"]


def test_write_results_picks_format_by_suffix(tmp_path):
    rows = run_benchmark(BenchMatrix(datasets=[DatasetSpec(name="split14", fixture="split14")], algorithms=["bbgh"]))
    assert write_results(rows, tmp_path / "r.csv").read_text().startswith("dataset,n,m")
    assert write_results(rows, tmp_path / "r.md").read_text().startswith("| dataset")


def test_load_bench_config(tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps({
        "datasets": [
            {"name": "sample12", "fixture": "sample12"},
            {"name": "er", "generate": {"model": "erdos_renyi", "n": 30, "m": 45}, "seeds": 4},
        ],
        "algorithms": ["bbgh", "cbrh"],
        "workers": 2,
    }))
    matrix = load_bench_config(path)
    assert [d.name for d in matrix.datasets] == ["sample12", "er"]
    assert matrix.datasets[1].seeds == (0, 1, 2, 3)
    assert matrix.workers == 2
    assert matrix.repetitions == 1
    assert matrix.searches == ("binary", "linear")


def test_config_with_unknown_algorithm(tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps({"datasets": [], "algorithms": ["magic"]}))
    with pytest.raises(GraphInputError):
        load_bench_config(path)


def test_greedy_rows_report_both_searches():
    matrix = BenchMatrix(datasets=[DatasetSpec(name="trace47", fixture="trace47")],
                         algorithms=["bbgh", "icch"])
    rows = [(r.algo, r.estimate) for r in run_benchmark(matrix)]
    assert rows == [("bbgh", 6), ("bbgh-linear", 4), ("icch", 5), ("icch-linear", 5)]


def test_single_search(tmp_path):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps({
        "datasets": [{"name": "trace47", "fixture": "trace47"}],
        "algorithms": ["bbgh"],
        "searches": ["linear"],
    }))
    rows = run_benchmark(load_bench_config(path))
    assert [(r.algo, r.estimate) for r in rows] == [("bbgh-linear", 4)]


@pytest.mark.parametrize("searches", [[], ["ternary"]])
def test_config_with_bad_searches(tmp_path, searches):
    path = tmp_path / "matrix.json"
    path.write_text(json.dumps({"datasets": [], "algorithms": ["bbgh"], "searches": searches}))
    with pytest.raises(GraphInputError):
        load_bench_config(path)


def test_dataset_without_a_source():
    with pytest.raises(GraphInputError):
        DatasetSpec(name="nothing").load()


@pytest.mark.parametrize("algo", ["bbgh", "bbgh-all", "icch", "cbrh", "aprx3", "aprx2", "exact"])
def test_solve_returns_a_witness(sample12, algo):
    solution = solve(sample12, algo)
    assert solution.estimate >= 3
    assert is_valid_burning_sequence(sample12, solution.sequence)


def test_solve_with_budget(sample12, path_hub):
    assert solve(sample12, "bbgh", budget=5).estimate == 5
    with pytest.raises(InfeasibleBudgetError):
        solve(path_hub, "bbgh", budget=3)
    with pytest.raises(InfeasibleBudgetError):
        solve(path_hub, "exact", budget=3)


def test_solve_unknown_algorithm(sample12):
    with pytest.raises(GraphInputError):
        solve(sample12, "magic")
