#!/usr/bin/env python3
"""
Tests for the greedy driver, sequence validation, burning-number search and the exact oracle
"""

import math

import networkx as nx
import pytest

from burning import (
    SELECTORS,
    BurningSequence,
    burn_graph,
    burn_trace,
    burned_by_sequence,
    burning_upper_bound,
    center_selector,
    estimate_burning_number,
    exact_burning_number,
    is_valid_burning_sequence,
)
from errors import GraphInputError, OracleSizeError
from graph_core import Graph, is_connected, is_forest


def test_empty_graph_burns_with_no_sources():
    seq = burn_graph(Graph.from_edges([]), 3, SELECTORS["bbgh"])
    assert seq is not None
    assert seq.sources == ()
    assert seq.budget == 3


@pytest.mark.parametrize("algo", sorted(SELECTORS))
def test_path_hub_cannot_burn_in_three(path_hub, algo):
    assert burn_graph(path_hub, 3, SELECTORS[algo]) is None


def test_bbgh_burns_trace47_in_four(trace47):
    seq = burn_graph(trace47, 4, SELECTORS["bbgh"])
    assert seq.sources == (10, 3, 15, 6)
    assert is_valid_burning_sequence(trace47, seq)


def test_budget_must_be_positive(sample12):
    with pytest.raises(GraphInputError):
        burn_graph(sample12, 0, SELECTORS["bbgh"])


def test_trace_records_every_step(trace47):
    steps = burn_trace(trace47, 4, SELECTORS["bbgh"])
    assert [s.vertex for s in steps] == [10, 3, 15, 6]
    assert [s.radius for s in steps] == [3, 2, 1, 0]
    assert steps[-1].remaining == 0
    assert sum(len(s.burned) for s in steps) == trace47.vertex_count
    assert steps[0].vertex in steps[0].burned


@pytest.mark.parametrize("sources, valid", [
    ([4, 7, 1], True),
    ([7, 4, 1], False),
    ([3, 6, 8], True),
    ([7, 4, 2, 1], True),
])
def test_validity_on_sample12(sample12, sources, valid):
    assert is_valid_burning_sequence(sample12, sources) is valid


def test_uncovered_vertex_of_a_bad_sequence(sample12):
    assert set(sample12.labels) - burned_by_sequence(sample12, [7, 4, 1]) == {2}


def test_strict_mode(sample12, labeled_path):
    assert is_valid_burning_sequence(sample12, [4, 7, 1], strict=True)
    p4 = labeled_path(4)
    assert is_valid_burning_sequence(p4, [1, 3, 2])
    assert not is_valid_burning_sequence(p4, [1, 3, 2], strict=True)


def test_budget_extends_radii(labeled_path):
    p5 = labeled_path(5)
    assert not is_valid_burning_sequence(p5, [3])
    assert is_valid_burning_sequence(p5, BurningSequence(sources=(3,), budget=3))


def test_unknown_label_is_an_input_error(sample12):
    with pytest.raises(GraphInputError):
        is_valid_burning_sequence(sample12, [4, 7, 99])


def test_sequence_longer_than_budget():
    with pytest.raises(GraphInputError):
        BurningSequence(sources=(1, 2, 3), budget=2)


def test_upper_bounds(nx_graph, labeled_path, single_vertex, split14, trace47, path_hub, deep39):
    assert burning_upper_bound(nx_graph(nx.complete_graph(5))) == 2
    assert burning_upper_bound(labeled_path(9)) == 5
    assert burning_upper_bound(single_vertex) == 1
    assert burning_upper_bound(split14) == 5
    assert burning_upper_bound(trace47) == 9
    assert burning_upper_bound(path_hub) == 9
    assert burning_upper_bound(deep39) == 13


def test_center_selector_meets_the_upper_bound(sample12, path_hub, split14, deep39, trace47):
    for g in (sample12, path_hub, split14, deep39, trace47):
        seq = burn_graph(g, burning_upper_bound(g), center_selector)
        assert seq is not None
        assert is_valid_burning_sequence(g, seq)


@pytest.mark.parametrize("algo", sorted(SELECTORS))
@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_complete_graphs_need_two(nx_graph, algo, n):
    estimate, seq = estimate_burning_number(nx_graph(nx.complete_graph(n)), SELECTORS[algo])
    assert estimate == 2
    assert len(seq) <= 2


def test_single_vertex_needs_one(single_vertex):
    assert estimate_burning_number(single_vertex, SELECTORS["icch"])[0] == 1


def test_estimate_on_empty_graph():
    with pytest.raises(GraphInputError):
        estimate_burning_number(Graph.from_edges([]), SELECTORS["bbgh"])


def test_trace47_bbgh_binary_and_linear_disagree(trace47):
    linear, seq = estimate_burning_number(trace47, SELECTORS["bbgh"], linear=True)
    assert linear == 4
    assert seq.sources == (10, 3, 15, 6)

    # budget 5 fails while 4 and 6 succeed, so the binary search lands on 6
    assert burn_graph(trace47, 5, SELECTORS["bbgh"]) is None
    binary, seq = estimate_burning_number(trace47, SELECTORS["bbgh"])
    assert binary == 6
    assert seq.sources == (11, 3)
    assert is_valid_burning_sequence(trace47, seq)


@pytest.mark.parametrize("linear", [False, True])
def test_trace47_icch_needs_five(trace47, linear):
    icch, seq = estimate_burning_number(trace47, SELECTORS["icch"], linear=linear)
    assert icch == 5
    assert seq.sources == (9, 15, 2)
    assert burn_graph(trace47, 4, SELECTORS["icch"]) is None
    assert is_valid_burning_sequence(trace47, seq)


def test_estimate_witness_matches_budget(sample12):
    for sel in SELECTORS.values():
        b, seq = estimate_burning_number(sample12, sel)
        assert seq.budget == b
        assert is_valid_burning_sequence(sample12, seq)


@pytest.mark.parametrize("name, expected", [("sample12", 3), ("split14", 3), ("path_hub", 4)])
def test_oracle_on_fixtures(request, name, expected):
    g = request.getfixturevalue(name)
    bn, seq = exact_burning_number(g)
    assert bn == expected
    assert len(seq) == bn
    assert len(set(seq.sources)) == bn
    assert is_valid_burning_sequence(g, seq)


def test_oracle_small_path(labeled_path):
    assert exact_burning_number(labeled_path(4))[0] == 2


def test_oracle_refuses_large_graphs(deep39):
    with pytest.raises(OracleSizeError):
        exact_burning_number(deep39)


@pytest.mark.slow
def test_oracle_on_deep39_with_raised_cap(deep39):
    bn, seq = exact_burning_number(deep39, cap=40)
    assert bn == 5
    assert is_valid_burning_sequence(deep39, seq)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 26))
def test_oracle_on_paths(labeled_path, n):
    assert exact_burning_number(labeled_path(n))[0] == math.ceil(math.sqrt(n))


def test_heuristics_never_beat_the_oracle(sample12, path_hub, split14):
    for g in (sample12, path_hub, split14):
        bn, _ = exact_burning_number(g)
        for sel in SELECTORS.values():
            assert estimate_burning_number(g, sel)[0] >= bn


def test_replayed_picks_survive_larger_budgets(sample12):
    b, seq = estimate_burning_number(sample12, SELECTORS["bbgh"])
    for extra in range(1, 3):
        assert is_valid_burning_sequence(sample12, BurningSequence(sources=seq.sources, budget=b + extra))


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(500))
def test_every_solver_emits_a_valid_sequence(random_graph, seed):
    from approx import aprx2_burning, aprx3_burning
    from cbrh import cbrh_estimate

    g = random_graph(seed, 200)
    for sel in SELECTORS.values():
        _, seq = estimate_burning_number(g, sel)
        assert is_valid_burning_sequence(g, seq)
    result = cbrh_estimate(g)
    if result.succeeded:
        assert is_valid_burning_sequence(g, result.sequence)
    for approximation in (aprx3_burning, aprx2_burning):
        _, seq = approximation(g)
        assert is_valid_burning_sequence(g, seq)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(200))
def test_every_solver_dominated_by_the_oracle(random_graph, seed):
    from approx import aprx2_burning, aprx3_burning
    from cbrh import cbrh_estimate

    g = random_graph(seed, 14)
    bn, _ = exact_burning_number(g)
    for sel in SELECTORS.values():
        assert estimate_burning_number(g, sel)[0] >= bn
    result = cbrh_estimate(g)
    if result.succeeded:
        assert result.estimate >= bn
    estimate, seq = aprx3_burning(g)
    assert bn <= estimate <= 3 * bn
    assert len(seq) <= 3 * bn
    estimate, seq = aprx2_burning(g)
    assert estimate >= bn
    if is_forest(g) and is_connected(g):
        assert estimate <= 2 * bn
        assert len(seq) <= 2 * bn


@pytest.mark.slow
def test_bbgh_on_a_large_scale_free_graph(nx_graph):
    g = nx_graph(nx.barabasi_albert_graph(10_000, 3, seed=0))
    estimate, seq = estimate_burning_number(g, SELECTORS["bbgh"])
    assert estimate <= burning_upper_bound(g)
    assert is_valid_burning_sequence(g, seq)
