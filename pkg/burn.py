#!/usr/bin/env python3
"""
Graph Burning Toolkit - Command Line Interface
Estimate, validate and trace burning sequences; generate graphs; run benchmarks
"""

import argparse
import logging
import sys
from typing import List, Optional

from bench import SOLVERS, load_bench_config, run_benchmark, solve, to_markdown, write_results
from burning import SELECTORS, BurningSequence, burn_trace, burned_by_sequence, is_valid_burning_sequence
from config import configure_logging
from data_provider import FORMATS, MODELS, fixture, fixture_names, format_edgelist, generate_graph, load_graph, save_graph
from errors import BurningError, GraphInputError, GraphParseError, InfeasibleBudgetError
from graph_core import Graph

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_INFEASIBLE = 0, 1, 2, 3


def print_header(title: str):
    """Print a section header"""
    print("=" * 60)
    print(f"    {title}")
    print("=" * 60)


def read_graph(args) -> Graph:
    if args.fixture:
        return fixture(args.fixture)
    if not args.input:
        raise GraphInputError("Give --input FILE or --fixture NAME")
    return load_graph(args.input, args.format)


def parse_sequence(g: Graph, text: str) -> List:
    """Comma-separated labels; numeric tokens match integer labels"""
    labels = []
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if not g.has_label(token):
            try:
                token = int(token)
            except ValueError:
                pass
        labels.append(token)
    return labels


def cmd_solve(args) -> int:
    g = read_graph(args)
    solution = solve(g, args.algo, budget=args.budget, linear=args.linear)
    print_header(f"{args.algo.upper()} on {g.vertex_count} vertices, {g.edge_count} edges")
    print(f"Estimated burning number: {solution.estimate}")
    print(f"Burning sequence: {', '.join(str(v) for v in solution.sequence.sources)}")
    if solution.calls is not None:
        print(f"Recursive calls: {solution.calls}")
    if args.algo in SELECTORS and args.budget is None and not args.linear:
        # greedy success is not monotone in the budget
        print(f"Linear scan estimate: {solve(g, args.algo, linear=True).estimate}")
    if args.strict_validate:
        strict = is_valid_burning_sequence(g, solution.sequence, strict=True)
        print(f"Strictly valid: {'yes' if strict else 'no'}")
    return EXIT_OK


def cmd_validate(args) -> int:
    g = read_graph(args)
    labels = parse_sequence(g, args.sequence)
    seq = BurningSequence(sources=tuple(labels), budget=args.budget or len(labels))
    valid = is_valid_burning_sequence(g, seq, strict=args.strict)
    missed = set(g.labels) - burned_by_sequence(g, seq)
    print(f"Sequence: {', '.join(str(v) for v in labels)} (budget {seq.budget})")
    print(f"Valid: {'yes' if valid else 'no'}")
    if missed:
        print(f"Uncovered: {', '.join(str(v) for v in sorted(missed, key=str))}")
    return EXIT_OK if valid else EXIT_ERROR


def cmd_gen(args) -> int:
    g = generate_graph(args.model, args.n, args.m, seed=args.seed)
    if args.out:
        save_graph(g, args.out)
        print(f"Wrote {g.vertex_count} vertices, {g.edge_count} edges to {args.out}")
    else:
        sys.stdout.write(format_edgelist(g))
    return EXIT_OK


def cmd_bench(args) -> int:
    matrix = load_bench_config(args.config)
    results = run_benchmark(matrix, workers=args.workers)
    if args.out:
        write_results(results, args.out)
        print(f"Wrote {len(results)} rows to {args.out}")
    print(to_markdown(results, published=True), end="")
    return EXIT_OK


def cmd_trace(args) -> int:
    g = read_graph(args)
    steps = burn_trace(g, args.budget, SELECTORS[args.algo])
    print_header(f"{args.algo.upper()} trace, budget {args.budget}")
    print(f"{'step':>4}  {'radius':>6}  {'source':>8}  {'burned':>6}  {'left':>5}  {'comps':>5}")
    print("-" * 60)
    for s in steps:
        print(f"{s.step:>4}  {s.radius:>6}  {str(s.vertex):>8}  {len(s.burned):>6}  "
              f"{s.remaining:>5}  {s.component_count:>5}")
    burned_all = g.is_empty() or (bool(steps) and steps[-1].remaining == 0)
    print("-" * 60)
    print("Burned the whole graph" if burned_all else "Vertices remain after the last step")
    return EXIT_OK if burned_all else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burn", description="Graph burning toolkit")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING (default BURN_LOG_LEVEL)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_args(p):
        p.add_argument("--input", help="Graph file")
        p.add_argument("--fixture", choices=fixture_names(), help="Bundled fixture graph")
        p.add_argument("--format", choices=FORMATS, default=None, help="Input format (guessed from suffix)")

    p = sub.add_parser("solve", help="Estimate the burning number")
    add_graph_args(p)
    p.add_argument("--algo", choices=SOLVERS, default="bbgh")
    p.add_argument("--budget", type=int, default=None, help="Burn within exactly this budget")
    p.add_argument("--linear", action="store_true", help="Scan budgets upward instead of binary search")
    p.add_argument("--strict-validate", action="store_true", help="Also check sources are unburned when lit")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="Check a burning sequence")
    add_graph_args(p)
    p.add_argument("--sequence", required=True, help='Comma-separated labels, e.g. "4,7,1"')
    p.add_argument("--budget", type=int, default=None, help="Budget (default: sequence length)")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="Generate a random graph")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="Edgelist file (default: stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="Run a benchmark matrix")
    p.add_argument("--config", required=True, help="JSON run matrix")
    p.add_argument("--out", default=None, help="CSV file, or markdown when it ends in .md")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("trace", help="Print the greedy driver step by step")
    add_graph_args(p)
    p.add_argument("--algo", choices=sorted(SELECTORS), default="bbgh")
    p.add_argument("--budget", type=int, required=True)
    p.set_defaults(func=cmd_trace)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.func(args)
    except GraphParseError as e:
        print(f"Parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleBudgetError as e:
        print(f"Infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (BurningError, OSError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
