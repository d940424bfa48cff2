"""
Data Provider Module
Handles graph files, the bundled fixture graphs, benchmark datasets and random graph models
"""

import logging
import random
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

import networkx as nx

from config import get_settings
from errors import GraphInputError, GraphParseError
from graph_core import Graph

logger = logging.getLogger(__name__)

FORMATS = ("edgelist", "dimacs")

# Small graphs with a known burning number, shipped under fixtures/
FIXTURES = {
    "sample12": {
        "file": "sample12.edgelist",
        "description": "12 vertices; [4, 7, 1] and [3, 6, 8] burn it, [7, 4, 1] does not",
        "burning_number": 3,
    },
    "path_hub": {
        "file": "path_hub.edgelist",
        "description": "Long path plus a hub component; choosing the larger component first costs a step",
        "burning_number": 4,
    },
    "split14": {
        "file": "split14.edgelist",
        "description": "Path of 5 and a 9-vertex hub component",
        "burning_number": 3,
    },
    "deep39": {
        "file": "deep39.edgelist",
        "description": "Connected 39-vertex graph where only the recursive heuristic is optimal",
        "burning_number": 5,
    },
    "trace47": {
        "file": "trace47.edgelist",
        "description": "47-vertex tree-like graph used for the BBGH and ICCH traces",
        "burning_number": None,
    },
}

# Public benchmark graphs; looked up in BURN_DATA_DIR, never downloaded.
# "published" holds previously reported estimates (and CBRH recursive calls),
# shown next to ours in reports. Counts published in thousands are rounded.
DATASETS = {
    "netscience": {"file": "netscience.edgelist", "format": "edgelist", "vertices": 379, "edges": 914,
                   "published": {"aprx3": 12, "aprx2": 10, "bbgh": 7, "icch": 7, "cbrh": 7, "cbrh_calls": 23}},
    "polblogs": {"file": "polblogs.edgelist", "format": "edgelist", "vertices": 643, "edges": 2280,
                 "published": {"aprx3": 9, "aprx2": 10, "bbgh": 6, "icch": 6, "cbrh": 6, "cbrh_calls": 8}},
    "reed98": {"file": "reed98.edgelist", "format": "edgelist", "vertices": 962, "edges": 18_000,
               "published": {"aprx3": 6, "aprx2": 8, "bbgh": 4, "icch": 4, "cbrh": 4, "cbrh_calls": 46}},
    "mahindas": {"file": "mahindas.edgelist", "format": "edgelist", "vertices": 1258, "edges": 7513,
                 "published": {"aprx3": 9, "aprx2": 8, "bbgh": 5, "icch": 5, "cbrh": 5, "cbrh_calls": 68}},
    "cite-dblp": {"file": "cite-dblp.edgelist", "format": "edgelist", "vertices": 12_600, "edges": 49_700,
                  "published": {"aprx3": 120, "aprx2": 82, "bbgh": 41, "icch": 41, "cbrh": 41, "cbrh_calls": 146}},
    "chameleon": {"file": "chameleon.edgelist", "format": "edgelist", "vertices": 2_200, "edges": 31_400,
                  "published": {"aprx3": 9, "aprx2": 10, "bbgh": 6, "icch": 6, "cbrh": 6, "cbrh_calls": 43}},
    "tvshow": {"file": "tvshow.edgelist", "format": "edgelist", "vertices": 3_800, "edges": 17_200,
               "published": {"aprx3": 18, "aprx2": 16, "bbgh": 10, "icch": 10, "cbrh": 10, "cbrh_calls": 49}},
    "ego-facebook": {"file": "ego-facebook.edgelist", "format": "edgelist", "vertices": 4_000, "edges": 88_000,
                     "published": {"aprx3": 9, "aprx2": 6, "bbgh": 4, "icch": 4, "cbrh": 4, "cbrh_calls": 110}},
    "squirrel": {"file": "squirrel.edgelist", "format": "edgelist", "vertices": 5_000, "edges": 198_000,
                 "published": {"aprx3": 9, "aprx2": 10, "bbgh": 6, "icch": 6, "cbrh": 6, "cbrh_calls": 19}},
    "politician": {"file": "politician.edgelist", "format": "edgelist", "vertices": 5_900, "edges": 41_700,
                   "published": {"aprx3": 12, "aprx2": 12, "bbgh": 7, "icch": 7, "cbrh": 7, "cbrh_calls": 9}},
    "government": {"file": "government.edgelist", "format": "edgelist", "vertices": 7_000, "edges": 89_400,
                   "published": {"aprx3": 9, "aprx2": 10, "bbgh": 6, "icch": 6, "cbrh": 6, "cbrh_calls": 7}},
    "crocodile": {"file": "crocodile.edgelist", "format": "edgelist", "vertices": 11_000, "edges": 170_000,
                  "published": {"aprx3": 12, "aprx2": 10, "bbgh": 6, "icch": 6, "cbrh": 6, "cbrh_calls": 40}},
    "deezer-hr": {"file": "deezer-hr.edgelist", "format": "edgelist", "vertices": 54_000, "edges": 498_000,
                  "published": {"aprx3": 12, "aprx2": 12, "bbgh": 7, "icch": 7, "cbrh": 7, "cbrh_calls": 92}},
    "c-fat200-1": {"file": "c-fat200-1.clq", "format": "dimacs", "vertices": 200, "edges": 1534,
                   "published": {"bbgh": 7, "cbrh": 7, "icch": 7}},
    "c-fat200-2": {"file": "c-fat200-2.clq", "format": "dimacs", "vertices": 200, "edges": 3235,
                   "published": {"bbgh": 5, "cbrh": 5, "icch": 5}},
    "c-fat200-5": {"file": "c-fat200-5.clq", "format": "dimacs", "vertices": 200, "edges": 8473,
                   "published": {"bbgh": 3, "cbrh": 3, "icch": 3}},
    "c-fat500-1": {"file": "c-fat500-1.clq", "format": "dimacs", "vertices": 500, "edges": 4459,
                   "published": {"bbgh": 9, "cbrh": 9, "icch": 10}},
    "c-fat500-2": {"file": "c-fat500-2.clq", "format": "dimacs", "vertices": 500, "edges": 9139,
                   "published": {"bbgh": 7, "cbrh": 7, "icch": 7}},
    "c-fat500-5": {"file": "c-fat500-5.clq", "format": "dimacs", "vertices": 500, "edges": 23191,
                   "published": {"bbgh": 5, "cbrh": 5, "icch": 5}},
    "c-fat500-10": {"file": "c-fat500-10.clq", "format": "dimacs", "vertices": 500, "edges": 46627,
                    "published": {"bbgh": 3, "cbrh": 3, "icch": 3}},
}

MODELS = ("erdos_renyi", "barabasi_albert", "random_tree")


def _as_labels(tokens: Iterable[str]) -> Dict[str, Union[int, str]]:
    tokens = list(dict.fromkeys(tokens))
    try:
        return {t: int(t) for t in tokens}
    except ValueError:
        return {t: t for t in tokens}


def parse_edgelist(text: str) -> Graph:
    """
    Parse whitespace-separated edge pairs

    Lines starting with '#' or '%' and blank lines are skipped. A line with
    a single token declares an isolated vertex; a third token (a weight) is
    ignored. Labels become ints when every label is an integer.

    Args:
        text (str): File contents

    Returns:
        Graph: Parsed graph

    Raises:
        GraphParseError: A line has more than three tokens
    """
    pairs: List[Tuple[str, str]] = []
    singles: List[str] = []
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line[0] in "#%":
            continue
        parts = line.split()
        if len(parts) == 1:
            singles.append(parts[0])
        elif len(parts) <= 3:
            pairs.append((parts[0], parts[1]))
        else:
            raise GraphParseError(f"expected 'u v [weight]', got {line!r}", line_number=number)

    labels = _as_labels(singles + [t for pair in pairs for t in pair])
    return Graph.from_edges(
        ((labels[a], labels[b]) for a, b in pairs),
        vertices=(labels[s] for s in singles),
    )


def _dimacs_int(token: str, number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"bad integer {token!r}", line_number=number) from None


def parse_dimacs(text: str) -> Graph:
    """
    Parse a DIMACS graph ('c' comments, 'p edge n m' header, 'e u v' edges)

    Vertices are numbered 1..n and all of them exist, edges or not.
    """
    n: Optional[int] = None
    edges: List[Tuple[int, int]] = []
    for number, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) != 4:
                raise GraphParseError("expected 'p edge n m'", line_number=number)
            n = _dimacs_int(parts[2], number)
        elif parts[0] == "e":
            if n is None:
                raise GraphParseError("edge line before the 'p' header", line_number=number)
            if len(parts) < 3:
                raise GraphParseError("expected 'e u v'", line_number=number)
            u, v = _dimacs_int(parts[1], number), _dimacs_int(parts[2], number)
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphParseError(f"vertex out of range 1..{n}", line_number=number)
            edges.append((u, v))
        else:
            raise GraphParseError(f"unknown line type {parts[0]!r}", line_number=number)

    if n is None:
        raise GraphParseError("missing 'p edge n m' header")
    return Graph.from_edges(edges, vertices=range(1, n + 1))


def detect_format(path: Path) -> str:
    return "dimacs" if path.suffix.lower() in (".clq", ".col", ".dimacs") else "edgelist"


def load_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Graph:
    """
    Load a graph file

    Args:
        path: File to read
        fmt (str): 'edgelist' or 'dimacs'; guessed from the suffix when omitted

    Returns:
        Graph: Loaded graph
    """
    path = Path(path)
    fmt = fmt or detect_format(path)
    if fmt not in FORMATS:
        raise GraphInputError(f"Unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")
    text = path.read_text(encoding="utf-8")
    g = parse_dimacs(text) if fmt == "dimacs" else parse_edgelist(text)
    logger.info("Loaded %s: %d vertices, %d edges", path.name, g.vertex_count, g.edge_count)
    return g


def format_edgelist(g: Graph) -> str:
    lines = [f"{a} {b}" for a, b in g.to_edges()]
    lines += [str(g.label(v)) for v in range(g.vertex_count) if g.degree(v) == 0]
    return "\n".join(lines) + ("\n" if lines else "")


def save_graph(g: Graph, path: Union[str, Path]) -> Path:
    """Write g as an edgelist; isolated vertices get a line of their own"""
    path = Path(path)
    path.write_text(format_edgelist(g), encoding="utf-8")
    return path


def fixture_names() -> List[str]:
    return sorted(FIXTURES)


def get_fixture_info(name: str) -> Dict:
    if name not in FIXTURES:
        raise GraphInputError(f"Unknown fixture {name!r}; available: {', '.join(fixture_names())}")
    return FIXTURES[name]


def fixture(name: str) -> Graph:
    """Load one of the bundled fixture graphs by name (case-insensitive)"""
    info = get_fixture_info(name.lower())
    return load_graph(get_settings().fixture_dir / info["file"], "edgelist")


def dataset_path(name: str) -> Path:
    if name not in DATASETS:
        raise GraphInputError(f"Unknown dataset {name!r}")
    return get_settings().data_dir / DATASETS[name]["file"]


def dataset_available(name: str) -> bool:
    return dataset_path(name).is_file()


def load_dataset(name: str) -> Graph:
    """Load a benchmark dataset from BURN_DATA_DIR"""
    path = dataset_path(name)
    if not path.is_file():
        raise GraphInputError(f"Dataset {name!r} not found at {path}")
    return load_graph(path, DATASETS[name]["format"])


def generate_graph(model: str, n: int, m: Optional[int] = None, seed: int = 0) -> Graph:
    """
    Generate a random graph

    Args:
        model (str): 'erdos_renyi' (n vertices, m edges), 'barabasi_albert'
            (m edges per new vertex) or 'random_tree' (uniform Prufer sequence)
        n (int): Vertex count
        m (int): Edge parameter, unused for random_tree
        seed (int): Same seed, same graph

    Returns:
        Graph: Vertices labelled 0..n-1
    """
    if model not in MODELS:
        raise GraphInputError(f"Unknown model {model!r}; expected one of {', '.join(MODELS)}")
    if n < 1:
        raise GraphInputError(f"n must be positive, got {n}")
    rng = random.Random(seed)

    if model == "random_tree":
        if n <= 2:
            h = nx.path_graph(n)
        else:
            h = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    else:
        if m is None:
            raise GraphInputError(f"{model} needs an edge parameter m")
        if model == "erdos_renyi":
            if not 0 <= m <= n * (n - 1) // 2:
                raise GraphInputError(f"Cannot place {m} edges on {n} vertices")
            h = nx.gnm_random_graph(n, m, seed=rng)
        else:
            if not 1 <= m < n:
                raise GraphInputError(f"Barabasi-Albert needs 1 <= m < n, got m={m}, n={n}")
            h = nx.barabasi_albert_graph(n, m, seed=rng)

    logger.debug("Generated %s n=%d m=%s seed=%d", model, n, m, seed)
    return Graph.from_networkx(h)
