"""
Graph Burning Toolkit - Graph Core
Immutable undirected graphs and the BFS primitives every solver uses.

Internal vertex ids are contiguous 0..n-1 with sorted adjacency lists, so
every traversal (and every tie-break) is deterministic. The original
labels travel with the graph, including through vertex deletion.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from errors import GraphInputError, NoPathError

Label = Hashable
VertexSet = FrozenSet[int]
ComponentList = List[VertexSet]


@dataclass(frozen=True)
class Graph:
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Tuple[Label, ...]

    @classmethod
    def from_neighbor_sets(cls, labels: Sequence[Label], neighbors: Sequence[Iterable[int]]) -> "Graph":
        """Build a graph from per-vertex neighbour collections, dropping loops"""
        adjacency = tuple(
            tuple(sorted({u for u in nbrs if u != v})) for v, nbrs in enumerate(neighbors)
        )
        return cls(adjacency=adjacency, labels=tuple(labels))

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[Label, Label]], vertices: Iterable[Label] = ()) -> "Graph":
        """
        Build a graph from label pairs

        Self-loops and repeated edges are dropped. When every label is an int
        the internal ids follow numeric order, otherwise first appearance.

        Args:
            edges: Iterable of (label, label) pairs
            vertices: Extra labels, kept even when isolated

        Returns:
            Graph: The simple undirected graph
        """
        order: Dict[Label, None] = {}
        pairs = []
        for label in vertices:
            order.setdefault(label, None)
        for a, b in edges:
            order.setdefault(a, None)
            order.setdefault(b, None)
            pairs.append((a, b))

        labels = list(order)
        if labels and all(isinstance(x, int) and not isinstance(x, bool) for x in labels):
            labels.sort()
        index = {label: i for i, label in enumerate(labels)}

        neighbors = [set() for _ in labels]
        for a, b in pairs:
            if a == b:
                continue
            neighbors[index[a]].add(index[b])
            neighbors[index[b]].add(index[a])
        return cls.from_neighbor_sets(labels, neighbors)

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        return cls.from_edges(h.edges(), vertices=h.nodes())

    @property
    def vertex_count(self) -> int:
        return len(self.adjacency)

    @cached_property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    @cached_property
    def _index(self) -> Dict[Label, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def __len__(self) -> int:
        return len(self.adjacency)

    def is_empty(self) -> bool:
        return not self.adjacency

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def label(self, v: int) -> Label:
        return self.labels[v]

    def index_of(self, label: Label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphInputError(f"Unknown vertex label: {label!r}") from None

    def has_label(self, label: Label) -> bool:
        return label in self._index

    def to_edges(self) -> List[Tuple[Label, Label]]:
        """Edge list in original labels, each edge once"""
        return [
            (self.labels[u], self.labels[v])
            for u, nbrs in enumerate(self.adjacency)
            for v in nbrs
            if u < v
        ]

    def to_networkx(self) -> nx.Graph:
        """Copy into networkx using internal ids as nodes"""
        h = nx.Graph()
        h.add_nodes_from(range(self.vertex_count))
        h.add_edges_from((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)
        return h


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.vertex_count:
        raise GraphInputError(f"Vertex id {v} out of range for graph with {g.vertex_count} vertices")


def components(g: Graph, vertices: Optional[Iterable[int]] = None) -> ComponentList:
    """
    Connected components, ordered by their smallest vertex id

    Args:
        g (Graph): The graph
        vertices: Optional subset; components are then taken in the
            subgraph induced by this subset

    Returns:
        list: Disjoint frozensets of vertex ids
    """
    allowed = None if vertices is None else set(vertices)
    seen = set()
    result = []
    candidates = range(g.vertex_count) if allowed is None else sorted(allowed)
    for start in candidates:
        if start in seen:
            continue
        seen.add(start)
        members = [start]
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w in seen or (allowed is not None and w not in allowed):
                    continue
                seen.add(w)
                members.append(w)
                queue.append(w)
        result.append(frozenset(members))
    return result


def bfs_distances(g: Graph, source: int, limit: Optional[int] = None) -> List[int]:
    """BFS distance from source to every vertex, -1 when unreachable (or beyond limit)"""
    _check_vertex(g, source)
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if limit is not None and dist[u] >= limit:
            continue
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def closed_ball(g: Graph, v: int, r: int) -> VertexSet:
    """All vertices within distance r of v, v included"""
    _check_vertex(g, v)
    if r < 0:
        raise GraphInputError(f"Radius must be non-negative, got {r}")
    ball = {v}
    frontier = [v]
    for _ in range(r):
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in ball:
                    ball.add(w)
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return frozenset(ball)


def ball_size(g: Graph, v: int, r: int, excluding: VertexSet = frozenset()) -> int:
    """Size of the r-ball around v, not counting vertices in excluding"""
    return len(closed_ball(g, v, r) - excluding)


def subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    """Induced subgraph on the kept ids; survivors keep their relative order and labels"""
    kept = sorted(set(keep))
    remap = {old: new for new, old in enumerate(kept)}
    neighbors = [[remap[w] for w in g.adjacency[old] if w in remap] for old in kept]
    return Graph(
        adjacency=tuple(tuple(nbrs) for nbrs in neighbors),
        labels=tuple(g.labels[old] for old in kept),
    )


def induced_delete(g: Graph, s: Iterable[int]) -> Graph:
    """Remove the vertices in s and every incident edge"""
    removed = set(s)
    for v in removed:
        _check_vertex(g, v)
    return subgraph(g, (v for v in range(g.vertex_count) if v not in removed))


def shortest_path(g: Graph, u: int, v: int) -> List[int]:
    """
    BFS shortest path from u to v, both ends included

    Neighbours are expanded in ascending id order, so among equal-length
    paths the result is always the same one.

    Raises:
        NoPathError: u and v are in different components
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return [u]
    parent = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.adjacency[x]:
            if w in parent:
                continue
            parent[w] = x
            if w == v:
                path = [v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(w)
    raise NoPathError(f"No path between {g.label(u)!r} and {g.label(v)!r}")


def eccentricity(g: Graph, v: int) -> int:
    """Largest BFS distance from v inside its component"""
    return max(bfs_distances(g, v))


def _component_networkx(g: Graph, comp: VertexSet) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(sorted(comp))
    h.add_edges_from((u, w) for u in comp for w in g.adjacency[u] if u < w)
    return h


def component_radius(g: Graph, comp: VertexSet) -> int:
    """Radius of one connected component (networkx eccentricity bounding)"""
    if len(comp) == 1:
        return 0
    return nx.radius(_component_networkx(g, comp), usebounds=True)


def component_center(g: Graph, comp: VertexSet) -> int:
    """Lowest-id vertex of minimum eccentricity inside one component"""
    if len(comp) == 1:
        return next(iter(comp))
    return min(nx.center(_component_networkx(g, comp), usebounds=True))


def is_connected(g: Graph) -> bool:
    return g.vertex_count > 0 and len(components(g)) == 1


def is_forest(g: Graph) -> bool:
    return g.edge_count == g.vertex_count - len(components(g))
