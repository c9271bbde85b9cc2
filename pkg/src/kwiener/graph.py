"""Simple undirected graphs and BFS-based distance invariants.

Vertices are the integers ``0..n-1``. A :class:`Graph` is an immutable value:
operations that change the edge set return a new graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DisconnectedGraphError, GraphError

__all__ = [
    "Graph",
    "DistanceRow",
    "LayerProfile",
    "bfs_distances",
    "layer_profile",
    "status",
    "status_direct",
    "statuses",
    "eccentricity",
    "diameter",
    "wiener",
    "is_connected",
    "add_edge",
    "remove_edge",
    "complete_graph",
    "path_graph",
    "cycle_graph",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``. Use
    :meth:`from_edges` rather than building the adjacency by hand; the
    constructor validates symmetry, self-loops and index ranges either way.
    """

    n: int
    adjacency: tuple

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency must have one entry per vertex")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbours of {v} must be sorted and distinct")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range [0, {self.n})")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise GraphError(f"adjacency not symmetric for edge {{{v}, {u}}}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable; rejects loops, duplicates and bad indices."""
        if n < 1:
            raise GraphError(f"vertex count must be >= 1, got {n}")
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {{{u}, {v}}} has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge {{{min(u, v)}, {max(u, v)}}}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self.adjacency[u]

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adjacency)

    def _check_vertex(self, v):
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")


@dataclass(frozen=True)
class DistanceRow:
    """BFS distances from ``source``; unreachable vertices hold ``None``."""

    source: int
    dist: tuple

    def reachable(self) -> list[int]:
        return [v for v, d in enumerate(self.dist) if d is not None]


@dataclass(frozen=True)
class LayerProfile:
    """Sizes of the distance layers around ``source``.

    ``sizes[i]`` is the number of vertices at distance exactly ``i``; the
    last layer index is the eccentricity.
    """

    source: int
    sizes: tuple
    ecc: int

    def weighted_sum(self) -> int:
        return sum(i * s for i, s in enumerate(self.sizes))


def bfs_distances(g: Graph, x: int) -> DistanceRow:
    """Shortest-path distances from ``x`` to every vertex."""
    g._check_vertex(x)
    dist: list[Optional[int]] = [None] * g.n
    dist[x] = 0
    queue = deque([x])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] is None:
                dist[w] = du
                queue.append(w)
    return DistanceRow(x, tuple(dist))


def _connected_row(g: Graph, x: int) -> DistanceRow:
    row = bfs_distances(g, x)
    for v, d in enumerate(row.dist):
        if d is None:
            raise DisconnectedGraphError(v, source=x)
    return row


def layer_profile(g: Graph, x: int) -> LayerProfile:
    """Layer sizes ``|N(x, i)|`` for ``i = 0..ecc(x)``.

    Raises
    ------
    DisconnectedGraphError
        If some vertex cannot be reached from ``x``.
    """
    row = _connected_row(g, x)
    ecc = max(row.dist)
    sizes = [0] * (ecc + 1)
    for d in row.dist:
        sizes[d] += 1
    return LayerProfile(x, tuple(sizes), ecc)


def status_direct(g: Graph, x: int) -> int:
    """Status of ``x`` as the plain sum of its distances."""
    return sum(_connected_row(g, x).dist)


def status(g: Graph, x: int) -> int:
    """Status (transmission) of ``x``: the sum of distances to all vertices.

    Computed from the layer profile as ``sum(i * |N(x, i)|)``. While
    assertions are enabled the result is cross-checked against the direct
    distance sum.
    """
    profile = layer_profile(g, x)
    total = profile.weighted_sum()
    assert total == status_direct(g, x), f"layer sum disagrees with distance sum at {x}"
    return total


def statuses(g: Graph) -> list[int]:
    """Status of every vertex, in vertex order."""
    return [sum(_connected_row(g, x).dist) for x in range(g.n)]


def eccentricity(g: Graph, x: int) -> int:
    return max(_connected_row(g, x).dist)


def diameter(g: Graph) -> int:
    return max(eccentricity(g, x) for x in range(g.n))


def wiener(g: Graph) -> int:
    """Wiener index: sum of distances over unordered vertex pairs."""
    total = sum(statuses(g))
    # each unordered pair is counted from both ends
    assert total % 2 == 0
    return total // 2


def is_connected(g: Graph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0).dist)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return a copy of ``g`` with the edge ``{u, v}`` added."""
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise GraphError(f"duplicate edge {{{min(u, v)}, {max(u, v)}}}")
    return Graph.from_edges(g.n, g.edges() + [(u, v)])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {{{min(u, v)}, {max(u, v)}}}")
    e = (min(u, v), max(u, v))
    return Graph.from_edges(g.n, [f for f in g.edges() if f != e])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
