"""Vertex connectivity by unit-capacity max-flow (Menger's theorem).

Each vertex ``v`` is split into an in-node ``2v`` and an out-node ``2v + 1``
joined by an arc of capacity one, so edge-disjoint paths in the split
network are internally vertex-disjoint paths in the graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import GraphError
from .graph import Graph, bfs_distances, is_connected

__all__ = [
    "VertexCut",
    "local_connectivity",
    "vertex_connectivity",
    "is_k_connected",
    "separates",
]


@dataclass(frozen=True)
class VertexCut:
    vertices: tuple
    separated_pair: tuple


class _SplitNetwork:
    """Residual network for the vertex-split graph. Scratch state is per call."""

    def __init__(self, g: Graph, s: int, t: int):
        self.size = 2 * g.n
        self.head = []
        self.cap = []
        self.out = [[] for _ in range(self.size)]
        big = g.n
        for v in range(g.n):
            self._arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in range(g.n):
            for v in g.adjacency[u]:
                self._arc(2 * u + 1, 2 * v, big)
        self.source = 2 * s + 1
        self.sink = 2 * t

    def _arc(self, a, b, c):
        # arc i and its reverse i ^ 1 are stored next to each other
        self.out[a].append(len(self.head))
        self.head.append(b)
        self.cap.append(c)
        self.out[b].append(len(self.head))
        self.head.append(a)
        self.cap.append(0)

    def augment(self) -> bool:
        parent = [-1] * self.size
        parent[self.source] = -2
        queue = deque([self.source])
        head, cap, out = self.head, self.cap, self.out
        while queue:
            a = queue.popleft()
            for i in out[a]:
                b = head[i]
                if cap[i] > 0 and parent[b] == -1:
                    parent[b] = i
                    if b == self.sink:
                        while b != self.source:
                            i = parent[b]
                            cap[i] -= 1
                            cap[i ^ 1] += 1
                            b = head[i ^ 1]
                        return True
                    queue.append(b)
        return False

    def reach(self, start, forward=True):
        seen = [False] * self.size
        seen[start] = True
        queue = deque([start])
        while queue:
            a = queue.popleft()
            for i in self.out[a]:
                b = self.head[i]
                # walking backwards uses the residual capacity of b -> a
                ok = self.cap[i] > 0 if forward else self.cap[i ^ 1] > 0
                if ok and not seen[b]:
                    seen[b] = True
                    queue.append(b)
        return seen


def _max_flow(g: Graph, s: int, t: int, limit: Optional[int] = None):
    net = _SplitNetwork(g, s, t)
    flow = 0
    while (limit is None or flow < limit) and net.augment():
        flow += 1
    return flow, net


def local_connectivity(g: Graph, s: int, t: int) -> tuple[int, VertexCut]:
    """Maximum number of internally vertex-disjoint ``s``-``t`` paths.

    Returns the path count together with a minimum ``s``-``t`` vertex cut of
    the same size. Of the two cuts read off the final residual network (the
    source side and the sink side), the lexicographically smaller one is
    returned.

    Raises
    ------
    GraphError
        If ``s == t`` or ``s`` and ``t`` are adjacent.
    """
    if s == t:
        raise GraphError("source and target must differ")
    if g.has_edge(s, t):
        raise GraphError(f"vertices {s} and {t} are adjacent; no vertex cut separates them")
    flow, net = _max_flow(g, s, t)
    src_side = net.reach(net.source, forward=True)
    sink_side = net.reach(net.sink, forward=False)
    cut_a = tuple(v for v in range(g.n) if src_side[2 * v] and not src_side[2 * v + 1])
    cut_b = tuple(v for v in range(g.n) if sink_side[2 * v + 1] and not sink_side[2 * v])
    cut = min(cut_a, cut_b)
    assert len(cut) == flow
    return flow, VertexCut(cut, (s, t))


def separates(g: Graph, cut, s: int, t: int) -> bool:
    """True when deleting ``cut`` leaves ``s`` and ``t`` in different components."""
    removed = set(cut)
    if s in removed or t in removed:
        return False
    keep = [v for v in range(g.n) if v not in removed]
    index = {v: i for i, v in enumerate(keep)}
    h = Graph.from_edges(
        len(keep), [(index[u], index[v]) for u, v in g.edges() if u in index and v in index]
    )
    return bfs_distances(h, index[s]).dist[index[t]] is None


def _candidate_pairs(g: Graph):
    v0 = min(range(g.n), key=lambda v: (len(g.adjacency[v]), v))
    nbrs = g.adjacency[v0]
    for u in range(g.n):
        if u != v0 and u not in nbrs:
            yield v0, u
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1:]:
            if b not in g.adjacency[a]:
                yield a, b


def vertex_connectivity(g: Graph) -> int:
    """Vertex connectivity of ``g``.

    A complete graph is ``(n-1)``-connected by convention; a disconnected
    graph has connectivity 0. Otherwise the minimum is taken over local
    connectivities between a minimum-degree vertex and each of its
    non-neighbours, and between non-adjacent pairs of its neighbours.
    """
    if g.n < 2:
        raise GraphError(f"connectivity needs at least 2 vertices, got {g.n}")
    if not is_connected(g):
        return 0
    if g.is_complete():
        return g.n - 1
    best = min(g.degrees())
    for a, b in _candidate_pairs(g):
        flow, _ = _max_flow(g, a, b, limit=best)
        best = min(best, flow)
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff ``g`` has at least ``k + 1`` vertices and connectivity >= ``k``."""
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    if g.n < k + 1 or min(g.degrees()) < k or not is_connected(g):
        return False
    if g.is_complete():
        return True
    return all(_max_flow(g, a, b, limit=k)[0] >= k for a, b in _candidate_pairs(g))
